// Number triangles, Dyck paths, and the weighted-path polytope Pi_lambda.
//
// A Dyck path starts in the top row (j-i = 1), each step moves to the
// bottom-right neighbor (i, j+1) or the upper-right neighbor (i+1, j), and
// the path may end at any cell in the top row or in the rightmost column
// (i+j = 2n+1). Short cells have no successors, so they only ever appear
// as final cells and carry weight 1/2 in all path sums.
#pragma once

#include "typeb/rational.hpp"
#include "typeb/rootsys.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace typeb {

struct Triangle {
    int n = 0;
    std::vector<long long> t;  // entries in << cell order, all >= 0

    static Triangle zero(int n) {
        return Triangle{n, std::vector<long long>(static_cast<std::size_t>(n) * n, 0)};
    }

    long long at(Cell c) const { return t[static_cast<std::size_t>(cell_index(n, c))]; }
    long long& at(Cell c) { return t[static_cast<std::size_t>(cell_index(n, c))]; }

    friend bool operator==(const Triangle&, const Triangle&) = default;
    // Lexicographic by entries in << cell order; container/report ordering.
    friend bool operator<(const Triangle& a, const Triangle& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.t < b.t;
    }
};

inline void require_triangle(const Triangle& T) {
    if (T.n < 1 || T.t.size() != static_cast<std::size_t>(T.n) * static_cast<std::size_t>(T.n))
        throw std::invalid_argument("triangle has wrong shape");
    for (long long v : T.t)
        if (v < 0) throw std::invalid_argument("triangle entries must be nonnegative");
}

inline bool valid_step(Cell from, Cell to) {
    return (to == Cell{from.i, from.j + 1}) || (to == Cell{from.i + 1, from.j});
}

inline bool is_partial_dyck_path(int n, std::span<const Cell> steps) {
    if (steps.empty()) return false;
    if (steps.front().j - steps.front().i != 1) return false;
    for (Cell c : steps)
        if (!cell_valid(n, c)) return false;
    for (std::size_t k = 0; k + 1 < steps.size(); ++k)
        if (!valid_step(steps[k], steps[k + 1])) return false;
    return true;
}

inline bool is_dyck_path(int n, std::span<const Cell> steps) {
    if (!is_partial_dyck_path(n, steps)) return false;
    const Cell last = steps.back();
    return last.j - last.i == 1 || cell_short(n, last);
}

struct DyckPath {
    int n = 0;
    std::vector<Cell> steps;

    DyckPath(int rank, std::vector<Cell> s) : n(rank), steps(std::move(s)) {
        if (!is_dyck_path(n, steps)) throw std::invalid_argument("not a Dyck path");
    }
};

struct PartialDyckPath {
    int n = 0;
    std::vector<Cell> steps;

    PartialDyckPath(int rank, std::vector<Cell> s) : n(rank), steps(std::move(s)) {
        if (!is_partial_dyck_path(n, steps)) throw std::invalid_argument("not a partial Dyck path");
    }
};

// Complete duplicate-free list, DFS order: starts by row, bottom-right
// extension before upper-right.
inline std::vector<DyckPath> dyck_paths(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    std::vector<DyckPath> out;
    std::vector<Cell> walk;
    auto dfs = [&](auto&& self, Cell c) -> void {
        walk.push_back(c);
        if (c.j - c.i == 1 || cell_short(n, c)) out.emplace_back(n, walk);
        for (Cell next : {Cell{c.i, c.j + 1}, Cell{c.i + 1, c.j}})
            if (cell_valid(n, next)) self(self, next);
        walk.pop_back();
    };
    for (int i = 1; i <= n; ++i) dfs(dfs, Cell{i, i + 1});
    return out;
}

// Weighted path sum: each step contributes its triangle entry, halved on
// short cells. Applies to both full and partial paths.
inline Rational s_sum(const Triangle& T, std::span<const Cell> steps) {
    Rational s(0);
    for (Cell c : steps) {
        require_cell(T.n, c);
        s += Rational(T.at(c)) / (cell_short(T.n, c) ? 2 : 1);
    }
    return s;
}

inline Rational s_sum(const Triangle& T, const DyckPath& d) {
    require_same_rank(T.n, d.n);
    return s_sum(T, std::span<const Cell>(d.steps));
}

inline Rational s_sum(const Triangle& T, const PartialDyckPath& d) {
    require_same_rank(T.n, d.n);
    return s_sum(T, std::span<const Cell>(d.steps));
}

// lambda_{i_1} - lambda_{j_N} for paths ending in the top row short of the
// rightmost column, lambda_{i_1} for paths ending in the rightmost column.
inline Rational m_bound(const DominantWeight& w, const DyckPath& d) {
    require_same_rank(w.n, d.n);
    const Cell first = d.steps.front(), last = d.steps.back();
    if (cell_short(w.n, last)) return w.lambda[static_cast<std::size_t>(first.i) - 1];
    return w.lambda[static_cast<std::size_t>(first.i) - 1] - w.lambda[static_cast<std::size_t>(last.j) - 1];
}

// Membership in Pi_lambda by dynamic programming, O(n^2) per call.
//
// W(i,j) = max over partial paths ending at the (long) cell (i,j) of the
// full-weight sum minus lambda at the start row. Ends are tested at long
// top-row cells (against lambda_{i+1}) and at short cells (predecessor max
// plus half the short entry). Agrees with the all-paths brute force check.
inline bool in_pi(const Triangle& T, const DominantWeight& w) {
    require_triangle(T);
    require_same_rank(T.n, w.n);
    const int n = T.n;
    std::vector<Rational> W(static_cast<std::size_t>(n) * n);
    for (Cell c : cells(n)) {
        std::optional<Rational> best;
        auto consider = [&](const Rational& v) {
            if (!best || v > *best) best = v;
        };
        if (c.j - c.i == 1) consider(-w.lambda[static_cast<std::size_t>(c.i) - 1]);
        if (cell_valid(n, Cell{c.i, c.j - 1})) consider(W[static_cast<std::size_t>(cell_index(n, {c.i, c.j - 1}))]);
        if (cell_valid(n, Cell{c.i - 1, c.j})) consider(W[static_cast<std::size_t>(cell_index(n, {c.i - 1, c.j}))]);
        if (cell_short(n, c)) {
            if (*best + Rational(T.at(c), 2) > 0) return false;
        } else {
            const Rational v = *best + T.at(c);
            if (c.j - c.i == 1 && v + w.lambda[static_cast<std::size_t>(c.j) - 1] > 0) return false;
            W[static_cast<std::size_t>(cell_index(n, c))] = v;
        }
    }
    return true;
}

// Complete list of Pi_lambda in lexicographic order (entries in << cell
// order). DFS assigns one cell at a time; the sums S are monotone in every
// entry, so a violated prefix can be cut and values scan upward until the
// first violation.
inline std::vector<Triangle> enumerate_pi(const DominantWeight& w) {
    const int total = w.n * w.n;
    std::vector<Triangle> out;
    Triangle T = Triangle::zero(w.n);
    auto dfs = [&](auto&& self, int k) -> void {
        if (k == total) {
            out.push_back(T);
            return;
        }
        for (long long v = 0;; ++v) {
            T.t[static_cast<std::size_t>(k)] = v;
            if (!in_pi(T, w)) break;
            self(self, k + 1);
        }
        T.t[static_cast<std::size_t>(k)] = 0;
    };
    if (in_pi(T, w)) dfs(dfs, 0);
    return out;
}

// Weighted degree: entries count 1, short entries count 1/2.
inline Rational grad_of(const Triangle& T) {
    Rational g(0);
    for (Cell c : cells(T.n)) g += Rational(T.at(c)) / (cell_short(T.n, c) ? 2 : 1);
    return g;
}

// H-representation of P_lambda: one row per Dyck path (weighted incidence
// coefficients, right-hand side M(lambda,d)) followed by n^2 nonnegativity
// rows. Lattice points of the system are exactly enumerate_pi(lambda).
struct HRep {
    std::vector<Cell> vars;  // << cell order
    struct Row {
        std::vector<Rational> coeffs;
        Rational rhs;
    };
    std::vector<Row> rows;  // coeffs . x <= rhs
};

inline HRep polytope_h_rep(const DominantWeight& w) {
    const int n = w.n;
    HRep h;
    h.vars = cells(n);
    for (const DyckPath& d : dyck_paths(n)) {
        HRep::Row row{std::vector<Rational>(h.vars.size(), Rational(0)), Rational(0)};
        for (Cell c : d.steps)
            row.coeffs[static_cast<std::size_t>(cell_index(n, c))] = cell_short(n, c) ? Rational(1, 2) : Rational(1);
        row.rhs = m_bound(w, d);
        h.rows.push_back(std::move(row));
    }
    for (std::size_t k = 0; k < h.vars.size(); ++k) {
        HRep::Row row{std::vector<Rational>(h.vars.size(), Rational(0)), Rational(0)};
        row.coeffs[k] = -1;
        h.rows.push_back(std::move(row));
    }
    return h;
}

}  // namespace typeb
