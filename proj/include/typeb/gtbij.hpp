// Type B Gelfand-Tsetlin patterns and the transfer bijection with
// Pi_lambda.
//
// A pattern carries n^2 entries on the same cell grid plus an implicit top
// row r(i,i) = lambda_i. Entries weakly decrease towards the upper-left
// neighbor and dominate the upper-right one; entries off the rightmost
// column share lambda's congruence class mod 1, entries in the rightmost
// column may be arbitrary nonnegative half-integers.
#pragma once

#include "typeb/patterns.hpp"
#include "typeb/rational.hpp"
#include "typeb/rootsys.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace typeb {

struct GTPattern {
    int n = 0;
    BetaVec lambda;           // implicit top row
    std::vector<Rational> r;  // entries in << cell order

    Rational at(Cell c) const {
        if (c.j == c.i) return lambda[static_cast<std::size_t>(c.i) - 1];
        return r[static_cast<std::size_t>(cell_index(n, c))];
    }
    Rational& entry(Cell c) { return r[static_cast<std::size_t>(cell_index(n, c))]; }

    friend bool operator==(const GTPattern&, const GTPattern&) = default;
};

inline void require_pattern_shape(const GTPattern& R, const DominantWeight& w) {
    if (R.n != w.n || R.lambda != w.lambda || R.r.size() != static_cast<std::size_t>(R.n) * static_cast<std::size_t>(R.n))
        throw std::invalid_argument("pattern shape does not match weight");
}

// Conditions (1)-(3): nonnegative half-integers, congruent to lambda mod 1
// off the rightmost column; interlacing with the implicit top row; each
// entry at most its upper-left neighbor and, off the rightmost column, at
// least its upper-right neighbor.
inline bool validate_gt(const GTPattern& R, const DominantWeight& w) {
    require_pattern_shape(R, w);
    const int n = R.n;
    for (Cell c : cells(n)) {
        const Rational v = R.at(c);
        if (!is_half_integer(v) || v < 0) return false;
        if (!cell_short(n, c) && !congruent_mod_one(v, w.lambda[0])) return false;
        if (v > R.at(Cell{c.i, c.j - 1})) return false;  // upper-left (virtual on the top row)
        const Cell ur{c.i + 1, c.j};
        if (c.j - c.i == 1) {
            if (c.i < n && v < R.lambda[static_cast<std::size_t>(c.i)]) return false;
        } else if (cell_valid(n, ur) && v < R.at(ur)) {
            return false;
        }
    }
    return true;
}

// All of Gamma_lambda, enumerated one grid column at a time (j-i
// increasing) so that both neighbors that bound an entry are already
// fixed. Entries step by 1/2 on short cells and by 1 within lambda's
// congruence class elsewhere.
inline std::vector<GTPattern> enumerate_gt(const DominantWeight& w) {
    const int n = w.n;
    std::vector<Cell> order;  // by j-i, then i; distinct from << order
    for (int d = 1; d <= 2 * n - 1; ++d)
        for (Cell c : cells(n))
            if (c.j - c.i == d) order.push_back(c);

    std::vector<GTPattern> out;
    GTPattern R{n, w.lambda, std::vector<Rational>(static_cast<std::size_t>(n) * n, Rational(0))};
    const long long parity = ((to_long(Rational(2) * w.lambda[0]) % 2) + 2) % 2;  // doubled entries mod 2

    auto dfs = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            out.push_back(R);
            return;
        }
        const Cell c = order[k];
        const Rational ub = R.at(Cell{c.i, c.j - 1});
        Rational lb(0);
        if (c.j - c.i == 1) {
            if (c.i < n) lb = R.lambda[static_cast<std::size_t>(c.i)];
        } else if (const Cell ur{c.i + 1, c.j}; cell_valid(n, ur)) {
            lb = R.at(ur);
        }
        long long lo = to_long(lb * 2), hi = to_long(ub * 2);
        long long step = 1;
        if (!cell_short(n, c)) {
            step = 2;
            if (((lo % 2) + 2) % 2 != parity) ++lo;
        }
        for (long long v = lo; v <= hi; v += step) {
            R.entry(c) = Rational(v, 2);
            self(self, k + 1);
        }
        R.entry(c) = 0;
    };
    dfs(dfs, 0);
    return out;
}

namespace detail {
inline bool gt_conditions_hold(const GTPattern& R) {
    DominantWeight w;
    w.n = R.n;
    w.lambda = R.lambda;
    GTPattern copy = R;
    return validate_gt(copy, w);
}
}  // namespace detail

// The map F: each entry becomes the drop from the smaller of its upper-left
// and bottom-left neighbors, doubled on the rightmost column.
inline Triangle f_map(const GTPattern& R) {
    if (!detail::gt_conditions_hold(R)) throw std::invalid_argument("f_map: pattern violates the GT conditions");
    const int n = R.n;
    Triangle T = Triangle::zero(n);
    for (Cell c : cells(n)) {
        Rational m = R.at(Cell{c.i, c.j - 1});                          // upper-left
        if (c.i > 1) m = std::min(m, R.at(Cell{c.i - 1, c.j}));         // bottom-left
        Rational v = m - R.at(c);
        if (cell_short(n, c)) v *= 2;
        T.at(c) = to_long(v);
    }
    return T;
}

// The inverse map G by dynamic programming over partial Dyck paths:
// g(i,j) = min(start at lambda_i when j = i+1, value at (i,j-1), value at
// (i-1,j)) minus the weighted triangle entry. Equals the minimum of
// lambda_{i_1} - S(T,d) over all partial Dyck paths ending at (i,j).
inline GTPattern g_map(const Triangle& T, const DominantWeight& w) {
    require_triangle(T);
    require_same_rank(T.n, w.n);
    if (!in_pi(T, w)) throw std::invalid_argument("g_map: triangle is not in Pi_lambda");
    const int n = T.n;
    GTPattern R{n, w.lambda, std::vector<Rational>(static_cast<std::size_t>(n) * n, Rational(0))};
    for (Cell c : cells(n)) {
        std::optional<Rational> m;
        auto consider = [&](const Rational& v) {
            if (!m || v < *m) m = v;
        };
        if (c.j - c.i == 1) consider(w.lambda[static_cast<std::size_t>(c.i) - 1]);
        if (cell_valid(n, Cell{c.i, c.j - 1})) consider(R.at(Cell{c.i, c.j - 1}));
        if (cell_valid(n, Cell{c.i - 1, c.j})) consider(R.at(Cell{c.i - 1, c.j}));
        R.entry(c) = *m - Rational(T.at(c)) / (cell_short(n, c) ? 2 : 1);
    }
    return R;
}

}  // namespace typeb
