// Explicit finite-dimensional so(2n+1)-modules with exact sparse matrices.
//
// A RepModule stores, per cell, the matrix of the lowering operator f_cell
// as sparse columns (image of each basis vector), the n simple raising
// operators, and the beta-weight of every basis label. Modules are
// immutable once built.
#pragma once

#include "typeb/rational.hpp"
#include "typeb/rootsys.hpp"
#include "typeb/sparse.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace typeb {

using ModVec = SparseVec<int>;
using SparseColumns = std::vector<ModVec>;  // column b = image of basis vector b

struct RepModule {
    int n = 0;
    std::vector<std::string> labels;
    int highest = 0;                          // designated highest-weight basis label
    std::vector<BetaVec> weight;              // per basis label
    std::vector<SparseColumns> lower;         // [cell_index][basis]
    std::vector<SparseColumns> raise;         // [k-1][basis], simple raising e_k

    std::size_t dim() const { return labels.size(); }
};

inline ModVec apply_columns(const SparseColumns& cols, const ModVec& v) {
    ModVec out;
    for (const auto& [b, c] : v.entries) out.add_scaled(cols[static_cast<std::size_t>(b)], c);
    return out;
}

inline ModVec apply_cell(const RepModule& m, Cell c, const ModVec& v) {
    return apply_columns(m.lower[static_cast<std::size_t>(cell_index(m.n, c))], v);
}

// Rightmost factor acts first.
inline ModVec apply_cells(const RepModule& m, std::span<const Cell> factors, const ModVec& v) {
    ModVec cur = v;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) cur = apply_cell(m, *it, cur);
    return cur;
}

// [A,B] as columns.
inline SparseColumns commutator(const SparseColumns& A, const SparseColumns& B) {
    SparseColumns out(A.size());
    for (std::size_t b = 0; b < A.size(); ++b) {
        out[b] = apply_columns(A, B[b]);
        out[b].add_scaled(apply_columns(B, A[b]), -1);
    }
    return out;
}

inline bool columns_zero(const SparseColumns& A) {
    return std::all_of(A.begin(), A.end(), [](const ModVec& v) { return v.is_zero(); });
}

inline bool columns_equal(const SparseColumns& A, const SparseColumns& B) { return A == B; }

inline SparseColumns columns_scaled(SparseColumns A, const Rational& c) {
    for (auto& col : A) col.scale(c);
    return A;
}

// The (2n+1)-dimensional vector representation on e_{-n},...,e_n:
//   f_{i,j}        (j <= n):      e_i -> e_j,    e_{-j} -> -e_{-i}
//   f_{i,2n+1-j}   (i < j <= n):  e_i -> e_{-j}, e_j    -> -e_{-i}
//   f_{i,2n+1-i}:                 e_i -> e_0,    e_0    -> -2e_{-i}
inline RepModule vector_rep(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    RepModule m;
    m.n = n;
    const int dim = 2 * n + 1;
    const auto idx = [&](int k) { return k + n; };  // e_k at position k+n
    for (int k = -n; k <= n; ++k) {
        m.labels.push_back("e(" + std::to_string(k) + ")");
        BetaVec wt(static_cast<std::size_t>(n), Rational(0));
        if (k != 0) wt[static_cast<std::size_t>(std::abs(k)) - 1] = k > 0 ? 1 : -1;
        m.weight.push_back(std::move(wt));
    }
    m.highest = idx(1);

    m.lower.assign(static_cast<std::size_t>(n) * n, SparseColumns(static_cast<std::size_t>(dim)));
    for (Cell c : cells(n)) {
        SparseColumns& cols = m.lower[static_cast<std::size_t>(cell_index(n, c))];
        const int i = c.i;
        if (c.j <= n) {
            const int j = c.j;
            cols[static_cast<std::size_t>(idx(i))].add_term(idx(j), 1);
            cols[static_cast<std::size_t>(idx(-j))].add_term(idx(-i), -1);
        } else if (!cell_short(n, c)) {
            const int j = 2 * n + 1 - c.j;
            cols[static_cast<std::size_t>(idx(i))].add_term(idx(-j), 1);
            cols[static_cast<std::size_t>(idx(j))].add_term(idx(-i), -1);
        } else {
            cols[static_cast<std::size_t>(idx(i))].add_term(idx(0), 1);
            cols[static_cast<std::size_t>(idx(0))].add_term(idx(-i), -2);
        }
    }

    m.raise.assign(static_cast<std::size_t>(n), SparseColumns(static_cast<std::size_t>(dim)));
    for (int k = 1; k < n; ++k) {
        SparseColumns& cols = m.raise[static_cast<std::size_t>(k) - 1];
        cols[static_cast<std::size_t>(idx(k + 1))].add_term(idx(k), 1);
        cols[static_cast<std::size_t>(idx(-k))].add_term(idx(-(k + 1)), -1);
    }
    SparseColumns& en = m.raise[static_cast<std::size_t>(n) - 1];
    en[static_cast<std::size_t>(idx(0))].add_term(idx(n), 2);
    en[static_cast<std::size_t>(idx(-n))].add_term(idx(0), -1);
    return m;
}

namespace detail {

// Extends an operator given by columns on the base module to the exterior
// power basis (sorted index tuples) as a derivation; signs come from
// sorting the modified slot back into place.
inline SparseColumns wedge_extend(const SparseColumns& base, const std::vector<std::vector<int>>& tuples,
                                  const std::map<std::vector<int>, int>& index_of) {
    SparseColumns out(tuples.size());
    std::vector<int> scratch;
    for (std::size_t b = 0; b < tuples.size(); ++b) {
        const auto& tup = tuples[b];
        for (std::size_t slot = 0; slot < tup.size(); ++slot) {
            for (const auto& [target, c] : base[static_cast<std::size_t>(tup[slot])].entries) {
                bool repeated = false;
                for (std::size_t s = 0; s < tup.size(); ++s)
                    if (s != slot && tup[s] == target) { repeated = true; break; }
                if (repeated) continue;
                scratch = tup;
                scratch[slot] = target;
                int sign = 1;
                std::size_t p = slot;
                while (p + 1 < scratch.size() && scratch[p] > scratch[p + 1]) {
                    std::swap(scratch[p], scratch[p + 1]);
                    ++p;
                    sign = -sign;
                }
                while (p > 0 && scratch[p - 1] > scratch[p]) {
                    std::swap(scratch[p - 1], scratch[p]);
                    --p;
                    sign = -sign;
                }
                out[b].add_term(index_of.at(scratch), c * sign);
            }
        }
    }
    return out;
}

}  // namespace detail

// Exterior power: basis labels are increasing index tuples of the base
// module, actions extend as derivations with alternating signs. The
// designated highest label is the raising-annihilated basis label of
// largest weight.
inline RepModule exterior_power(const RepModule& base, int l) {
    if (l < 1 || static_cast<std::size_t>(l) > base.dim())
        throw std::invalid_argument("exterior power degree out of range");
    RepModule m;
    m.n = base.n;

    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == l) {
            tuples.push_back(cur);
            return;
        }
        for (int b = from; b < static_cast<int>(base.dim()); ++b) {
            cur.push_back(b);
            self(self, b + 1);
            cur.pop_back();
        }
    };
    gen(gen, 0);
    std::map<std::vector<int>, int> index_of;
    for (std::size_t k = 0; k < tuples.size(); ++k) index_of.emplace(tuples[k], static_cast<int>(k));

    for (const auto& tup : tuples) {
        std::string label;
        BetaVec wt(static_cast<std::size_t>(m.n), Rational(0));
        for (std::size_t s = 0; s < tup.size(); ++s) {
            if (s) label += "^";
            label += base.labels[static_cast<std::size_t>(tup[s])];
            for (std::size_t k = 0; k < wt.size(); ++k) wt[k] += base.weight[static_cast<std::size_t>(tup[s])][k];
        }
        m.labels.push_back(std::move(label));
        m.weight.push_back(std::move(wt));
    }

    for (const auto& cols : base.lower) m.lower.push_back(detail::wedge_extend(cols, tuples, index_of));
    for (const auto& cols : base.raise) m.raise.push_back(detail::wedge_extend(cols, tuples, index_of));

    const BetaVec rho = weyl_vector(m.n);
    bool found = false;
    Rational best;
    for (std::size_t b = 0; b < m.dim(); ++b) {
        bool killed = true;
        for (const auto& cols : m.raise)
            if (!cols[b].is_zero()) { killed = false; break; }
        if (!killed) continue;
        const Rational h = dot(m.weight[b], rho);
        if (!found || h > best) {
            best = h;
            m.highest = static_cast<int>(b);
            found = true;
        }
    }
    if (!found) throw std::logic_error("exterior_power: no raising-annihilated basis label");
    return m;
}

// Tensor product: basis labels are tuples, actions by the Leibniz rule,
// designated highest is the tensor of the factor highests.
inline RepModule tensor(const std::vector<const RepModule*>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor of zero modules");
    if (factors.size() == 1) return *factors[0];
    const int n = factors[0]->n;
    for (const auto* f : factors) require_same_rank(n, f->n);

    RepModule m;
    m.n = n;
    std::size_t dim = 1;
    for (const auto* f : factors) dim *= f->dim();

    std::vector<std::size_t> stride(factors.size(), 1);
    for (std::size_t k = factors.size(); k-- > 1;) stride[k - 1] = stride[k] * factors[k]->dim();

    for (std::size_t b = 0; b < dim; ++b) {
        std::string label;
        BetaVec wt(static_cast<std::size_t>(n), Rational(0));
        for (std::size_t k = 0; k < factors.size(); ++k) {
            const std::size_t part = (b / stride[k]) % factors[k]->dim();
            if (k) label += "⊗";
            label += factors[k]->labels[part];
            for (std::size_t q = 0; q < wt.size(); ++q) wt[q] += factors[k]->weight[part][q];
        }
        m.labels.push_back(std::move(label));
        m.weight.push_back(std::move(wt));
    }

    long long highest = 0;
    for (std::size_t k = 0; k < factors.size(); ++k)
        highest += static_cast<long long>(factors[k]->highest) * static_cast<long long>(stride[k]);
    m.highest = static_cast<int>(highest);

    auto leibniz = [&](auto pick) {
        SparseColumns cols(dim);
        for (std::size_t b = 0; b < dim; ++b) {
            for (std::size_t k = 0; k < factors.size(); ++k) {
                const std::size_t part = (b / stride[k]) % factors[k]->dim();
                const ModVec& img = pick(k)[part];
                for (const auto& [t, c] : img.entries) {
                    const std::size_t nb = b + (static_cast<std::size_t>(t) - part) * stride[k];
                    cols[b].add_term(static_cast<int>(nb), c);
                }
            }
        }
        return cols;
    };

    for (Cell c : cells(n)) {
        const std::size_t ci = static_cast<std::size_t>(cell_index(n, c));
        m.lower.push_back(leibniz([&](std::size_t k) -> const SparseColumns& { return factors[k]->lower[ci]; }));
    }
    for (int k = 1; k <= n; ++k)
        m.raise.push_back(
            leibniz([&](std::size_t f) -> const SparseColumns& { return factors[f]->raise[static_cast<std::size_t>(k) - 1]; }));
    return m;
}

inline RepModule tensor(const std::vector<RepModule>& factors) {
    std::vector<const RepModule*> ptrs;
    ptrs.reserve(factors.size());
    for (const auto& f : factors) ptrs.push_back(&f);
    return tensor(ptrs);
}

}  // namespace typeb
