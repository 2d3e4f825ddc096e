// Spin module construction, representation validation, and highest-weight
// cyclic submodules realizing arbitrary irreducibles.
#pragma once

#include "typeb/pbw.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace typeb {

// Checks the representation property against the extracted structure
// constants, that every f_c shifts weights by -root(c), and that the
// simple raising operators annihilate the designated highest label.
// Throws std::logic_error on the first violation.
inline void validate_representation(const RepModule& m, const StructureConstants& sc) {
    const int n = m.n;
    require_same_rank(n, sc.rank());
    const auto cs = cells(n);
    for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = 0; b < cs.size(); ++b) {
            if (a == b) continue;
            const SparseColumns comm = commutator(m.lower[a], m.lower[b]);
            const auto& br = sc.bracket(static_cast<int>(a), static_cast<int>(b));
            const bool ok = br ? columns_equal(comm, columns_scaled(m.lower[static_cast<std::size_t>(br->first)], br->second))
                               : columns_zero(comm);
            if (!ok)
                throw std::logic_error("representation violates [f_" + cell_to_string(cs[a]) + ", f_" +
                                       cell_to_string(cs[b]) + "]");
        }
    for (Cell c : cs) {
        const BetaVec alpha = root_of_cell(n, c);
        const SparseColumns& cols = m.lower[static_cast<std::size_t>(cell_index(n, c))];
        for (std::size_t b = 0; b < m.dim(); ++b)
            for (const auto& [t, coeff] : cols[b].entries)
                for (std::size_t k = 0; k < alpha.size(); ++k)
                    if (m.weight[static_cast<std::size_t>(t)][k] != m.weight[b][k] - alpha[k])
                        throw std::logic_error("f_" + cell_to_string(c) + " does not lower weight by its root");
    }
    for (const auto& cols : m.raise)
        if (!cols[static_cast<std::size_t>(m.highest)].is_zero())
            throw std::logic_error("raising operator does not annihilate the highest label");
}

namespace detail {

// Fermionic ladder operators on the 2^n spin labels. Bit k-1 of a basis
// index is I_k; the sign is the parity of the occupied positions before
// the flipped one.
inline SparseColumns fermion_op(int n, int k, bool create) {
    const std::size_t dim = std::size_t{1} << n;
    SparseColumns cols(dim);
    const unsigned bit = 1u << (k - 1);
    for (std::size_t b = 0; b < dim; ++b) {
        const bool occupied = (b & bit) != 0;
        if (occupied == create) continue;
        int sign = 1;
        for (int l = 1; l < k; ++l)
            if (b & (1u << (l - 1))) sign = -sign;
        cols[b].add_term(static_cast<int>(b ^ bit), sign);
    }
    return cols;
}

inline SparseColumns compose(const SparseColumns& A, const SparseColumns& B) {
    SparseColumns out(B.size());
    for (std::size_t b = 0; b < B.size(); ++b) out[b] = apply_columns(A, B[b]);
    return out;
}

}  // namespace detail

// The 2^n-dimensional spin module L_{omega_n}. Simple operators come from
// an explicit fermionic sign rule; every other f_{i,j} is generated as the
// bracket word forced by the structure constants. The construction is
// certified against the full bracket table and fails loudly otherwise.
inline RepModule spin_rep(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    const StructureConstants sc = StructureConstants::compute(n);
    const auto cs = cells(n);

    RepModule m;
    m.n = n;
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t b = 0; b < dim; ++b) {
        std::string label = "I(";
        BetaVec wt(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k) {
            const bool occ = (b >> (k - 1)) & 1;
            if (k > 1) label += ",";
            label += occ ? "1" : "0";
            wt[static_cast<std::size_t>(k) - 1] = Rational(occ ? -1 : 1, 2);
        }
        label += ")";
        m.labels.push_back(std::move(label));
        m.weight.push_back(std::move(wt));
    }
    m.highest = 0;

    m.lower.assign(cs.size(), SparseColumns{});
    for (int k = 1; k < n; ++k)
        m.lower[static_cast<std::size_t>(cell_index(n, simple_cell(n, k)))] =
            detail::compose(detail::fermion_op(n, k, true), detail::fermion_op(n, k + 1, false));
    m.lower[static_cast<std::size_t>(cell_index(n, simple_cell(n, n)))] = detail::fermion_op(n, n, true);

    for (int k = 1; k < n; ++k)
        m.raise.push_back(detail::compose(detail::fermion_op(n, k + 1, true), detail::fermion_op(n, k, false)));
    m.raise.push_back(detail::fermion_op(n, n, false));

    // Generate the non-simple lowering operators in root-height order.
    std::map<BetaVec, int> cell_of_root;
    for (std::size_t e = 0; e < cs.size(); ++e) cell_of_root.emplace(root_of_cell(n, cs[e]), static_cast<int>(e));
    const auto height = [&](Cell c) {
        if (c.j <= n) return c.j - c.i;
        if (cell_short(n, c)) return n - c.i + 1;
        return c.j - c.i + 1;
    };
    std::vector<std::size_t> order(cs.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return height(cs[a]) < height(cs[b]); });

    for (std::size_t idx : order) {
        const Cell c = cs[idx];
        if (height(c) == 1) continue;
        const BetaVec target = root_of_cell(n, c);
        bool built = false;
        for (int k = 1; k <= n && !built; ++k) {
            const int s = cell_index(n, simple_cell(n, k));
            const BetaVec salpha = root_of_cell(n, cs[static_cast<std::size_t>(s)]);
            BetaVec rest = target;
            for (std::size_t q = 0; q < rest.size(); ++q) rest[q] -= salpha[q];
            const auto it = cell_of_root.find(rest);
            if (it == cell_of_root.end()) continue;
            const auto& br = sc.bracket(s, it->second);
            if (!br || br->first != static_cast<int>(idx)) continue;
            if (m.lower[static_cast<std::size_t>(it->second)].empty()) continue;  // not generated yet
            SparseColumns comm = commutator(m.lower[static_cast<std::size_t>(s)],
                                            m.lower[static_cast<std::size_t>(it->second)]);
            m.lower[idx] = columns_scaled(std::move(comm), Rational(1) / br->second);
            built = true;
        }
        if (!built) throw std::logic_error("spin_rep: no bracket word generates f_" + cell_to_string(c));
    }

    validate_representation(m, sc);
    return m;
}

struct IrredModule {
    RepModule mod;
    ModVec highest;
};

inline BetaVec weight_of_vec(const RepModule& m, const ModVec& v) {
    if (v.is_zero()) throw std::invalid_argument("weight of zero vector");
    const BetaVec& wt = m.weight[static_cast<std::size_t>(v.entries.begin()->first)];
    for (const auto& [b, c] : v.entries)
        if (m.weight[static_cast<std::size_t>(b)] != wt) throw std::logic_error("vector is not weight-homogeneous");
    return wt;
}

// Realizes L_lambda as the cyclic submodule U(n^-) v_0 inside the tensor
// product of fundamental factors: wedge powers of the vector representation
// for a_1..a_{n-1}, wedge^n per pair of a_n, and one spin factor when a_n
// is odd. Closure iterates the simple lowering operators only. The
// dimension must come out equal to weyl_dim, anything else throws.
inline IrredModule irreducible_module(const DominantWeight& w) {
    const int n = w.n;
    if (w.is_zero()) {
        RepModule m;
        m.n = n;
        m.labels = {"1"};
        m.highest = 0;
        m.weight = {BetaVec(static_cast<std::size_t>(n), Rational(0))};
        m.lower.assign(static_cast<std::size_t>(n) * n, SparseColumns(1));
        m.raise.assign(static_cast<std::size_t>(n), SparseColumns(1));
        return {std::move(m), ModVec::unit(0)};
    }

    const RepModule vec = vector_rep(n);
    std::vector<RepModule> factors;
    for (int i = 1; i < n; ++i) {
        if (w.a[static_cast<std::size_t>(i) - 1] == 0) continue;
        const RepModule f = i == 1 ? vec : exterior_power(vec, i);
        for (long long k = 0; k < w.a[static_cast<std::size_t>(i) - 1]; ++k) factors.push_back(f);
    }
    const long long an = w.a[static_cast<std::size_t>(n) - 1];
    if (an / 2 > 0) {
        const RepModule wn = exterior_power(vec, n);
        for (long long k = 0; k < an / 2; ++k) factors.push_back(wn);
    }
    if (an % 2 == 1) factors.push_back(spin_rep(n));

    const Int expected = weyl_dim(w);
    if (factors.size() == 1) {
        RepModule m = std::move(factors.front());
        if (Int(m.dim()) != expected) throw std::logic_error("irreducible_module: dimension mismatch");
        const int hi = m.highest;
        return {std::move(m), ModVec::unit(hi)};
    }

    const RepModule ambient = tensor(factors);
    const ModVec v0 = ModVec::unit(ambient.highest);

    SpanBasis<int> span;
    std::deque<ModVec> queue;
    span.insert(v0);
    queue.push_back(v0);
    while (!queue.empty()) {
        const ModVec v = std::move(queue.front());
        queue.pop_front();
        for (int k = 1; k <= n; ++k) {
            ModVec img = apply_cell(ambient, simple_cell(n, k), v);
            if (img.is_zero()) continue;
            auto outcome = span.insert(std::move(img));
            if (outcome.inserted) queue.push_back(std::move(outcome.residual));
        }
    }
    if (Int(span.rank()) != expected) throw std::logic_error("irreducible_module: dimension mismatch");

    RepModule m;
    m.n = n;
    std::vector<const ModVec*> rows;
    std::map<int, int> row_of_pivot;
    for (const auto& [pivot, row] : span.rows()) {
        row_of_pivot.emplace(pivot, static_cast<int>(rows.size()));
        rows.push_back(&row);
        m.labels.push_back(ambient.labels[static_cast<std::size_t>(pivot)]);
        m.weight.push_back(weight_of_vec(ambient, row));
    }
    m.highest = row_of_pivot.at(ambient.highest);

    const auto restrict_op = [&](const SparseColumns& ambient_cols) {
        SparseColumns cols(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const ModVec img = apply_columns(ambient_cols, *rows[r]);
            const auto coeffs = span.express(img);
            if (!coeffs) throw std::logic_error("irreducible_module: submodule not invariant");
            for (const auto& [pivot, c] : *coeffs) cols[r].add_term(row_of_pivot.at(pivot), c);
        }
        return cols;
    };
    for (const auto& cols : ambient.lower) m.lower.push_back(restrict_op(cols));
    for (const auto& cols : ambient.raise) m.raise.push_back(restrict_op(cols));

    ModVec highest = ModVec::unit(m.highest);
    return {std::move(m), std::move(highest)};
}

}  // namespace typeb
