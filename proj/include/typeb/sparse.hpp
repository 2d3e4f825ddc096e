// Sparse exact linear algebra over the rationals.
//
// Vectors are finite maps from totally ordered basis labels to nonzero
// coefficients. SpanBasis keeps a fully reduced row echelon form: every
// stored row has coefficient 1 at its pivot (the smallest label of its
// support) and coefficient 0 at every other pivot, which makes expressing
// an in-span vector a matter of reading off its pivot coordinates.
#pragma once

#include "typeb/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace typeb {

template <typename Label>
struct SparseVec {
    std::map<Label, Rational> entries;  // invariant: no stored zeros

    bool is_zero() const { return entries.empty(); }

    Rational coeff(const Label& l) const {
        auto it = entries.find(l);
        return it == entries.end() ? Rational(0) : it->second;
    }

    void add_term(const Label& l, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = entries.emplace(l, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) entries.erase(it);
        }
    }

    // *this += c * v
    SparseVec& add_scaled(const SparseVec& v, const Rational& c) {
        if (c == 0) return *this;
        for (const auto& [l, x] : v.entries) add_term(l, c * x);
        return *this;
    }

    SparseVec& scale(const Rational& c) {
        if (c == 0) { entries.clear(); return *this; }
        for (auto& [l, x] : entries) x *= c;
        return *this;
    }

    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries == b.entries; }

    static SparseVec unit(const Label& l) {
        SparseVec v;
        v.entries.emplace(l, 1);
        return v;
    }
};

template <typename Label>
class SpanBasis {
public:
    struct InsertOutcome {
        bool inserted;
        SparseVec<Label> residual;  // fully reduced; the new row when inserted
    };

    // Eliminates v against the stored rows (pivots are the smallest labels,
    // so one ascending sweep suffices).
    SparseVec<Label> reduce(SparseVec<Label> v) const {
        auto it = v.entries.begin();
        while (it != v.entries.end()) {
            const auto row = rows_.find(it->first);
            if (row == rows_.end()) { ++it; continue; }
            const Label pivot = it->first;
            const Rational c = it->second;
            v.add_scaled(row->second, -c);  // clears the pivot entry exactly
            it = v.entries.upper_bound(pivot);
        }
        return v;
    }

    InsertOutcome insert(SparseVec<Label> v) {
        v = reduce(std::move(v));
        if (v.is_zero()) return {false, std::move(v)};
        const Label pivot = v.entries.begin()->first;
        v.scale(Rational(1) / v.entries.begin()->second);
        for (auto& [p, row] : rows_) {
            const Rational c = row.coeff(pivot);
            if (c != 0) row.add_scaled(v, -c);
        }
        auto stored = v;
        rows_.emplace(pivot, std::move(stored));
        return {true, std::move(v)};
    }

    // Coefficients of v over the stored rows, keyed by pivot label, or
    // nullopt when v is outside the span.
    std::optional<std::map<Label, Rational>> express(const SparseVec<Label>& v) const {
        std::map<Label, Rational> coeffs;
        SparseVec<Label> rest = v;
        for (const auto& [l, c] : v.entries) {
            const auto row = rows_.find(l);
            if (row == rows_.end()) continue;
            coeffs.emplace(l, c);
            rest.add_scaled(row->second, -c);
        }
        if (!rest.is_zero()) return std::nullopt;
        return coeffs;
    }

    std::size_t rank() const { return rows_.size(); }
    const std::map<Label, SparseVec<Label>>& rows() const { return rows_; }

private:
    std::map<Label, SparseVec<Label>> rows_;
};

// Elimination with combination tracking: solves targets as exact linear
// combinations of a fixed input list.
template <typename Label>
class SpanSolver {
public:
    explicit SpanSolver(const std::vector<SparseVec<Label>>& vs) : count_(vs.size()) {
        std::size_t idx = 0;
        for (const auto& v : vs) {
            std::vector<Rational> combo(count_, Rational(0));
            combo[idx] = 1;
            SparseVec<Label> r = v;
            reduce_tracked(r, combo);
            if (!r.is_zero()) {
                const Label pivot = r.entries.begin()->first;
                const Rational inv = Rational(1) / r.entries.begin()->second;
                r.scale(inv);
                for (auto& c : combo) c *= inv;
                for (auto& [p, row] : rows_) {
                    const Rational c = row.vec.coeff(pivot);
                    if (c == 0) continue;
                    row.vec.add_scaled(r, -c);
                    for (std::size_t k = 0; k < count_; ++k) row.combo[k] -= c * combo[k];
                }
                rows_.emplace(pivot, Row{std::move(r), std::move(combo)});
            }
            ++idx;
        }
    }

    // Exact coefficients c with sum c_i * v_i = target, or nullopt.
    std::optional<std::vector<Rational>> solve(const SparseVec<Label>& target) const {
        SparseVec<Label> r = target;
        std::vector<Rational> combo(count_, Rational(0));
        reduce_tracked(r, combo);
        if (!r.is_zero()) return std::nullopt;
        for (auto& c : combo) c = -c;
        return combo;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        SparseVec<Label> vec;
        std::vector<Rational> combo;
    };

    // r -= matching rows; combo accumulates the row combinations used, so
    // that on exit r = original + sum combo_i * v_i ... with sign folded in.
    void reduce_tracked(SparseVec<Label>& r, std::vector<Rational>& combo) const {
        auto it = r.entries.begin();
        while (it != r.entries.end()) {
            const auto row = rows_.find(it->first);
            if (row == rows_.end()) { ++it; continue; }
            const Label pivot = it->first;
            const Rational c = it->second;
            r.add_scaled(row->second.vec, -c);
            for (std::size_t k = 0; k < count_; ++k) combo[k] -= c * row->second.combo[k];
            it = r.entries.upper_bound(pivot);
        }
    }

    std::size_t count_;
    std::map<Label, Row> rows_;
};

template <typename Label>
typename SpanBasis<Label>::InsertOutcome span_insert(SpanBasis<Label>& basis, SparseVec<Label> v) {
    return basis.insert(std::move(v));
}

template <typename Label>
std::optional<std::vector<Rational>> solve_in_span(const std::vector<SparseVec<Label>>& vs,
                                                   const SparseVec<Label>& target) {
    return SpanSolver<Label>(vs).solve(target);
}

template <typename Label>
std::size_t rank(const std::vector<SparseVec<Label>>& vs) {
    SpanBasis<Label> basis;
    for (const auto& v : vs) basis.insert(v);
    return basis.rank();
}

}  // namespace typeb
