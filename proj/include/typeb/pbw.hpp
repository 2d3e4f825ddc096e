// Words in the root vectors f_{i,j}, the orders << and prec, and PBW
// normalization into the ordered-monomial basis of U(n^-).
//
// An ordered monomial is canonically identified with its exponent
// triangle; its word lists factors sorted non-decreasingly by <<.
#pragma once

#include "typeb/modules.hpp"
#include "typeb/patterns.hpp"
#include "typeb/rootsys.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace typeb {

struct Word {
    int n = 0;
    std::vector<Cell> factors;  // leftmost factor first; rightmost acts first

    Word() = default;
    Word(int rank, std::vector<Cell> fs) : n(rank), factors(std::move(fs)) {
        for (Cell c : factors) require_cell(n, c);
    }

    friend bool operator==(const Word&, const Word&) = default;
};

using OrderedMonomial = Triangle;  // exponent triangle; word = <<-sorted factors

// Exponent triangle of a word (the paper's log).
inline Triangle log_word(const Word& wd) {
    Triangle T = Triangle::zero(wd.n);
    for (Cell c : wd.factors) ++T.at(c);
    return T;
}

// Canonical <<-sorted word of an ordered monomial (the paper's exp).
inline Word word_of(const OrderedMonomial& M) {
    require_triangle(M);
    std::vector<Cell> fs;
    for (Cell c : cells(M.n))
        for (long long k = 0; k < M.at(c); ++k) fs.push_back(c);
    return Word(M.n, std::move(fs));
}

inline OrderedMonomial ord_word(const Word& wd) { return log_word(wd); }

inline Rational grad_word(const Word& wd) { return grad_of(log_word(wd)); }

// Arranged: the short factors f_{i,2n+1-i} occur with i non-decreasing
// from left to right.
inline bool is_arranged(const Word& wd) {
    int last = 0;
    for (Cell c : wd.factors) {
        if (!cell_short(wd.n, c)) continue;
        if (c.i < last) return false;
        last = c.i;
    }
    return true;
}

// Graded lexicographic order on ordered monomials: first by grad, ties by
// the <<-minimal cell with differing exponents (smaller exponent first).
inline std::strong_ordering prec_compare(const OrderedMonomial& A, const OrderedMonomial& B) {
    require_same_rank(A.n, B.n);
    const Rational ga = grad_of(A), gb = grad_of(B);
    if (ga != gb) return ga < gb ? std::strong_ordering::less : std::strong_ordering::greater;
    for (Cell c : cells(A.n)) {
        if (A.at(c) != B.at(c))
            return A.at(c) < B.at(c) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

inline bool prec_less(const OrderedMonomial& A, const OrderedMonomial& B) {
    return prec_compare(A, B) == std::strong_ordering::less;
}

// Exact linear combination of ordered monomials.
struct LinComb {
    int n = 0;
    std::map<Triangle, Rational> terms;  // no zero coefficients

    void add_term(const Triangle& T, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(T, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    LinComb& add_scaled(const LinComb& other, const Rational& c) {
        for (const auto& [T, x] : other.terms) add_term(T, c * x);
        return *this;
    }

    friend bool operator==(const LinComb&, const LinComb&) = default;
};

// Brackets of the negative root vectors, extracted once per rank as matrix
// commutators in the faithful vector representation and re-expressed in
// the f basis. Root spaces are one-dimensional, so every bracket is a
// rational multiple of a single f or zero.
class StructureConstants {
public:
    static StructureConstants compute(int n) {
        StructureConstants sc;
        sc.n_ = n;
        const RepModule v = vector_rep(n);
        const auto cs = cells(n);
        const std::size_t total = cs.size();
        sc.table_.assign(total * total, std::nullopt);
        std::vector<BetaVec> roots;
        roots.reserve(total);
        for (Cell c : cs) roots.push_back(root_of_cell(n, c));

        for (std::size_t a = 0; a < total; ++a) {
            for (std::size_t b = 0; b < total; ++b) {
                if (a == b) continue;
                const SparseColumns comm = commutator(v.lower[a], v.lower[b]);
                if (columns_zero(comm)) continue;
                BetaVec sum = roots[a];
                for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += roots[b][k];
                std::optional<std::size_t> target;
                for (std::size_t e = 0; e < total; ++e)
                    if (roots[e] == sum) { target = e; break; }
                if (!target)
                    throw std::logic_error("structure constants: nonzero commutator outside the root lattice");
                Rational k;
                bool have_k = false;
                for (std::size_t col = 0; col < comm.size() && !have_k; ++col)
                    for (const auto& [row, c] : comm[col].entries) {
                        const Rational ref = v.lower[*target][col].coeff(row);
                        if (ref == 0) throw std::logic_error("structure constants: commutator not in the f-span");
                        k = c / ref;
                        have_k = true;
                        break;
                    }
                if (!columns_equal(comm, columns_scaled(v.lower[*target], k)))
                    throw std::logic_error("structure constants: commutator not proportional to a root vector");
                sc.table_[a * total + b] = std::make_pair(static_cast<int>(*target), k);
            }
        }
        return sc;
    }

    int rank() const { return n_; }

    // [f_a, f_b] = coeff * f_cell, or nullopt for zero.
    const std::optional<std::pair<int, Rational>>& bracket(int a, int b) const {
        return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(b)];
    }

    LinComb bracket_comb(Cell a, Cell b) const {
        LinComb out;
        out.n = n_;
        const auto& br = bracket(cell_index(n_, a), cell_index(n_, b));
        if (br) {
            Triangle T = Triangle::zero(n_);
            T.t[static_cast<std::size_t>(br->first)] = 1;
            out.add_term(T, br->second);
        }
        return out;
    }

private:
    int n_ = 0;
    std::vector<std::optional<std::pair<int, Rational>>> table_;
};

namespace detail {

struct WordKey {
    std::vector<int> cells;
    friend bool operator<(const WordKey& a, const WordKey& b) { return a.cells < b.cells; }
};

// Repeatedly swaps the leftmost adjacent out-of-order pair, inserting the
// commutator term. Terminates by the well-founded (grad, length,
// inversions) measure; the per-call memo is keyed by word.
inline const LinComb& normalize_rec(const std::vector<int>& word, int n, const std::vector<Cell>& cs,
                                    const StructureConstants& sc, std::map<WordKey, LinComb>& memo) {
    const WordKey key{word};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::optional<std::size_t> swap_at;
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
        if (ll_less(cs[static_cast<std::size_t>(word[k + 1])], cs[static_cast<std::size_t>(word[k])])) {
            swap_at = k;
            break;
        }

    LinComb result;
    result.n = n;
    if (!swap_at) {
        Triangle T = Triangle::zero(n);
        for (int c : word) ++T.t[static_cast<std::size_t>(c)];
        result.add_term(T, 1);
    } else {
        const std::size_t k = *swap_at;
        std::vector<int> swapped = word;
        std::swap(swapped[k], swapped[k + 1]);
        result.add_scaled(normalize_rec(swapped, n, cs, sc, memo), 1);
        if (const auto& br = sc.bracket(word[k], word[k + 1])) {
            std::vector<int> contracted;
            contracted.reserve(word.size() - 1);
            contracted.insert(contracted.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
            contracted.push_back(br->first);
            contracted.insert(contracted.end(), word.begin() + static_cast<std::ptrdiff_t>(k) + 2, word.end());
            result.add_scaled(normalize_rec(contracted, n, cs, sc, memo), br->second);
        }
    }
    return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace detail

// Exact expansion of a word in the ordered-monomial basis of U(n^-).
inline LinComb pbw_normalize(const Word& wd, const StructureConstants& sc) {
    require_same_rank(wd.n, sc.rank());
    std::vector<int> word;
    word.reserve(wd.factors.size());
    for (Cell c : wd.factors) word.push_back(cell_index(wd.n, c));
    std::map<detail::WordKey, LinComb> memo;
    return detail::normalize_rec(word, wd.n, cells(wd.n), sc, memo);
}

inline ModVec apply_word(const RepModule& m, const Word& wd, const ModVec& v) {
    require_same_rank(m.n, wd.n);
    return apply_cells(m, wd.factors, v);
}

inline ModVec apply_lincomb(const RepModule& m, const LinComb& lc, const ModVec& v) {
    require_same_rank(m.n, lc.n);
    ModVec out;
    for (const auto& [T, c] : lc.terms) out.add_scaled(apply_word(m, word_of(T), v), c);
    return out;
}

}  // namespace typeb
