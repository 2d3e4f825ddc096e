// Type B_n root data on the triangular index set.
//
// Cells (i,j) with 1 <= i < j <= 2n+1-i label both the n^2 positive roots
// and the entries of every number triangle in this library. A cell is
// "short" when i+j = 2n+1; these sit in the rightmost column of the grid
// and carry the short roots beta_i.
#pragma once

#include "typeb/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace typeb {

struct Cell {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string cell_to_string(Cell c) {
    return std::to_string(c.i) + "," + std::to_string(c.j);
}

inline bool cell_valid(int n, Cell c) {
    return 1 <= c.i && c.i < c.j && c.j <= 2 * n + 1 - c.i;
}

inline bool cell_short(int n, Cell c) { return c.i + c.j == 2 * n + 1; }

inline void require_cell(int n, Cell c) {
    if (!cell_valid(n, c))
        throw std::invalid_argument("invalid cell (" + cell_to_string(c) + ") for rank " + std::to_string(n));
}

inline void require_same_rank(int a, int b) {
    if (a != b) throw std::invalid_argument("mismatched rank");
}

// The order <<: first by i+j (column of the grid), then by i (bottom to top
// within a column).
inline bool ll_less(Cell a, Cell b) {
    if (a.i + a.j != b.i + b.j) return a.i + a.j < b.i + b.j;
    return a.i < b.i;
}

// All n^2 cells in << order.
inline std::vector<Cell> cells(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (int s = 3; s <= 2 * n + 1; ++s)
        for (int i = 1; 2 * i < s; ++i)
            out.push_back(Cell{i, s - i});
    return out;
}

// Position of c in cells(n).
inline int cell_index(int n, Cell c) {
    require_cell(n, c);
    int idx = 0;
    for (int s = 3; s < c.i + c.j; ++s) idx += (s - 1) / 2;
    return idx + (c.i - 1);
}

// Coordinate vectors in the orthonormal basis (beta_i); weights and roots
// share this representation.
using BetaVec = std::vector<Rational>;

// beta_i - beta_j for j <= n, beta_i + beta_{2n+1-j} for n < j < 2n+1-i,
// and the short root beta_i for i+j = 2n+1.
inline BetaVec root_of_cell(int n, Cell c) {
    require_cell(n, c);
    BetaVec r(static_cast<std::size_t>(n), Rational(0));
    r[c.i - 1] = 1;
    if (c.j <= n)
        r[c.j - 1] = -1;
    else if (!cell_short(n, c))
        r[2 * n - c.j] = 1;  // beta_{2n+1-j}
    return r;
}

struct DominantWeight {
    int n = 0;
    std::vector<long long> a;  // fundamental coordinates
    BetaVec lambda;            // beta coordinates, non-increasing half-integers

    bool is_zero() const {
        for (long long x : a)
            if (x != 0) return false;
        return true;
    }
};

// lambda_i = a_i + ... + a_{n-1} + a_n/2.
inline DominantWeight weight_from_fundamental(int n, std::vector<long long> a) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " fundamental coordinates");
    for (long long x : a)
        if (x < 0) throw std::invalid_argument("fundamental coordinates must be nonnegative");
    BetaVec lambda(static_cast<std::size_t>(n));
    Rational acc(a[static_cast<std::size_t>(n) - 1], 2);
    lambda[static_cast<std::size_t>(n) - 1] = acc;
    for (int i = n - 1; i >= 1; --i) {
        acc += a[static_cast<std::size_t>(i) - 1];
        lambda[static_cast<std::size_t>(i) - 1] = acc;
    }
    return DominantWeight{n, std::move(a), std::move(lambda)};
}

inline Rational dot(const BetaVec& x, const BetaVec& y) {
    Rational s(0);
    for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
    return s;
}

inline BetaVec weyl_vector(int n) {
    BetaVec rho(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) rho[static_cast<std::size_t>(i) - 1] = Rational(2 * (n - i) + 1, 2);
    return rho;
}

// Weyl dimension formula: prod over positive roots of <lambda+rho, alpha> / <rho, alpha>.
inline Int weyl_dim(const DominantWeight& w) {
    const int n = w.n;
    const BetaVec rho = weyl_vector(n);
    BetaVec shifted(rho);
    for (int k = 0; k < n; ++k) shifted[static_cast<std::size_t>(k)] += w.lambda[static_cast<std::size_t>(k)];
    Rational prod(1);
    for (Cell c : cells(n)) {
        const BetaVec alpha = root_of_cell(n, c);
        prod *= dot(shifted, alpha) / dot(rho, alpha);
    }
    const Int d = to_integer(prod);
    if (d <= 0) throw std::logic_error("weyl_dim: nonpositive result");
    return d;
}

// Simple roots: alpha_k = beta_k - beta_{k+1} for k < n, alpha_n = beta_n.
// As cells these are exactly the top row (k, k+1).
inline Cell simple_cell(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("simple root index out of range");
    return Cell{k, k + 1};
}

}  // namespace typeb
