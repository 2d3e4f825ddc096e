#include "typeb/patterns.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace typeb;

namespace {

Triangle tri(int n, std::initializer_list<std::pair<Cell, long long>> entries) {
    Triangle T = Triangle::zero(n);
    for (const auto& [c, v] : entries) T.at(c) = v;
    return T;
}

const DominantWeight w2_11 = weight_from_fundamental(2, {0, 2});  // lambda = (1,1)

}  // namespace

TEST_CASE("dyck path enumeration") {
    const auto p1 = dyck_paths(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].steps == std::vector<Cell>{{1, 2}});

    // Exhaustive DFS over the 4-cell grid: four paths; every walk follows
    // steps (i,j+1)/(i+1,j), so (2,3) is reachable from (1,2) only through (1,3).
    const auto p2 = dyck_paths(2);
    std::set<std::vector<Cell>> got;
    for (const auto& d : p2) got.insert(d.steps);
    const std::set<std::vector<Cell>> expected{
        {{1, 2}},
        {{1, 2}, {1, 3}, {1, 4}},
        {{1, 2}, {1, 3}, {2, 3}},
        {{2, 3}},
    };
    CHECK(got == expected);

    for (int n = 1; n <= 4; ++n) {
        const auto paths = dyck_paths(n);
        const auto oracle = oracles::all_dyck_paths(n);
        std::set<std::vector<Cell>> a, b(oracle.begin(), oracle.end());
        for (const auto& d : paths) {
            CHECK(d.steps.front().j - d.steps.front().i == 1);
            a.insert(d.steps);
        }
        CHECK(a.size() == paths.size());
        CHECK(a == b);
    }
}

TEST_CASE("path validation") {
    CHECK_THROWS_AS(DyckPath(2, {{1, 2}, {2, 3}}), std::invalid_argument);  // not adjacent
    CHECK_THROWS_AS(DyckPath(2, {{1, 3}}), std::invalid_argument);          // starts off the top row
    CHECK_THROWS_AS(DyckPath(2, {{1, 2}, {1, 3}}), std::invalid_argument);  // bad end
    CHECK_NOTHROW(PartialDyckPath(2, {{1, 2}, {1, 3}}));
    CHECK_THROWS_AS(PartialDyckPath(2, std::vector<Cell>{}), std::invalid_argument);
}

TEST_CASE("rightmost-column cells are terminal") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& d : dyck_paths(n))
            for (std::size_t k = 0; k + 1 < d.steps.size(); ++k) CHECK_FALSE(cell_short(n, d.steps[k]));
}

TEST_CASE("s_sum") {
    const Triangle T = tri(2, {{{2, 3}, 2}, {{1, 4}, 1}});
    CHECK(s_sum(T, DyckPath(2, {{2, 3}})) == 1);
    CHECK(s_sum(T, DyckPath(2, {{1, 2}, {1, 3}, {1, 4}})) == Rational(1, 2));
    CHECK(s_sum(Triangle::zero(2), DyckPath(2, {{1, 2}, {1, 3}, {2, 3}})) == 0);
    CHECK_THROWS_AS(s_sum(Triangle::zero(3), DyckPath(2, {{2, 3}})), std::invalid_argument);
}

TEST_CASE("m_bound") {
    CHECK(m_bound(w2_11, DyckPath(2, {{1, 2}})) == 0);
    CHECK(m_bound(w2_11, DyckPath(2, {{2, 3}})) == 1);
    CHECK(m_bound(w2_11, DyckPath(2, {{1, 2}, {1, 3}, {1, 4}})) == 1);
}

TEST_CASE("membership examples") {
    CHECK(in_pi(tri(2, {{{2, 3}, 2}, {{1, 4}, 1}}), w2_11));
    CHECK_FALSE(in_pi(tri(2, {{{1, 2}, 1}}), w2_11));
    CHECK(in_pi(Triangle::zero(2), w2_11));
    CHECK(in_pi(Triangle::zero(3), weight_from_fundamental(3, {0, 0, 0})));
}

TEST_CASE("membership DP agrees with the all-paths brute force") {
    SECTION("n=2, exhaustive box") {
        const auto ws = {weight_from_fundamental(2, {0, 2}), weight_from_fundamental(2, {1, 1}),
                         weight_from_fundamental(2, {2, 0}), weight_from_fundamental(2, {0, 1})};
        for (const auto& w : ws) {
            Triangle T = Triangle::zero(2);
            for (long long a = 0; a <= 3; ++a)
                for (long long b = 0; b <= 3; ++b)
                    for (long long c = 0; c <= 3; ++c)
                        for (long long d = 0; d <= 3; ++d) {
                            T.t = {a, b, c, d};
                            CHECK(in_pi(T, w) == oracles::member_bruteforce(T, w));
                        }
        }
    }

    SECTION("n=3, exhaustive small box") {
        const auto w = weight_from_fundamental(3, {1, 0, 1});
        Triangle T = Triangle::zero(3);
        auto scan = [&](auto&& self, std::size_t k) -> void {
            if (k == T.t.size()) {
                CHECK(in_pi(T, w) == oracles::member_bruteforce(T, w));
                return;
            }
            for (long long v = 0; v <= 2; ++v) {
                T.t[k] = v;
                self(self, k + 1);
            }
            T.t[k] = 0;
        };
        scan(scan, 0);
    }

    SECTION("n=4, sampled box") {
        const auto w = weight_from_fundamental(4, {1, 0, 0, 1});
        std::uint64_t s = 99;
        auto next = [&] {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            return (s >> 40) % 4;
        };
        Triangle T = Triangle::zero(4);
        for (int round = 0; round < 2000; ++round) {
            for (auto& v : T.t) v = static_cast<long long>(next());
            CHECK(in_pi(T, w) == oracles::member_bruteforce(T, w));
        }
    }
}

TEST_CASE("enumerate_pi") {
    SECTION("counts and membership") {
        CHECK(enumerate_pi(w2_11).size() == 10);
        CHECK(enumerate_pi(weight_from_fundamental(2, {0, 0})) == std::vector<Triangle>{Triangle::zero(2)});

        const auto pi_spin = enumerate_pi(weight_from_fundamental(2, {0, 1}));
        REQUIRE(pi_spin.size() == 4);
        for (const auto& T : pi_spin) {
            CHECK(T.at({1, 2}) == 0);
            CHECK(T.at({1, 3}) == 0);
            CHECK(T.at({1, 4}) <= 1);
            CHECK(T.at({2, 3}) <= 1);
        }
    }

    SECTION("matches the box-scan oracle, in lexicographic order") {
        for (const auto& w :
             {weight_from_fundamental(2, {0, 2}), weight_from_fundamental(2, {1, 1}), weight_from_fundamental(2, {2, 0}),
              weight_from_fundamental(3, {0, 0, 1}), weight_from_fundamental(3, {1, 0, 0})}) {
            const auto fast = enumerate_pi(w);
            auto slow = oracles::enumerate_pi_boxscan(w);
            std::sort(slow.begin(), slow.end());
            CHECK(fast == slow);
            CHECK(std::is_sorted(fast.begin(), fast.end()));
        }
    }

    SECTION("downward closure") {
        for (const auto& T : enumerate_pi(w2_11)) {
            Triangle S = T;
            for (std::size_t k = 0; k < S.t.size(); ++k) {
                if (S.t[k] == 0) continue;
                --S.t[k];
                CHECK(in_pi(S, w2_11));
                ++S.t[k];
            }
        }
    }

    SECTION("Minkowski containment of sums") {
        const auto wa = weight_from_fundamental(2, {1, 0});
        const auto wb = weight_from_fundamental(2, {0, 1});
        const auto wsum = weight_from_fundamental(2, {1, 1});
        for (const auto& A : enumerate_pi(wa))
            for (const auto& B : enumerate_pi(wb)) {
                Triangle S = A;
                for (std::size_t k = 0; k < S.t.size(); ++k) S.t[k] += B.t[k];
                CHECK(in_pi(S, wsum));
            }
    }
}

TEST_CASE("grad examples") {
    CHECK(grad_of(tri(2, {{{2, 3}, 2}, {{1, 4}, 1}})) == Rational(3, 2));
    CHECK(grad_of(tri(2, {{{1, 2}, 1}})) == 1);
    CHECK(grad_of(Triangle::zero(3)) == 0);
}

TEST_CASE("polytope H-representation") {
    const HRep h = polytope_h_rep(w2_11);
    CHECK(h.vars == cells(2));
    CHECK(h.rows.size() == dyck_paths(2).size() + 4);

    // lattice points of the inequality system = enumerate_pi
    const auto pi = enumerate_pi(w2_11);
    std::set<std::vector<long long>> members;
    for (const auto& T : pi) members.insert(T.t);
    Triangle T = Triangle::zero(2);
    for (long long a = 0; a <= 3; ++a)
        for (long long b = 0; b <= 3; ++b)
            for (long long c = 0; c <= 3; ++c)
                for (long long d = 0; d <= 3; ++d) {
                    T.t = {a, b, c, d};
                    bool feasible = true;
                    for (const auto& row : h.rows) {
                        Rational lhs(0);
                        for (std::size_t k = 0; k < row.coeffs.size(); ++k) lhs += row.coeffs[k] * T.t[k];
                        if (lhs > row.rhs) { feasible = false; break; }
                    }
                    CHECK(feasible == members.contains(T.t));
                }

    const HRep hz = polytope_h_rep(weight_from_fundamental(2, {0, 0}));
    for (const auto& row : hz.rows) CHECK(row.rhs == 0);  // feasible lattice set {0}
}
