#include <doctest.h>

#include <cmath>

#include "drgkit/bounds.hpp"
#include "drgkit/clique_geometry.hpp"
#include "drgkit/families.hpp"
#include "drgkit/feasibility.hpp"
#include "drgkit/graph.hpp"
#include "fixtures.hpp"

using namespace drgkit;
using namespace drgkit::testfix;

TEST_CASE("sqrt(13) constant is accurate beyond double precision") {
    // sqrt(13) = 3.60555127546398929311922126747...
    const long double ref = 3.605551275463989293119221267470L;
    const long double got = static_cast<long double>(sqrt13_q56()) / (1ULL << 56);
    CHECK(std::abs(got - ref) < 1e-16L);
}

TEST_CASE("lambda_bound") {
    SUBCASE("T(25): case 1, first term dominates") {
        auto e = lambda_bound({300, 46, 23, 4, true});
        CHECK(e.verdict);
        CHECK(e.bound == doctest::Approx(97.97958971132712));
        CHECK(e.observed == 24.0);
        CHECK(e.margin == doctest::Approx(73.97958971132712));
        CHECK(e.tag == "case-1");
    }
    SUBCASE("Petersen: mu = 1 kills the second term") {
        auto e = lambda_bound({10, 3, 0, 1, true});
        CHECK(e.verdict);
        CHECK(e.bound == doctest::Approx(17.88854381999832));
        CHECK(e.tag == "case-1");  // eq main holds trivially for mu <= 1
    }
    SUBCASE("STS(13) block graph: case 2a") {
        auto e = lambda_bound({26, 15, 8, 9, true});
        CHECK(e.verdict);
        CHECK(e.bound == doctest::Approx(28.844410203711913));
        CHECK(e.tag == "case-2a");  // mu - 1 = 8 >= delta * 9 = 3.908
    }
    SUBCASE("disjoint-clique parameters are rejected") {
        CHECK_THROWS_AS(lambda_bound({15, 4, 3, 0, true}), std::domain_error);
    }
    SUBCASE("exact verdict agrees with the floating bound away from ties") {
        for (const auto& rec : enumerate_feasible(120)) {
            const auto& p = rec.params;
            if (p.lambda == p.k - 1) continue;
            auto e = lambda_bound({p.n, p.k, p.lambda, p.mu, true});
            CHECK(e.verdict == (e.observed < e.bound));
        }
    }
}

TEST_CASE("hypergraph_bound") {
    auto grid = hypergraph_bound(81, 2, 2, 9);
    CHECK(grid.verdict);
    CHECK(grid.bound == doctest::Approx(12.727922061357855));
    auto lines = hypergraph_bound(1728, 3, 3, 12);
    CHECK(lines.verdict);
    CHECK(lines.bound == doctest::Approx(50.91168824543143));
    auto tiny = hypergraph_bound(4, 2, 2, 1);
    CHECK(tiny.verdict);
    CHECK(tiny.bound == doctest::Approx(2.82842712474619));
    CHECK_THROWS_AS(hypergraph_bound(10, 1, 2, 1), std::domain_error);
}

TEST_CASE("claw_bound") {
    SUBCASE("Petersen holds with equality") {
        auto e = claw_bound(srg_spectrum({10, 3, 0, 1}), 1);
        CHECK(e.verdict);
        CHECK(e.bound == 1.0);  // max{-2, 1}
        CHECK(e.margin == 0.0);
    }
    SUBCASE("rook 9x9 fails") {
        auto e = claw_bound(srg_spectrum({81, 16, 7, 2}), 2);
        CHECK_FALSE(e.verdict);
        CHECK(e.bound == 2.0);  // max{0, 2}
        CHECK(e.observed == 7.0);
    }
    SUBCASE("T(25) fails") {
        auto e = claw_bound(srg_spectrum({300, 46, 23, 4}), 4);
        CHECK_FALSE(e.verdict);
        CHECK(e.bound == 4.0);  // both branches give 4
    }
}

TEST_CASE("spielman_bounds") {
    SUBCASE("Petersen") {
        auto [a, b] = spielman_bounds({10, 3, 0, 1}, srg_spectrum({10, 3, 0, 1}));
        CHECK(a.verdict);
        CHECK(a.bound == doctest::Approx(2.620741394208897));
        CHECK(b.verdict);  // lambda = 0 < 2.62
    }
    SUBCASE("Paley(13)") {
        auto spec = srg_spectrum({13, 6, 2, 3});
        auto [a, b] = spielman_bounds({13, 6, 2, 3}, spec);
        CHECK(a.observed == doctest::Approx(1.3027756377319946));
        CHECK(a.bound == doctest::Approx(5.241482788417792));
        CHECK(a.verdict);
    }
    SUBCASE("k = mu edge case stays positive") {
        auto spec = srg_spectrum({6, 3, 0, 3});  // K_{3,3}
        auto [a, b] = spielman_bounds({6, 3, 0, 3}, spec);
        CHECK(a.bound > 0);
        CHECK(a.bound == doctest::Approx(std::pow(3.0, 2.0 / 3.0) * std::cbrt(4.0)));
    }
}

TEST_CASE("pyber_bounds") {
    auto spec = srg_spectrum({300, 46, 23, 4});
    auto [a, b] = pyber_bounds({300, 46, 23, 4}, spec);
    CHECK(a.verdict);  // 21 < 28.23
    CHECK(a.bound == doctest::Approx(28.226642936801454));
    CHECK(b.verdict);  // 23 < 28.23 + 4
    CHECK(b.bound == doctest::Approx(32.226642936801454));

    auto rook = pyber_bounds({81, 16, 7, 2}, srg_spectrum({81, 16, 7, 2}));
    CHECK(rook.first.bound == doctest::Approx(12.0));
    CHECK(rook.first.verdict);

    auto pet = pyber_bounds({10, 3, 0, 1}, srg_spectrum({10, 3, 0, 1}));
    CHECK(pet.first.bound == doctest::Approx(3.0800702882410227));
    CHECK(pet.first.verdict);

    CHECK_THROWS_AS(pyber_bounds({6, 3, 0, 3}, srg_spectrum({6, 3, 0, 3})), std::domain_error);
}

TEST_CASE("r_bound") {
    auto t25 = r_bound({300, 46, 23, 4}, srg_spectrum({300, 46, 23, 4}));
    CHECK(t25.verdict);
    CHECK(t25.bound == doctest::Approx(104.76191969445239));
    auto rook = r_bound({81, 16, 7, 2}, srg_spectrum({81, 16, 7, 2}));
    CHECK(rook.verdict);
    CHECK(rook.bound == doctest::Approx(54.91168824543142));
    auto paley = r_bound({13, 6, 2, 3}, srg_spectrum({13, 6, 2, 3}));
    CHECK(paley.verdict);
    CHECK(paley.bound == doctest::Approx(22.845567797154317));
}

TEST_CASE("r_bound holds for every nontrivial feasible tuple") {
    for (const auto& rec : enumerate_feasible(300)) {
        const auto& p = rec.params;
        if (p.lambda == p.k - 1 || p.mu == p.k) continue;
        auto e = r_bound(p, rec.spectrum);
        CHECK(e.verdict);
    }
}

TEST_CASE("spielman and pyber are evaluated for conference tuples too") {
    auto spec = srg_spectrum({13, 6, 2, 3});
    CHECK_NOTHROW(spielman_bounds({13, 6, 2, 3}, spec));
    CHECK_NOTHROW(pyber_bounds({13, 6, 2, 3}, spec));
}

TEST_CASE("g and h boundary continuity at power-of-two inputs") {
    SUBCASE("g at k = n^{5/8}") {
        // n = 2^24, k = 2^15: (k/n)^{4/3} and n^{-1/2} are both 2^{-12}.
        auto v = g_func(1LL << 24, 1LL << 15);
        CHECK(v.exponent == -12.0);
        CHECK(v.value == std::exp2(-12.0));
    }
    SUBCASE("g at k = n^{2/3}") {
        // n = 2^12, k = 2^8: n^{-1/2} = (k/n)^{3/2} = 2^{-6}.
        auto v = g_func(1LL << 12, 1LL << 8);
        CHECK(v.exponent == -6.0);
    }
    SUBCASE("g at k = n^{3/4}") {
        // n = 2^12, k = 2^9: (k/n)^{3/2} = k^{1/2}n^{-3/4} = 2^{-4.5}.
        auto v = g_func(1LL << 12, 1LL << 9);
        CHECK(v.exponent == -4.5);
    }
    SUBCASE("h at k = n^{5/6}") {
        // n = 2^24, k = 2^20: k^{1/2}n^{-3/4} = (k/n)^2 = 2^{-8}.
        auto v = h_func(1LL << 24, 1LL << 20);
        CHECK(v.exponent == -8.0);
    }
    SUBCASE("h at k = n-1 sits on the (k/n)^2 piece") {
        auto v = h_func(1000000, 999999);
        CHECK(v.piece == "(k/n)^2");
        CHECK(v.value == doctest::Approx(1.0).epsilon(1e-5));
    }
    SUBCASE("g at n=10^6, k=10^3 takes the (k/n)^{4/3} piece") {
        auto v = g_func(1000000, 1000);
        CHECK(v.piece == "(k/n)^{4/3}");
        CHECK(v.value == doctest::Approx(1e-4).epsilon(1e-9));
    }
    SUBCASE("h at n=10^6, k=10^5: direct evaluation of all pieces") {
        // k = n^{5/6}: min over pieces is 10^{-2}, attained by both Pyber
        // pieces at their shared boundary.
        auto v = h_func(1000000, 100000);
        CHECK(v.value == doctest::Approx(1e-2).epsilon(1e-9));
    }
    SUBCASE("out of range k") {
        CHECK_THROWS_AS(g_func(100, 0), std::domain_error);
        CHECK_THROWS_AS(g_func(100, 100), std::domain_error);
    }
}

TEST_CASE("g and h are positive and piecewise monotone in k") {
    const long long n = 1 << 20;
    double prev_g = 0, prev_h = 0;
    std::string prev_gp, prev_hp;
    for (long long k = 2; k < n; k = k * 5 / 4 + 1) {
        auto gv = g_func(n, k);
        auto hv = h_func(n, k);
        CHECK(gv.value > 0);
        CHECK(hv.value > 0);
        // Weak monotonicity within a piece's interior.
        if (gv.piece == prev_gp && gv.piece != "n^{-1/2}") CHECK(gv.value >= prev_g);
        if (hv.piece == prev_hp && hv.piece != "n^{-1/2}") CHECK(hv.value >= prev_h);
        prev_g = gv.value;
        prev_h = hv.value;
        prev_gp = gv.piece;
        prev_hp = hv.piece;
    }
}

TEST_CASE("godsil_condition") {
    SUBCASE("rook 9x9: claw-free and eq holds") {
        Graph g = generate(FamilySpec::hamming(2, 9)).graph;
        CHECK_FALSE(find_claw(g, 3).has_value());
        auto e = godsil_condition({81, 16, 7, 2, true}, -2.0, 3);
        CHECK(e.verdict);
        CHECK(e.tag == "claw-free,eq-holds");  // 8 > 3
    }
    SUBCASE("T(25) holds") {
        auto e = godsil_condition({300, 46, 23, 4, true}, -2.0, 3);
        CHECK(e.verdict);  // 24 > 3*3 = 9
    }
    SUBCASE("Petersen fails structurally") {
        Graph g = petersen();
        REQUIRE(find_claw(g, 3).has_value());
        // Claws of order 3 exist, so the smallest claw-free order is 4.
        auto e = godsil_condition({10, 3, 0, 1, true}, -2.0, 4);
        CHECK_FALSE(e.verdict);
        CHECK(e.tag == "claw-found,eq-holds");
    }
    SUBCASE("unknown structure leaves the eq part only") {
        auto e = godsil_condition({81, 16, 7, 2, true}, -2.0, std::nullopt);
        CHECK(e.verdict);
        CHECK(e.tag == "structural-unknown,eq-holds");
    }
}

TEST_CASE("bang_koolen_condition") {
    auto rook = bang_koolen_condition({81, 16, 7, 2, true}, -2.0);
    CHECK_FALSE(rook.verdict);  // 7 > 4*2 = 8 fails
    auto t25 = bang_koolen_condition({300, 46, 23, 4, true}, -2.0);
    CHECK(t25.verdict);  // 23 > 16
    auto mu0 = bang_koolen_condition({15, 4, 3, 0, true}, -1.0);
    CHECK(mu0.verdict);  // any lambda >= 1 beats 0
}

TEST_CASE("integer eigenvalues survive bisection roundoff") {
    // A least eigenvalue of -3 computed numerically may land just above or
    // below; floor-based quantities must not flip.
    for (double s : {-3.0, -2.9999999999997, -3.0000000000003}) {
        auto bk = bang_koolen_condition({1728, 33, 10, 2, true}, s);
        CHECK(bk.tag == "floor(s)=-3");
        auto go = godsil_condition({1728, 33, 10, 2, true}, s, 4);
        CHECK(go.tag == "claw-free,eq-holds");  // H(3,12) has no 4-claws
        CHECK(go.verdict);
    }
}

TEST_CASE("bang_koolen implies godsil for integral s with s^2 >= 2|s|-1") {
    for (const auto& rec : enumerate_feasible(150)) {
        if (!rec.spectrum.integral) continue;
        const long long s = rec.spectrum.s_int;
        if (s > -2) continue;
        AmpleParams p{rec.params.n, rec.params.k, rec.params.lambda, rec.params.mu, true};
        auto bk = bang_koolen_condition(p, double(s));
        if (bk.verdict) {
            auto go = godsil_condition(p, double(s), std::nullopt);
            CHECK(go.verdict);  // eq part; structure not claimed
        }
    }
}

TEST_CASE("classify") {
    SUBCASE("conference") {
        auto c = classify({13, 6, 2, 3}, srg_spectrum({13, 6, 2, 3}));
        CHECK(c.tag == "conference");
    }
    SUBCASE("triangular family") {
        auto c = classify({300, 46, 23, 4}, srg_spectrum({300, 46, 23, 4}));
        CHECK(c.tag == "geometric-family-match");
        CHECK(c.detail == "T(25)");
    }
    SUBCASE("lattice family") {
        auto c = classify({81, 16, 7, 2}, srg_spectrum({81, 16, 7, 2}));
        CHECK(c.tag == "geometric-family-match");
        CHECK(c.detail == "lattice L_2(9)");
    }
    SUBCASE("latin square family") {
        auto c = classify({16, 9, 4, 6}, srg_spectrum({16, 9, 4, 6}));
        CHECK(c.tag == "geometric-family-match");
        CHECK(c.detail == "latin-square L_3(4)");
    }
    SUBCASE("STS block family") {
        auto c = classify({26, 15, 8, 9}, srg_spectrum({26, 15, 8, 9}));
        CHECK(c.tag == "geometric-family-match");
        CHECK(c.detail == "STS(13) block graph");
    }
    SUBCASE("Petersen lands in the claw-bound regime") {
        auto c = classify({10, 3, 0, 1}, srg_spectrum({10, 3, 0, 1}));
        CHECK(c.tag == "claw-bound-regime");
    }
    SUBCASE("trivial takes priority") {
        auto c = classify({6, 3, 0, 3}, srg_spectrum({6, 3, 0, 3}));  // K_{3,3}
        CHECK(c.tag == "trivial");
    }
}
