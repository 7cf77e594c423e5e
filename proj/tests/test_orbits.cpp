#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gspin/orbits.hpp"

using namespace gspin;

namespace {
OrthogonalPartition P(std::vector<long long> parts) { return OrthogonalPartition(std::move(parts)); }
}  // namespace

TEST_CASE("admissibility and enumeration") {
    CHECK(P({3}).admissible());
    CHECK_FALSE(P({2, 1}).admissible());
    CHECK(P({2, 2, 1}).admissible());
    CHECK_FALSE(P({4, 1}).admissible());
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({0}), std::invalid_argument);

    auto o0 = enumerate_orbits(0);
    REQUIRE(o0.size() == 1);
    CHECK(o0[0] == P({1}));

    std::vector<OrthogonalPartition> v1 = enumerate_orbits(1);
    std::set<OrthogonalPartition> n1(v1.begin(), v1.end());
    CHECK(n1 == std::set<OrthogonalPartition>{P({3}), P({1, 1, 1})});

    std::vector<OrthogonalPartition> v2 = enumerate_orbits(2);
    std::set<OrthogonalPartition> n2(v2.begin(), v2.end());
    CHECK(n2 == std::set<OrthogonalPartition>{P({5}), P({3, 1, 1}), P({2, 2, 1}), P({1, 1, 1, 1, 1})});

    // brute-force cross-check of the admissibility filter for n=3:
    // partitions of 7 with even parts in even multiplicity
    std::vector<OrthogonalPartition> v3 = enumerate_orbits(3);
    std::set<OrthogonalPartition> n3(v3.begin(), v3.end());
    CHECK(n3 == std::set<OrthogonalPartition>{P({7}), P({5, 1, 1}), P({3, 3, 1}), P({3, 2, 2}),
                                              P({3, 1, 1, 1, 1}), P({2, 2, 1, 1, 1}), P({1, 1, 1, 1, 1, 1, 1})});

    CHECK_THROWS_AS(enumerate_orbits(13), std::out_of_range);
}

TEST_CASE("dominance order") {
    CHECK(dominates(P({5}), P({3, 1, 1})));
    CHECK(dominates(P({3, 1, 1}), P({2, 2, 1})));
    CHECK_FALSE(dominates(P({2, 2, 1}), P({3, 1, 1})));
    CHECK_FALSE(gtorncw(P({3, 1, 1}), P({3, 1, 1})));
    CHECK(gtorncw(P({5}), P({3, 1, 1})));
    CHECK_THROWS_AS(dominates(P({3}), P({5})), std::invalid_argument);

    // partial order axioms over all admissible classes, n <= 6
    for (int n = 1; n <= 6; ++n) {
        std::vector<OrthogonalPartition> os = enumerate_orbits(n);
        for (auto& a : os) {
            CHECK(dominates(a, a));
            for (auto& b : os) {
                if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
                for (auto& c : os)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("distinguished classes O_0 and O_1") {
    CHECK(O0(2) == P({2, 2, 1}));
    CHECK(O0(3) == P({2, 2, 1, 1, 1}));
    CHECK(O0(4) == P({2, 2, 2, 2, 1}));
    CHECK(O1(2) == P({3, 1, 1}));
    CHECK(O1(1) == P({3}));
    CHECK(O1(4) == P({3, 1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(O0(0), std::invalid_argument);
}

TEST_CASE("reduction: above O_0 implies dominating O_1") {
    for (int n = 1; n <= 6; ++n) CHECK(check_reduction(n));
    // the n=2 witnesses
    CHECK(gtorncw(P({5}), O0(2)));
    CHECK(dominates(P({5}), O1(2)));
    CHECK(gtorncw(P({3, 1, 1}), O0(2)));
    CHECK(dominates(P({3, 1, 1}), O1(2)));
}

TEST_CASE("h_orbit weights: pinned values") {
    CHECK(h_orbit(P({3, 1, 1}), 2).l == std::vector<long long>{2, 0});
    CHECK(h_orbit(P({2, 2, 1}), 2).l == std::vector<long long>{1, 1});
    CHECK(h_orbit(P({5}), 2).l == std::vector<long long>{4, 2});
    CHECK(h_orbit(P({1, 1, 1}), 1).l == std::vector<long long>{0});

    // weights are nonnegative and the discarded tail never exceeds them
    for (int n = 1; n <= 6; ++n)
        for (const OrthogonalPartition& o : enumerate_orbits(n)) {
            OrbitWeights w = h_orbit(o, n);
            REQUIRE((int)w.l.size() == n);
            for (size_t i = 0; i < w.l.size(); ++i) {
                CHECK(w.l[i] >= 0);
                if (i) CHECK(w.l[i - 1] >= w.l[i]);
            }
        }
}

TEST_CASE("j_alpha and V_O") {
    // O = (2,2,1), n=2: weights (1,1)
    OrbitWeights w = h_orbit(P({2, 2, 1}), 2);
    CHECK(j_alpha(w, Root::eminus(2, 3)) == 0);
    CHECK(j_alpha(w, Root::eplus(2, 3)) == 2);
    CHECK(j_alpha(w, Root::eshort(2)) == 1);
    CHECK(j_alpha(w, Root::eshort(3)) == 1);
    std::vector<Root> v = v_orbit(P({2, 2, 1}), 2);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == Root::eplus(2, 3));

    // trivial class: no weights, no subgroup
    for (int n = 1; n <= 4; ++n)
        CHECK(v_orbit(P(std::vector<long long>(2 * n + 1, 1)), n).empty());

    // V_{O_1} is the full root set of U_1
    for (int n = 2; n <= 6; ++n) {
        std::vector<Root> vo = v_orbit(O1(n), n);
        std::vector<Root> u1;
        for (const Root& alpha : positive_roots(n))
            if (alpha.involves(2)) u1.push_back(alpha);
        std::sort(vo.begin(), vo.end());
        std::sort(u1.begin(), u1.end());
        CHECK(vo == u1);
    }
}

TEST_CASE("j_alpha: second route through the root-datum pairing") {
    // h_O = prod (eta_i^vee)^{l_i} and eta_i^vee = -(alpha_1^vee + ... +
    // alpha_i^vee), so j_alpha = -sum_i l_i sum_{l<=i} <alpha, alpha_l^vee>
    for (int n = 1; n <= 5; ++n)
        for (const OrthogonalPartition& o : enumerate_orbits(n)) {
            OrbitWeights w = h_orbit(o, n);
            for (const Root& alpha : positive_roots(n)) {
                long long via_pairing = 0;
                for (int i = 1; i <= n; ++i) {
                    long long inner = 0;
                    for (int l = 1; l <= i; ++l) inner += pairing(alpha, l, n);
                    via_pairing -= w.l[i - 1] * inner;
                }
                CHECK(j_alpha(w, alpha) == via_pairing);
            }
        }
}

TEST_CASE("generic stabilizer types") {
    // single 3, rest 1s: D_{n-1}
    for (int n = 2; n <= 5; ++n) {
        OrthogonalPartition o = O1(n);
        std::string want = "D" + std::to_string(n - 1);
        if (n == 2) want += " (torus GL1)";
        CHECK(generic_stabilizer_type(o) == want);
    }
    CHECK(generic_stabilizer_type(2, 0, 2) == "D1 (torus GL1)");
    CHECK(generic_stabilizer_type(1, 2, 3) == "C1");
    CHECK(generic_stabilizer_type(3, 2, 7) == "B1 x C1 x D1 (torus GL1)");
    CHECK(generic_stabilizer_type(1, 0, 1) == "trivial");
    CHECK(generic_stabilizer_type(P({2, 2, 1})) == "C1");
    CHECK_THROWS_AS(generic_stabilizer_type(1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(generic_stabilizer_type(P({4, 4, 1})), std::invalid_argument);
}

TEST_CASE("length form") {
    // middle basis vector: the single diagonal term
    std::vector<Rational> e2{Rational(0), Rational(1), Rational(0)};
    LengthFormValue v = length_form(e2);
    CHECK_FALSE(v.is_zero);
    CHECK(v.value == Rational(1));

    // first basis vector pairs with the vanishing last coordinate
    std::vector<Rational> e1{Rational(1), Rational(0), Rational(0)};
    CHECK(length_form(e1).is_zero);

    // two cross terms
    std::vector<Rational> b{Rational(1), Rational(0), Rational(1)};
    LengthFormValue w = length_form(b);
    CHECK(w.value == Rational(2));

    // cancellation invisible at square-class resolution
    std::vector<Rational> c{Rational(1), Rational(2), Rational(-2)};
    CHECK(length_form(c).is_zero);  // 2*(1*-2) + 4 = 0

    LocalField F = LocalField::padic(3);
    CHECK(length_form_class(F, w) == FieldElement(0, 1));  // 2 is a non-residue mod 3
    CHECK(length_form_class(LocalField::real(), length_form({Rational(-1)})).cls == 0);
    CHECK_THROWS_AS(length_form_class(F, length_form(e1)), std::invalid_argument);
}
