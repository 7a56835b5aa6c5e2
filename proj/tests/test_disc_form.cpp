#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3lat/genus.hpp"
#include "test_support.hpp"

using namespace k3lat;

TEST_CASE("discriminant form of A1, U, U(2)") {
    FiniteQuadraticForm a1 = discriminant_form(lattices::A(1));
    REQUIRE(a1.orders() == IntVec{2});
    CHECK(a1.q_value(0) == Rat(3, 2));

    CHECK(discriminant_form(lattices::U()).is_trivial());
    CHECK(discriminant_form(lattices::E(8)).is_trivial());

    FiniteQuadraticForm u2 = discriminant_form(rescale(lattices::U(), 2));
    REQUIRE(u2.orders() == (IntVec{2, 2}));
    CHECK(u2.q_value(0) == 0);
    CHECK(u2.q_value(1) == 0);
    CHECK(u2.b_value(0, 1) == Rat(1, 2));

    CHECK(discriminant_form(lattices::A(1)).group_order() == 2);
    CHECK(discriminant_form(lattices::E(6)).group_order() == 3);
    CHECK(discriminant_form(rescale(lattices::E(8), 2)).group_order() == 256);
}

TEST_CASE("form invariants are validated") {
    // d^2 q != 0 mod 2
    CHECK_THROWS_AS(FiniteQuadraticForm({2}, {Rat(1, 4)}, [] {
                        RatMatrix b(1, 1);
                        b(0, 0) = Rat(1, 4);
                        return b;
                    }()),
                    std::invalid_argument);
    // degenerate bilinear form
    CHECK_THROWS_AS(FiniteQuadraticForm({2}, {Rat(0)}, RatMatrix(1, 1)), std::invalid_argument);
    // valid A1 form passes
    RatMatrix b(1, 1);
    b(0, 0) = Rat(1, 2);
    CHECK_NOTHROW(FiniteQuadraticForm({2}, {Rat(3, 2)}, b));
}

TEST_CASE("negate") {
    FiniteQuadraticForm a1 = discriminant_form(lattices::A(1));
    FiniteQuadraticForm n = negate(a1);
    CHECK(n.q_value(0) == Rat(1, 2));
    CHECK(negate(FiniteQuadraticForm()).is_trivial());
    CHECK(is_isomorphic(negate(n), a1));
    CHECK(n == discriminant_form(rescale(lattices::A(1), -1)));
}

TEST_CASE("direct sums of forms") {
    FiniteQuadraticForm a1 = discriminant_form(lattices::A(1));
    FiniteQuadraticForm two = direct_sum_q(a1, a1);
    CHECK(two.orders() == (IntVec{2, 2}));
    CHECK(two.q_value(0) == Rat(3, 2));
    CHECK(two.q_value(1) == Rat(3, 2));
    CHECK(is_isomorphic(direct_sum_q(a1, FiniteQuadraticForm()), a1));

    // invariant factors are recomputed into a chain
    FiniteQuadraticForm mix = direct_sum_q(discriminant_form(lattices::A(2)), a1);
    CHECK(mix.orders() == (IntVec{6}));
}

TEST_CASE("functoriality over direct sums of lattices") {
    testing::Rng rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        Lattice a = testing::random_catalog_lattice(rng, 1 << 12, 2);
        Lattice b = testing::random_catalog_lattice(rng, 1 << 12, 2);
        FiniteQuadraticForm lhs = discriminant_form(direct_sum({a, b}));
        FiniteQuadraticForm rhs = direct_sum_q(discriminant_form(a), discriminant_form(b));
        CHECK(lhs.orders() == rhs.orders());
        CHECK(is_isomorphic(lhs, rhs));
    }
}

TEST_CASE("p-primary parts") {
    FiniteQuadraticForm a2 = discriminant_form(lattices::A(2));
    CHECK(p_primary_part(a2, 3).group_order() == 3);
    CHECK(p_primary_part(a2, 2).is_trivial());
    CHECK_THROWS_AS(p_primary_part(a2, 4), std::invalid_argument);

    // q = sum of its p-primary parts
    FiniteQuadraticForm mix = discriminant_form(direct_sum(
        {lattices::A(1), lattices::A(2), lattices::A(4)}));
    FiniteQuadraticForm back = direct_sum_q(p_primary_part(mix, 2),
                                            direct_sum_q(p_primary_part(mix, 3), p_primary_part(mix, 5)));
    CHECK(is_isomorphic(mix, back));
    CHECK(support_primes(mix) == (std::vector<Int>{2, 3, 5}));
}

TEST_CASE("gauss signature fixtures") {
    CHECK(gauss_signature(discriminant_form(lattices::A(1))) == 7);
    CHECK(gauss_signature(FiniteQuadraticForm()) == 0);
    CHECK(gauss_signature(discriminant_form(rescale(lattices::E(8), 2))) == 0);
    CHECK(gauss_signature(discriminant_form(lattices::E(7))) == 1);
    CHECK_THROWS_AS(gauss_signature(discriminant_form(lattices::A(1)), 1), std::domain_error);
}

TEST_CASE("gauss signature parallel kernel matches the serial reference") {
    testing::Rng rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        Lattice l = testing::random_catalog_lattice(rng, 1 << 14);
        FiniteQuadraticForm q = discriminant_form(l);
        CHECK(gauss_signature(q) == gauss_signature_serial(q));
    }
    std::vector<Lattice> parts(14, lattices::A(1));
    FiniteQuadraticForm big = discriminant_form(direct_sum(parts));
    CHECK(gauss_signature(big) == gauss_signature_serial(big));
}

TEST_CASE("milgram: gauss signature equals lattice signature mod 8") {
    testing::Rng rng(123456);
    for (int trial = 0; trial < 120; ++trial) {
        Lattice l = testing::random_catalog_lattice(rng, 1 << 14);
        Signature s = l.signature();
        int expected = ((s.t_plus - s.t_minus) % 8 + 8) % 8;
        CHECK(gauss_signature(discriminant_form(l)) == expected);
    }
}

TEST_CASE("min generators") {
    CHECK(min_generators(FiniteQuadraticForm()) == 0);
    CHECK(min_generators(discriminant_form(rescale(lattices::U(), 2))) == 2);
    // the 2_7^{+11} row: S = U(2) + E8(2) + A1
    Lattice s = direct_sum({rescale(lattices::U(), 2), rescale(lattices::E(8), 2), lattices::A(1)});
    CHECK(min_generators(discriminant_form(s)) == 11);
}

TEST_CASE("brute force isomorphism is a usable oracle") {
    FiniteQuadraticForm a1 = discriminant_form(lattices::A(1));
    FiniteQuadraticForm e7 = discriminant_form(lattices::E(7));
    CHECK(brute_force_iso(a1, a1));
    CHECK_FALSE(brute_force_iso(a1, e7));  // q = 3/2 vs 1/2
    CHECK(brute_force_iso(FiniteQuadraticForm(), FiniteQuadraticForm()));
    CHECK_FALSE(brute_force_iso(a1, discriminant_form(lattices::A(2))));

    // u and v blocks on (Z/2)^2 are distinct; sums of two agree per relation uu=vv
    CHECK_FALSE(brute_force_iso(blocks::u_block(1), blocks::v_block(1)));
    CHECK(brute_force_iso(direct_sum_q(blocks::u_block(1), blocks::u_block(1)),
                          direct_sum_q(blocks::v_block(1), blocks::v_block(1))));

    FiniteQuadraticForm big = discriminant_form(rescale(lattices::E(8), 2));
    CHECK_THROWS_AS(brute_force_iso(big, big), std::domain_error);
}

TEST_CASE("presentation independence under unimodular basis change") {
    testing::Rng rng(9090);
    for (int trial = 0; trial < 60; ++trial) {
        Lattice l = testing::random_catalog_lattice(rng, 1 << 12);
        Lattice changed = testing::random_basis_change(rng, l);
        CHECK(l.determinant() == changed.determinant());
        FiniteQuadraticForm q1 = discriminant_form(l);
        FiniteQuadraticForm q2 = discriminant_form(changed);
        CHECK(q1.orders() == q2.orders());
        CHECK(is_isomorphic(q1, q2));
        CHECK(genus_symbol(q1).str() == genus_symbol(q2).str());
    }
}

TEST_CASE("eval_q and eval_b reduce coefficients mod orders") {
    FiniteQuadraticForm q = discriminant_form(rescale(lattices::U(), 2));
    IntVec x{5, 2};  // == (1, 0)
    CHECK(q.eval_q(x) == q.eval_q(IntVec{1, 0}));
    CHECK(q.eval_b(x, IntVec{0, 1}) == q.b_value(0, 1));
    CHECK(q.element_order(IntVec{1, 1}) == 2);
    CHECK(q.element_order(IntVec{0, 0}) == 1);
}
