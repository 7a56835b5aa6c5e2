#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace k3lat;

TEST_CASE("catalog gram matrices") {
    CHECK(lattices::A(1).gram() == IntMatrix{{-2}});
    CHECK(lattices::U().gram() == IntMatrix{{0, 1}, {1, 0}});
    CHECK(lattices::A(2).gram() == IntMatrix{{-2, 1}, {1, -2}});

    Lattice t1row15 = lattices::from_gram(IntMatrix{{-2, 1}, {1, -4}});
    CHECK(t1row15.rank() == 2);
    CHECK(t1row15.determinant() == 7);
    CHECK(t1row15.is_negative_definite());

    struct Fixture {
        Lattice l;
        long abs_det;
    };
    std::vector<Fixture> fixtures{{lattices::A(3), 4}, {lattices::A(7), 8}, {lattices::D(4), 4},
                                  {lattices::D(7), 4}, {lattices::E(6), 3}, {lattices::E(7), 2},
                                  {lattices::E(8), 1}};
    for (const Fixture& f : fixtures) {
        CHECK(f.l.is_negative_definite());
        CHECK(abs(f.l.determinant()) == f.abs_det);
        CHECK(f.l.signature() == Signature{0, f.l.rank()});
    }
}

TEST_CASE("catalog rejects invalid parameters") {
    CHECK_THROWS_AS(lattices::A(0), std::invalid_argument);
    CHECK_THROWS_AS(lattices::D(3), std::invalid_argument);
    CHECK_THROWS_AS(lattices::E(5), std::invalid_argument);
    CHECK_THROWS_AS(lattices::E(9), std::invalid_argument);
    CHECK_THROWS_AS(lattices::rank1(3), std::invalid_argument);
    CHECK_THROWS_AS(lattices::rank1(0), std::invalid_argument);
    CHECK_THROWS_AS(lattices::from_gram(IntMatrix{{-1}}), std::invalid_argument);
    CHECK_THROWS_AS(lattices::from_gram(IntMatrix{{2, 1}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(lattices::from_gram(IntMatrix{{2, 2}, {2, 2}}), std::invalid_argument);
}

TEST_CASE("rescale") {
    CHECK(rescale(lattices::A(1), 2).gram() == IntMatrix{{-4}});
    CHECK(rescale(lattices::U(), 2).gram() == IntMatrix{{0, 2}, {2, 0}});
    CHECK_THROWS_AS(rescale(lattices::A(1), Rat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(rescale(lattices::A(1), 0), std::invalid_argument);
    Lattice d4 = lattices::D(4);
    CHECK(rescale(d4, 3).determinant() == d4.determinant() * 81);
    CHECK_THROWS_AS(rescale(lattices::U(), Rat(1, 2)), std::invalid_argument);
    CHECK(rescale(rescale(lattices::U(), 2), Rat(1, 2)).gram() == lattices::U().gram());
}

TEST_CASE("direct sums add rank and signature, multiply determinants") {
    Lattice ue8 = direct_sum({lattices::U(), lattices::E(8)});
    CHECK(ue8.rank() == 10);
    CHECK(ue8.determinant() == -1);
    CHECK(ue8.is_unimodular());

    Lattice k3 = lattices::k3();
    CHECK(k3.rank() == 22);
    CHECK(k3.signature() == Signature{3, 19});
    CHECK(k3.is_unimodular());

    CHECK(direct_sum({lattices::A(2)}).gram() == lattices::A(2).gram());
    CHECK_THROWS_AS(direct_sum({}), std::invalid_argument);

    testing::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Lattice a = testing::random_catalog_lattice(rng, Int(1) << 20, 2);
        Lattice b = testing::random_catalog_lattice(rng, Int(1) << 20, 2);
        Lattice s = direct_sum({a, b});
        CHECK(s.rank() == a.rank() + b.rank());
        CHECK(s.determinant() == a.determinant() * b.determinant());
        CHECK(s.signature().t_plus == a.signature().t_plus + b.signature().t_plus);
        CHECK(s.signature().t_minus == a.signature().t_minus + b.signature().t_minus);
    }
}

TEST_CASE("invariants record") {
    LatticeInvariants inv = invariants(direct_sum({lattices::U(), lattices::E(8), lattices::E(7)}));
    CHECK(inv.rank == 17);
    CHECK(inv.is_hyperbolic);
    CHECK(inv.is_even);
    CHECK_FALSE(inv.is_unimodular);

    LatticeInvariants u = invariants(lattices::U());
    CHECK(u.is_unimodular);
    CHECK(u.signature == Signature{1, 1});
}

TEST_CASE("dual gram") {
    CHECK(lattices::A(1).dual_gram()(0, 0) == Rat(-1, 2));
    CHECK(lattices::U().dual_gram() == RatMatrix(lattices::U().gram()));
    CHECK(lattices::E(8).dual_gram().is_integral());
}

TEST_CASE("zero lattice") {
    Lattice z = Lattice::zero();
    CHECK(z.rank() == 0);
    CHECK(z.determinant() == 1);
    CHECK(z.is_unimodular());
    CHECK_FALSE(z.is_hyperbolic());
}
