#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3lat/lattice.hpp"
#include "test_support.hpp"

using namespace k3lat;

namespace {

bool is_unimodular(const IntMatrix& m) {
    Int d = determinant(m);
    return d == 1 || d == -1;
}

void check_snf(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    const int steps = std::min(m.rows(), m.cols());
    for (int i = 0; i < steps; ++i) {
        CHECK(s.d(i, i) >= 0);
        if (i + 1 < steps && s.d(i + 1, i + 1) != 0) {
            if (s.d(i, i) == 0)
                CHECK(s.d(i + 1, i + 1) == 0);
            else
                CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
        }
    }
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form on stated examples") {
    check_snf(IntMatrix::identity(3));
    SmithResult id3 = smith_normal_form(IntMatrix::identity(3));
    CHECK(id3.d == IntMatrix::identity(3));

    IntMatrix a{{2, 0}, {0, 4}};
    SmithResult sa = smith_normal_form(a);
    CHECK(sa.d(0, 0) == 2);
    CHECK(sa.d(1, 1) == 4);
    check_snf(a);

    IntMatrix b{{2, 1}, {1, -2}};
    SmithResult sb = smith_normal_form(b);
    CHECK(sb.d(0, 0) == 1);
    CHECK(sb.d(1, 1) == 5);
    check_snf(b);
}

TEST_CASE("smith normal form on random matrices") {
    testing::Rng rng(20230811);
    for (int trial = 0; trial < 200; ++trial) {
        int r = testing::pick(rng, 1, 6), c = testing::pick(rng, 1, 6);
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = testing::pick(rng, -9, 9);
        check_snf(m);
    }
}

TEST_CASE("integer kernel saturation") {
    IntMatrix m(1, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    IntMatrix k = integer_kernel(m);
    REQUIRE(k.cols() == 1);
    CHECK(m * k == IntMatrix::zero(1, 1));
    CHECK(abs(k(0, 0) * 1 + 2 * k(1, 0)) == 0);
    CHECK((abs(k(0, 0)) == 2 && abs(k(1, 0)) == 1));

    CHECK(integer_kernel(IntMatrix::identity(4)).cols() == 0);
    CHECK(integer_kernel(IntMatrix::zero(1, 2)).cols() == 2);
}

TEST_CASE("integer kernel saturation on random matrices") {
    testing::Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int r = testing::pick(rng, 1, 4), c = testing::pick(rng, 1, 6);
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = testing::pick(rng, -6, 6);
        IntMatrix k = integer_kernel(m);
        CHECK(m * k == IntMatrix::zero(r, k.cols()));
        if (k.cols() > 0) {
            // Saturation: the Smith form of the kernel basis is the identity
            // block, i.e. every invariant factor equals 1.
            SmithResult s = smith_normal_form(k);
            for (int d = 0; d < k.cols(); ++d) CHECK(s.d(d, d) == 1);
        }
    }
}

TEST_CASE("determinant fixtures") {
    CHECK(determinant(lattices::U().gram()) == -1);
    CHECK(determinant(lattices::E(8).gram()) == 1);
    CHECK(determinant(lattices::A(1).gram()) == -2);
    CHECK(determinant(lattices::E(7).gram()) == -2);
    CHECK(determinant(lattices::E(6).gram()) == 3);
    CHECK(determinant(lattices::A(2).gram()) == 3);
    CHECK(determinant(lattices::D(4).gram()) == 4);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant agrees with smith normal form") {
    testing::Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int n = testing::pick(rng, 1, 5);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = testing::pick(rng, -7, 7);
        Int det = determinant(m);
        SmithResult s = smith_normal_form(m);
        Int prod = 1;
        for (int i = 0; i < n; ++i) prod *= s.d(i, i);
        CHECK(abs(det) == prod);
    }
}

TEST_CASE("symmetric signature fixtures") {
    Signature u = symmetric_signature(lattices::U().gram());
    CHECK(u == Signature{1, 1});
    CHECK(symmetric_signature(lattices::k3().gram()) == Signature{3, 19});
    CHECK(symmetric_signature(lattices::E(7).gram()) == Signature{0, 7});
    IntMatrix degenerate{{1, 1}, {1, 1}};
    CHECK_THROWS_AS(symmetric_signature(degenerate), std::domain_error);
}

TEST_CASE("signature negation swaps components") {
    testing::Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        Lattice l = testing::random_catalog_lattice(rng, Int(1) << 24);
        Signature s = symmetric_signature(l.gram());
        Signature t = symmetric_signature(-l.gram());
        CHECK(s.t_plus == t.t_minus);
        CHECK(s.t_minus == t.t_plus);
        CHECK(s.t_plus + s.t_minus == l.rank());
    }
}

TEST_CASE("rational inverse") {
    RatMatrix ia = rational_inverse(lattices::A(1).gram());
    CHECK(ia(0, 0) == Rat(-1, 2));
    RatMatrix iu = rational_inverse(lattices::U().gram());
    CHECK(iu == RatMatrix(lattices::U().gram()));
    CHECK(rational_inverse(IntMatrix::identity(3)) == RatMatrix::identity(3));
    IntMatrix sing{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(rational_inverse(sing), std::domain_error);

    testing::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Lattice l = testing::random_catalog_lattice(rng, Int(1) << 24);
        RatMatrix inv = rational_inverse(l.gram());
        CHECK(inv * RatMatrix(l.gram()) == RatMatrix::identity(l.rank()));
    }
}
