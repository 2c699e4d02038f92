#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "parahoric/laurent.hpp"

using namespace parahoric;
using parahoric::testing::Rng;
using parahoric::testing::randint;

namespace {

LaurentPoly mono(long long e, long long num, long long den = 1) {
    return LaurentPoly::monomial(e, Rational(num, den));
}

Weight make_weight(std::initializer_list<Rational> vals) {
    RatVector v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (const auto& x : vals) v(i++) = x;
    return Weight(std::move(v));
}

}  // namespace

TEST_CASE("laurent polynomial ring laws") {
    LaurentPoly p = mono(-1, 1) + mono(2, 3, 2);
    CHECK(p.min_exponent() == -1);
    CHECK(p.max_exponent() == 2);
    CHECK(p.coeff(-1) == Rational(1));
    CHECK(p.coeff(0) == Rational(0));
    CHECK((p - p).is_zero());
    CHECK(p * LaurentPoly(1) == p);
    CHECK((p * LaurentPoly()).is_zero());
    // cancellation drops the stored term
    LaurentPoly q = mono(2, -3, 2);
    CHECK((p + q).term_count() == 1);
    CHECK(p.shifted(3).min_exponent() == 2);
    CHECK(p.stretched(2).max_exponent() == 4);
    CHECK(mono(-4, 5).contracted(2) == mono(-2, 5));
    CHECK_THROWS_AS(mono(3, 1).contracted(2), std::domain_error);
    CHECK(p.str("w") == "w^-1 + 3/2*w^2");
}

TEST_CASE("multiplication is associative with identity units") {
    Rng rng(4001);
    for (int trial = 0; trial < 40; ++trial) {
        Index n = static_cast<Index>(randint(rng, 1, 3));
        LaurentMatrix a(n, FormalVariable::w, MatrixKind::group_element);
        LaurentMatrix b = a, c = a;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                a(i, j) = testing::random_poly(rng, -3, 3, 3);
                b(i, j) = testing::random_poly(rng, -3, 3, 3);
                c(i, j) = testing::random_poly(rng, -3, 3, 3);
            }
        LaurentMatrix id = LaurentMatrix::identity(n, FormalVariable::w);
        CHECK(multiply(id, a) == a);
        CHECK(multiply(a, id) == a);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("multiplication examples") {
    // diag(w, w^-1) * diag(w^-1, w) = I
    LaurentMatrix d1(2, FormalVariable::w, MatrixKind::group_element);
    d1(0, 0) = mono(1, 1);
    d1(1, 1) = mono(-1, 1);
    LaurentMatrix d2(2, FormalVariable::w, MatrixKind::group_element);
    d2(0, 0) = mono(-1, 1);
    d2(1, 1) = mono(1, 1);
    CHECK(multiply(d1, d2) == LaurentMatrix::identity(2, FormalVariable::w));

    // unipotent pair
    LaurentMatrix u(2, FormalVariable::w, MatrixKind::group_element);
    u(0, 0) = mono(0, 1);
    u(0, 1) = mono(1, 1);
    u(1, 1) = mono(0, 1);
    LaurentMatrix v(2, FormalVariable::w, MatrixKind::group_element);
    v(0, 0) = mono(0, 1);
    v(0, 1) = mono(1, -1);
    v(1, 1) = mono(0, 1);
    CHECK(multiply(u, v) == LaurentMatrix::identity(2, FormalVariable::w));
}

TEST_CASE("kind and variable rules") {
    LaurentMatrix g(2, FormalVariable::w, MatrixKind::group_element);
    g(0, 0) = mono(0, 1);
    g(1, 1) = mono(0, 1);
    LaurentMatrix h(2, FormalVariable::w, MatrixKind::higgs_coefficient);
    h(0, 1) = mono(2, 1);
    CHECK(multiply(g, h).kind() == MatrixKind::higgs_coefficient);
    CHECK(multiply(h, g).kind() == MatrixKind::higgs_coefficient);
    CHECK(multiply(g, g).kind() == MatrixKind::group_element);
    CHECK_THROWS_AS(multiply(h, h), std::invalid_argument);

    LaurentMatrix z(2, FormalVariable::z, MatrixKind::group_element);
    z(0, 0) = mono(0, 1);
    z(1, 1) = mono(0, 1);
    CHECK_THROWS_AS(multiply(g, z), std::invalid_argument);

    LaurentMatrix wide(3, FormalVariable::w, MatrixKind::group_element);
    CHECK_THROWS_AS(multiply(g, wide), std::invalid_argument);

    CHECK(h.form_tag() == "dw/w");
    CHECK(g.form_tag().empty());
    CHECK_THROWS_AS(add(g, g), std::invalid_argument);
}

TEST_CASE("equivariance congruence test") {
    // trivial group: everything is equivariant
    Rng rng(4002);
    EquivarianceClass triv(1, IntVector::Zero(2));
    for (int trial = 0; trial < 10; ++trial) {
        LaurentMatrix m(2, FormalVariable::w, MatrixKind::group_element);
        for (Index i = 0; i < 2; ++i)
            for (Index j = 0; j < 2; ++j) m(i, j) = testing::random_poly(rng, -4, 4, 3);
        CHECK(is_equivariant(m, triv));
    }

    // n=2, d=2, a=(0,1): entry (1,2) holding w^0 violates k = -1 (mod 2)
    EquivarianceClass cls(2, IntVector{{0, 1}});
    LaurentMatrix bad(2, FormalVariable::w, MatrixKind::group_element);
    bad(0, 0) = mono(0, 1);
    bad(1, 1) = mono(0, 1);
    bad(0, 1) = mono(0, 1);
    CHECK_FALSE(is_equivariant(bad, cls));
    LaurentMatrix good = bad;
    good(0, 1) = mono(1, 1) + mono(-3, 1, 2);
    CHECK(is_equivariant(good, cls));

    LaurentMatrix zvar(2, FormalVariable::z, MatrixKind::group_element);
    CHECK_THROWS_AS(is_equivariant(zvar, cls), std::invalid_argument);
}

TEST_CASE("the twist matrix obeys its defining one-sided law") {
    // Delta = diag(w^{a_i}) satisfies Delta(gamma w) = rho(gamma) Delta(w):
    // per entry (i, j) every exponent is a_i mod d.  This is the one-sided
    // cousin of the conjugation congruence, stated here directly.
    const long long d = 4;
    IntVector a(3);
    a << 1, 3, 2;
    LaurentMatrix delta(3, FormalVariable::w, MatrixKind::group_element);
    for (Index i = 0; i < 3; ++i) delta(i, i) = mono(a(i), 1);
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j)
            for (const auto& [e, c] : delta(i, j).terms()) {
                (void)c;
                CHECK(((e % d) + d) % d == a(i) % d);
            }
}

TEST_CASE("equivariance class residues") {
    EquivarianceClass cls(4, IntVector{{3, 6, -1}});
    // exponents normalize into [0, d)
    CHECK(cls.exponents()(0) == 3);
    CHECK(cls.exponents()(1) == 2);
    CHECK(cls.exponents()(2) == 3);
    IntMatrix r = cls.residues();
    for (Index i = 0; i < 3; ++i) {
        CHECK(r(i, i) == 0);
        for (Index j = 0; j < 3; ++j) CHECK((r(i, j) + r(j, i)) % 4 == 0);
    }
    CHECK_THROWS_AS(EquivarianceClass(0, IntVector::Zero(2)), std::invalid_argument);
}

TEST_CASE("descend: frozen examples") {
    Weight theta = make_weight({Rational(1, 2), Rational(-1, 2)});
    EquivarianceClass cls = EquivarianceClass::from_weight(theta);

    CHECK(descend(LaurentMatrix::identity(2, FormalVariable::w), cls, theta) ==
          LaurentMatrix::identity(2, FormalVariable::z));

    // off-diagonal terms w^{-2} and w^{2} against Delta = diag(w, w^{-1});
    // the conjugation shifts (1,2) by -2 and (2,1) by +2, then halves.
    LaurentMatrix m = LaurentMatrix::identity(2, FormalVariable::w);
    m(0, 1) = mono(-2, 1);
    m(1, 0) = mono(2, 1);
    LaurentMatrix down = descend(m, cls, theta);
    CHECK(down(0, 1) == mono(-2, 1));
    CHECK(down(1, 0) == mono(2, 1));
    CHECK(down(0, 0) == mono(0, 1));
    CHECK(down.variable() == FormalVariable::z);

    // matches the raw exponent-bookkeeping oracle
    CHECK(down == testing::oracle_descend(m, theta.scaled(2), 2));

    // higgs: diag(1,-1) dw/w with d = 2 becomes diag(1/2,-1/2) dz/z
    LaurentMatrix phi(2, FormalVariable::w, MatrixKind::higgs_coefficient);
    phi(0, 0) = mono(0, 1);
    phi(1, 1) = mono(0, -1);
    LaurentMatrix phi_down = descend(phi, cls, theta);
    CHECK(phi_down(0, 0) == mono(0, 1, 2));
    CHECK(phi_down(1, 1) == mono(0, -1, 2));
    CHECK(phi_down.form_tag() == "dz/z");

    // non-equivariant input is rejected
    LaurentMatrix bad = LaurentMatrix::identity(2, FormalVariable::w);
    bad(0, 1) = mono(1, 1);
    CHECK_THROWS_AS(descend(bad, cls, theta), std::invalid_argument);
}

TEST_CASE("lift: frozen examples") {
    Weight theta = make_weight({Rational(1, 2), Rational(-1, 2)});
    CHECK(lift(LaurentMatrix::identity(2, FormalVariable::z), theta) ==
          LaurentMatrix::identity(2, FormalVariable::w));

    // entry (1,2) = z^{-1} lifts to w^0: 2*(-1) + (1 - (-1)) = 0
    LaurentMatrix m = LaurentMatrix::identity(2, FormalVariable::z);
    m(0, 1) = mono(-1, 1);
    LaurentMatrix up = lift(m, theta);
    CHECK(up(0, 1) == mono(0, 1));
    CHECK(up.variable() == FormalVariable::w);

    LaurentMatrix wrong_var = LaurentMatrix::identity(2, FormalVariable::w);
    CHECK_THROWS_AS(lift(wrong_var, theta), std::invalid_argument);
}

TEST_CASE("lift and descend are mutually inverse") {
    Rng rng(4003);
    for (int trial = 0; trial < 200; ++trial) {
        Index n = static_cast<Index>(randint(rng, 1, 4));
        long long d = randint(rng, 1, 6);
        Weight theta = testing::random_small_weight(rng, n, d);
        EquivarianceClass cls = EquivarianceClass::from_weight(theta, d);

        // z side first: arbitrary z-matrix round-trips through the cover
        LaurentMatrix zm(n, FormalVariable::z,
                         trial % 2 ? MatrixKind::group_element : MatrixKind::higgs_coefficient);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) zm(i, j) = testing::random_poly(rng, -3, 3, 3);
        LaurentMatrix up = lift(zm, theta, d);
        CHECK(is_equivariant(up, cls));
        CHECK(descend(up, cls, theta) == zm);

        // w side: equivariant matrices survive the other composition
        LaurentMatrix wm(n, FormalVariable::w, MatrixKind::group_element);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                LaurentPoly p;
                int terms = static_cast<int>(randint(rng, 0, 3));
                for (int t = 0; t < terms; ++t)
                    p += LaurentPoly::monomial(
                        cls.residue(i, j) + d * randint(rng, -2, 2),
                        testing::random_rational(rng, 3, -3, 3));
                wm(i, j) = std::move(p);
            }
        CHECK(lift(descend(wm, cls, theta), theta, d) == wm);
    }
}

TEST_CASE("descent is a homomorphism on equivariant group elements") {
    Rng rng(4004);
    for (int trial = 0; trial < 100; ++trial) {
        Index n = static_cast<Index>(randint(rng, 1, 3));
        long long d = randint(rng, 1, 4);
        Weight theta = testing::random_small_weight(rng, n, d);
        EquivarianceClass cls = EquivarianceClass::from_weight(theta, d);
        LaurentMatrix a = testing::random_equivariant_automorphism(rng, cls);
        LaurentMatrix b = testing::random_equivariant_automorphism(rng, cls);
        CHECK(descend(multiply(a, b), cls, theta) ==
              multiply(descend(a, cls, theta), descend(b, cls, theta)));
    }
}

TEST_CASE("higgs transport preserves matrix and form exactly") {
    Rng rng(4005);
    for (int trial = 0; trial < 100; ++trial) {
        Index n = static_cast<Index>(randint(rng, 1, 3));
        long long d = randint(rng, 1, 5);
        Weight theta = testing::random_small_weight(rng, n, d);
        EquivarianceClass cls = EquivarianceClass::from_weight(theta, d);
        LaurentMatrix phi = testing::random_equivariant_higgs(rng, cls);
        LaurentMatrix down = descend(phi, cls, theta);
        CHECK(down.form_tag() == "dz/z");
        CHECK(lift(down, theta, d) == phi);
    }
}

TEST_CASE("inverse via unit-monomial determinant") {
    LaurentMatrix u(2, FormalVariable::w, MatrixKind::group_element);
    u(0, 0) = mono(0, 1);
    u(0, 1) = mono(1, 1);
    u(1, 1) = mono(0, 1);
    LaurentMatrix ui = inverse(u);
    CHECK(multiply(u, ui) == LaurentMatrix::identity(2, FormalVariable::w));
    CHECK(multiply(ui, u) == LaurentMatrix::identity(2, FormalVariable::w));

    LaurentMatrix dm(2, FormalVariable::w, MatrixKind::group_element);
    dm(0, 0) = mono(1, 2);
    dm(1, 1) = mono(-1, 1, 3);
    LaurentMatrix dmi = inverse(dm);
    CHECK(multiply(dm, dmi) == LaurentMatrix::identity(2, FormalVariable::w));

    CHECK(determinant(dm) == mono(0, 2, 3));

    // determinant 1 + w is not a unit in the Laurent ring
    LaurentMatrix bad(2, FormalVariable::w, MatrixKind::group_element);
    bad(0, 0) = mono(0, 1) + mono(1, 1);
    bad(1, 1) = mono(0, 1);
    CHECK_THROWS_AS(inverse(bad), std::domain_error);

    LaurentMatrix h(2, FormalVariable::w, MatrixKind::higgs_coefficient);
    CHECK_THROWS_AS(inverse(h), std::invalid_argument);
}

TEST_CASE("random inverses compose to the identity") {
    Rng rng(4006);
    for (int trial = 0; trial < 50; ++trial) {
        Index n = static_cast<Index>(randint(rng, 1, 3));
        // product of elementary unipotents and unit-monomial diagonals has
        // a unit-monomial determinant by construction
        LaurentMatrix m = LaurentMatrix::identity(n, FormalVariable::w);
        for (int f = 0; f < 4; ++f) {
            LaurentMatrix g = LaurentMatrix::identity(n, FormalVariable::w);
            Index i = static_cast<Index>(randint(rng, 0, n - 1));
            Index j = static_cast<Index>(randint(rng, 0, n - 1));
            if (i == j)
                g(i, i) = mono(randint(rng, -2, 2), randint(rng, 0, 1) ? 1 : -2);
            else
                g(i, j) = testing::random_poly(rng, -2, 2, 2);
            m = multiply(m, g);
        }
        LaurentMatrix mi = inverse(m);
        CHECK(multiply(m, mi) == LaurentMatrix::identity(n, FormalVariable::w));
    }
}
