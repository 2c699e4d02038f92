#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "parahoric/parahoric_local.hpp"

using namespace parahoric;
using parahoric::testing::Rng;
using parahoric::testing::randint;

namespace {

Weight make_weight(std::initializer_list<Rational> vals) {
    RatVector v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (const auto& x : vals) v(i++) = x;
    return Weight(std::move(v));
}

LaurentPoly mono(long long e, long long num, long long den = 1) {
    return LaurentPoly::monomial(e, Rational(num, den));
}

const Weight kHalf = make_weight({Rational(1, 2), Rational(-1, 2)});

}  // namespace

TEST_CASE("profile: frozen bound matrices") {
    PoleProfile sl2 = profile(RootDatum::sl(2), kHalf);
    CHECK(sl2.bound(0, 0) == 0);
    CHECK(sl2.bound(0, 1) == -1);
    CHECK(sl2.bound(1, 0) == 1);
    CHECK(sl2.bound(1, 1) == 0);
    CHECK(cell_notation(sl2.bound(0, 1)) == "z^-1 A");
    CHECK(cell_notation(sl2.bound(1, 0)) == "z A");
    CHECK(cell_notation(0) == "A");

    PoleProfile triv = profile(Weight::zero(3));
    CHECK(triv.bounds() == IntMatrix::Zero(3, 3));

    PoleProfile gl2 = profile(RootDatum::gl(2), make_weight({Rational(0), Rational(1, 2)}));
    CHECK(gl2.bound(0, 1) == 1);
    CHECK(gl2.bound(1, 0) == 0);

    PoleProfile gl3 =
        profile(RootDatum::gl(3), make_weight({Rational(0), Rational(1, 3), Rational(2, 3)}));
    IntMatrix want(3, 3);
    want << 0, 1, 1, 0, 0, 1, 0, 0, 0;
    CHECK(gl3.bounds() == want);

    CHECK_THROWS_AS(profile(RootDatum::gl(3), kHalf), std::invalid_argument);
}

TEST_CASE("profile invariant: opposite bounds sum to 0 or 1") {
    Rng rng(5001);
    for (int trial = 0; trial < 100; ++trial) {
        Index n = static_cast<Index>(randint(rng, 1, 5));
        Weight theta = testing::random_small_weight(rng, n, randint(rng, 1, 8));
        PoleProfile p = profile(theta);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                long long s = p.bound(i, j) + p.bound(j, i);
                CHECK((s == 0 || s == 1));
                CHECK((s == 0) == (theta[i] - theta[j]).is_integer());
            }
    }
}

TEST_CASE("is_member: frozen examples") {
    PoleProfile p = profile(kHalf);
    CHECK(is_member(LaurentMatrix::identity(2, FormalVariable::z), p));

    LaurentMatrix u = LaurentMatrix::identity(2, FormalVariable::z);
    u(0, 1) = mono(-1, 1);
    CHECK(is_member(u, p));
    u(0, 1) = mono(-2, 1);
    CHECK_FALSE(is_member(u, p));

    PoleProfile triv = profile(Weight::zero(2));
    LaurentMatrix pole = LaurentMatrix::identity(2, FormalVariable::z);
    pole(0, 1) = mono(-1, 1);
    CHECK_FALSE(is_member(pole, triv));
}

TEST_CASE("is_member: graded invertibility beyond the diagonal") {
    // the affine swap diag-to-antidiagonal element stabilizes the chain
    PoleProfile p = profile(kHalf);
    LaurentMatrix swap(2, FormalVariable::z, MatrixKind::group_element);
    swap(0, 1) = mono(-1, 1);
    swap(1, 0) = mono(1, 1);
    CHECK(is_member(swap, p));

    // determinant z is not a unit of A: graded block drops rank
    PoleProfile triv = profile(Weight::zero(2));
    LaurentMatrix stretch = LaurentMatrix::identity(2, FormalVariable::z);
    stretch(1, 1) = mono(1, 1);
    CHECK_FALSE(is_member(stretch, triv));

    // weights in distinct classes: only the diagonal constant term counts
    PoleProfile mixed = profile(make_weight({Rational(0), Rational(1, 2)}));
    LaurentMatrix ok = LaurentMatrix::identity(2, FormalVariable::z);
    ok(0, 1) = mono(1, 5);
    ok(1, 0) = mono(0, 7);
    CHECK(is_member(ok, mixed));

    LaurentMatrix h(2, FormalVariable::z, MatrixKind::higgs_coefficient);
    CHECK_THROWS_AS(is_member(h, p), std::invalid_argument);
    LaurentMatrix wvar(2, FormalVariable::w, MatrixKind::group_element);
    CHECK_THROWS_AS(is_member(wvar, p), std::invalid_argument);
}

TEST_CASE("is_higgs_member: frozen examples") {
    PoleProfile p = profile(kHalf);
    LaurentMatrix phi(2, FormalVariable::z, MatrixKind::higgs_coefficient);
    phi(0, 0) = mono(0, 1);
    phi(0, 1) = mono(-1, 1);
    phi(1, 0) = mono(1, 1);
    phi(1, 1) = mono(0, -1);
    CHECK(is_higgs_member(phi, p));

    LaurentMatrix zero(2, FormalVariable::z, MatrixKind::higgs_coefficient);
    CHECK(is_higgs_member(zero, p));

    LaurentMatrix late(2, FormalVariable::z, MatrixKind::higgs_coefficient);
    late(1, 0) = mono(0, 1);  // exponent 0 against bound 1
    CHECK_FALSE(is_higgs_member(late, p));

    LaurentMatrix grp = LaurentMatrix::identity(2, FormalVariable::z);
    CHECK_THROWS_AS(is_higgs_member(grp, p), std::invalid_argument);
}

TEST_CASE("is_liftable: rank-two example in both orientations") {
    PoleProfile base = profile(kHalf);
    LaurentMatrix phi(2, FormalVariable::z, MatrixKind::higgs_coefficient);
    phi(0, 0) = mono(0, 1);
    phi(1, 0) = mono(1, 1);
    phi(1, 1) = mono(0, -1);

    ParabolicType borel({1, 1});
    CHECK(is_liftable(phi, ParabolicProfile::opposite(base, borel)));
    CHECK_FALSE(is_liftable(phi, ParabolicProfile::standard(base, borel)));

    // diagonal Higgs coefficients lift to every standard parabolic
    LaurentMatrix diag(2, FormalVariable::z, MatrixKind::higgs_coefficient);
    diag(0, 0) = mono(0, 2);
    diag(1, 1) = mono(0, -2);
    CHECK(is_liftable(diag, ParabolicProfile::standard(base, borel)));
    CHECK(is_liftable(diag, ParabolicProfile::opposite(base, borel)));

    // the full parabolic forbids nothing
    ParabolicProfile full = ParabolicProfile::standard(base, ParabolicType::full(2));
    CHECK(full.forbidden().empty());
    CHECK(is_liftable(phi, full) == is_higgs_member(phi, base));

    // precondition: phi must be a Higgs coefficient of the base profile
    LaurentMatrix out(2, FormalVariable::z, MatrixKind::higgs_coefficient);
    out(1, 0) = mono(0, 1);
    CHECK_THROWS_AS(is_liftable(out, ParabolicProfile::standard(base, borel)),
                    std::invalid_argument);
}

TEST_CASE("hecke_shift: frozen examples and the profile law") {
    PoleProfile p = profile(kHalf);
    CHECK(hecke_shift(p, IntVector::Zero(2)).bounds() == p.bounds());
    IntVector central = IntVector::Constant(2, 3);
    CHECK(hecke_shift(p, central).bounds() == p.bounds());

    IntVector e1(2);
    e1 << 1, 0;
    PoleProfile shifted = hecke_shift(p, e1);
    CHECK(shifted.bound(0, 1) == -2);
    CHECK(shifted.bound(1, 0) == 2);
    CHECK(shifted.theta()[0] == Rational(3, 2));

    IntVector wrong(3);
    wrong << 1, 0, 0;
    CHECK_THROWS_AS(hecke_shift(p, wrong), std::invalid_argument);

    // m_r(theta + shift) = m_r(theta) - r(shift) over all gl_4 roots
    Rng rng(5002);
    RootDatum g4 = RootDatum::gl(4);
    for (int trial = 0; trial < 50; ++trial) {
        Weight theta = testing::random_small_weight(rng, 4, randint(rng, 1, 6));
        IntVector shift(4);
        for (Index i = 0; i < 4; ++i) shift(i) = randint(rng, -3, 3);
        PoleProfile before = profile(g4, theta);
        PoleProfile after = hecke_shift(before, shift);
        for (const auto& r : g4.roots()) {
            Index plus = -1, minus = -1;
            for (Index k = 0; k < 4; ++k) {
                if (r(k) == 1) plus = k;
                if (r(k) == -1) minus = k;
            }
            long long rv = shift(plus) - shift(minus);
            CHECK(after.bound(plus, minus) == before.bound(plus, minus) - rv);
        }
    }
}

TEST_CASE("membership is closed under products") {
    Rng rng(5003);
    for (int trial = 0; trial < 60; ++trial) {
        Index n = static_cast<Index>(randint(rng, 2, 4));
        Weight theta = testing::random_small_weight(rng, n, randint(rng, 1, 6));
        PoleProfile p = profile(theta);
        LaurentMatrix a = testing::random_parahoric_member(rng, p, 3);
        LaurentMatrix b = testing::random_parahoric_member(rng, p, 3);
        REQUIRE(is_member(a, p));
        REQUIRE(is_member(b, p));
        CHECK(is_member(multiply(a, b), p));
    }
}

TEST_CASE("equivariant automorphisms descend to members") {
    Rng rng(5004);
    for (int trial = 0; trial < 60; ++trial) {
        Index n = static_cast<Index>(randint(rng, 1, 4));
        long long d = randint(rng, 1, 6);
        Weight theta = testing::random_small_weight(rng, n, d);
        EquivarianceClass cls = EquivarianceClass::from_weight(theta, d);
        LaurentMatrix sigma = testing::random_equivariant_automorphism(rng, cls);
        REQUIRE(is_equivariant(sigma, cls));
        LaurentMatrix down = descend(sigma, cls, theta);
        CHECK(is_member(down, profile(theta)));
    }
}

TEST_CASE("custom data: non-root positions must vanish") {
    // Levi gl_1 x gl_1 inside gl_2: no off-diagonal roots at all
    RootDatum levi = RootDatum::custom(2, {}, {}, {IntVector::Ones(2)});
    PoleProfile p = profile(levi, Weight::zero(2));
    LaurentMatrix diag = LaurentMatrix::identity(2, FormalVariable::z);
    CHECK(is_member(diag, p));
    LaurentMatrix off = LaurentMatrix::identity(2, FormalVariable::z);
    off(0, 1) = mono(2, 1);
    CHECK_FALSE(is_member(off, p));

    IntVector weird(2);
    weird << 1, 1;
    CHECK_THROWS_AS(profile(RootDatum::custom(2, {weird, IntVector(-weird)}, {}, {}),
                            Weight::zero(2)),
                    std::invalid_argument);
}
