#pragma once

// Shared generators and independent oracles for the test suites.  The
// oracles deliberately avoid the library's transport and stability code
// paths: descent/lift expectations come from raw per-term exponent
// bookkeeping, stability expectations from a brute-force slope scan.

#include <map>
#include <random>
#include <vector>

#include "parahoric/degree_stability.hpp"
#include "parahoric/descent.hpp"
#include "parahoric/laurent.hpp"
#include "parahoric/parahoric_local.hpp"
#include "parahoric/root_datum.hpp"

namespace parahoric::testing {

using Rng = std::mt19937;

inline long long randint(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long long max_den, long long num_lo, long long num_hi) {
    long long den = randint(rng, 1, max_den);
    return Rational(randint(rng, num_lo * den, num_hi * den), den);
}

/// Weight with coordinates a_i / d, a_i in [0, d).
inline Weight random_small_weight(Rng& rng, Index n, long long d) {
    RatVector coords(n);
    for (Index i = 0; i < n; ++i) coords(i) = Rational(randint(rng, 0, d - 1), d);
    return Weight(std::move(coords));
}

// ---------------------------------------------------------------------
// Exponent-bookkeeping oracle: conjugation by diag(w^{A_i}) acts on entry
// (i, j) as the exponent shift A_j - A_i, substitution z = w^d divides
// exponents by d, and the dz/z form factor scales coefficients by 1/d.

using TermMap = std::map<long long, Rational>;

inline TermMap oracle_descend_entry(const TermMap& entry, long long Ai, long long Aj,
                                    long long d, bool higgs) {
    TermMap out;
    for (const auto& [e, c] : entry) {
        long long shifted = e + Aj - Ai;
        if (shifted % d != 0) throw std::logic_error("oracle: non-divisible exponent");
        out[shifted / d] = higgs ? c * Rational(1, d) : c;
    }
    return out;
}

inline TermMap oracle_lift_entry(const TermMap& entry, long long Ai, long long Aj, long long d,
                                 bool higgs) {
    TermMap out;
    for (const auto& [e, c] : entry) out[e * d + Ai - Aj] = higgs ? c * Rational(d) : c;
    return out;
}

inline LaurentMatrix oracle_descend(const LaurentMatrix& m, const IntVector& A, long long d) {
    LaurentMatrix out(m.size(), FormalVariable::z, m.kind());
    const bool higgs = m.kind() == MatrixKind::higgs_coefficient;
    for (Index i = 0; i < m.size(); ++i)
        for (Index j = 0; j < m.size(); ++j) {
            LaurentPoly p;
            for (const auto& [e, c] : oracle_descend_entry(m(i, j).terms(), A(i), A(j), d, higgs))
                p += LaurentPoly::monomial(e, c);
            out(i, j) = std::move(p);
        }
    return out;
}

// ---------------------------------------------------------------------
// Random matrices.

inline LaurentPoly random_poly(Rng& rng, long long min_exp, long long max_exp, int max_terms,
                               long long max_den = 3) {
    LaurentPoly p;
    int terms = static_cast<int>(randint(rng, 0, max_terms));
    for (int t = 0; t < terms; ++t)
        p += LaurentPoly::monomial(randint(rng, min_exp, max_exp),
                                   random_rational(rng, max_den, -3, 3));
    return p;
}

/// Random member of the parahoric of theta, built as a product of
/// generators: diagonal units in T(A) and elementary unipotents honoring
/// the pole bounds.  Membership holds by the closure of the stabilizer.
inline LaurentMatrix random_parahoric_member(Rng& rng, const PoleProfile& p, int factors,
                                             int max_terms = 3) {
    const Index n = p.size();
    LaurentMatrix acc = LaurentMatrix::identity(n, FormalVariable::z);
    for (int f = 0; f < factors; ++f) {
        LaurentMatrix g = LaurentMatrix::identity(n, FormalVariable::z);
        if (randint(rng, 0, 2) == 0) {
            // torus element: units of A on the diagonal
            for (Index i = 0; i < n; ++i) {
                LaurentPoly u = LaurentPoly(Rational(randint(rng, 0, 1) == 0 ? 1 : -1));
                int extra = static_cast<int>(randint(rng, 0, max_terms - 1));
                for (int t = 0; t < extra; ++t)
                    u += LaurentPoly::monomial(randint(rng, 1, 3),
                                               random_rational(rng, 2, -2, 2));
                g(i, i) = std::move(u);
            }
        } else {
            Index i = static_cast<Index>(randint(rng, 0, n - 1));
            Index j = static_cast<Index>(randint(rng, 0, n - 1));
            if (i != j) {
                long long lo = p.bound(i, j);
                LaurentPoly u;
                int terms = static_cast<int>(randint(rng, 1, max_terms));
                for (int t = 0; t < terms; ++t)
                    u += LaurentPoly::monomial(randint(rng, lo, lo + 3),
                                               random_rational(rng, 2, -2, 2));
                g(i, j) = std::move(u);
            }
        }
        acc = multiply(acc, g);
    }
    return acc;
}

/// Random holomorphic equivariant w-matrix with invertible constant term,
/// the shape of an automorphism of the trivial equivariant torsor.
inline LaurentMatrix random_equivariant_automorphism(Rng& rng, const EquivarianceClass& cls,
                                                     int max_terms = 3) {
    const Index n = cls.size();
    const long long d = cls.order();
    LaurentMatrix m(n, FormalVariable::w, MatrixKind::group_element);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            const long long r = cls.residue(i, j);
            LaurentPoly p;
            int terms = static_cast<int>(randint(rng, 0, max_terms));
            for (int t = 0; t < terms; ++t)
                p += LaurentPoly::monomial(r + d * randint(rng, 0, 2),
                                           random_rational(rng, 2, -2, 2));
            if (i == j) {
                // pin an invertible unit on the diagonal constant term
                p += LaurentPoly::monomial(0, Rational(1) - p.coeff(0) +
                                                  Rational(randint(rng, 0, 1)));
            }
            m(i, j) = std::move(p);
        }
    // The constant term is block diagonal over the residue classes; make
    // it unipotent within each class so it is invertible for sure.
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            if (i == j || cls.residue(i, j) != 0) continue;
            if (i > j) {
                LaurentPoly p = m(i, j);
                Rational c0 = p.coeff(0);
                if (!c0.is_zero()) m(i, j) = p + LaurentPoly::monomial(0, -c0);
            }
        }
    return m;
}

/// Random Higgs-type equivariant w-matrix (holomorphic coefficients).
inline LaurentMatrix random_equivariant_higgs(Rng& rng, const EquivarianceClass& cls,
                                              int max_terms = 3) {
    const Index n = cls.size();
    const long long d = cls.order();
    LaurentMatrix m(n, FormalVariable::w, MatrixKind::higgs_coefficient);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            const long long r = cls.residue(i, j);
            LaurentPoly p;
            int terms = static_cast<int>(randint(rng, 0, max_terms));
            for (int t = 0; t < terms; ++t)
                p += LaurentPoly::monomial(r + d * randint(rng, 0, 2),
                                           random_rational(rng, 2, -2, 2));
            m(i, j) = std::move(p);
        }
    return m;
}

// ---------------------------------------------------------------------
// Brute-force stability oracle: slope comparison over invariant subsets,
// no shared code with the checkers.

inline Rational oracle_pdeg(const ParabolicHiggsDatum& d, unsigned mask) {
    Rational acc(0);
    for (Index i = 0; i < d.rank(); ++i) {
        if (!(mask & (1u << i))) continue;
        acc += Rational(d.summand_degrees()(i));
        for (const auto& p : d.marked_points()) acc += p[i];
    }
    return acc;
}

inline bool oracle_invariant(const ParabolicHiggsDatum& d, unsigned mask) {
    for (Index j = 0; j < d.rank(); ++j) {
        if (!(mask & (1u << j))) continue;
        for (Index i = 0; i < d.rank(); ++i)
            if (!(mask & (1u << i)) && !d.higgs()(i, j).is_zero()) return false;
    }
    return true;
}

inline Verdict oracle_slope_verdict(const ParabolicHiggsDatum& d, bool with_higgs) {
    const Index n = d.rank();
    Rational total = oracle_pdeg(d, (1u << n) - 1);
    bool boundary = false;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        if (with_higgs && !oracle_invariant(d, mask)) continue;
        long long k = __builtin_popcount(mask);
        Rational lhs = oracle_pdeg(d, mask) * Rational(n);
        Rational rhs = total * Rational(k);
        if (lhs > rhs) return Verdict::unstable;
        if (lhs == rhs) boundary = true;
    }
    return boundary ? Verdict::semistable : Verdict::stable;
}

}  // namespace parahoric::testing
