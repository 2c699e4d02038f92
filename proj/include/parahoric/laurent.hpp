#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "parahoric/root_datum.hpp"
#include "parahoric/types.hpp"

namespace parahoric {

/// Finite Laurent expansion in one formal variable with exact rational
/// coefficients.  Exponents may be negative; zero coefficients are never
/// stored.  All ring laws hold exactly, there is no truncation tolerance.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { *this = LaurentPoly(Rational(c)); }  // NOLINT
    LaurentPoly(int c) { *this = LaurentPoly(Rational(c)); }        // NOLINT
    LaurentPoly(const Rational& c) {                                // NOLINT
        if (!c.is_zero()) terms_.emplace(0, c);
    }

    static LaurentPoly monomial(long long exponent, const Rational& coeff) {
        LaurentPoly p;
        if (!coeff.is_zero()) p.terms_.emplace(exponent, coeff);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<long long, Rational>& terms() const { return terms_; }

    Rational coeff(long long exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    long long min_exponent() const {
        if (is_zero()) throw std::domain_error("LaurentPoly: zero expansion has no exponents");
        return terms_.begin()->first;
    }
    long long max_exponent() const {
        if (is_zero()) throw std::domain_error("LaurentPoly: zero expansion has no exponents");
        return terms_.rbegin()->first;
    }

    bool is_monomial() const { return terms_.size() == 1; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly operator-() const {
        LaurentPoly p;
        for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
        return p;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) {
        LaurentPoly prod;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) prod.add_term(ea + eb, ca * cb);
        *this = std::move(prod);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly p;
        if (c.is_zero()) return p;
        for (const auto& [e, k] : terms_) p.terms_.emplace(e, k * c);
        return p;
    }

    /// Multiplication by t^delta.
    LaurentPoly shifted(long long delta) const {
        LaurentPoly p;
        for (const auto& [e, c] : terms_) p.terms_.emplace(e + delta, c);
        return p;
    }

    /// Exponent map k -> d*k (substitution t = s^d read backwards).
    LaurentPoly stretched(long long d) const {
        LaurentPoly p;
        for (const auto& [e, c] : terms_) p.terms_.emplace(e * d, c);
        return p;
    }

    /// Exponent map k -> k/d; throws if some exponent is not divisible.
    LaurentPoly contracted(long long d) const {
        LaurentPoly p;
        for (const auto& [e, c] : terms_) {
            if (e % d != 0)
                throw std::domain_error("LaurentPoly: exponent " + std::to_string(e) +
                                        " not divisible by " + std::to_string(d));
            p.terms_.emplace(e / d, c);
        }
        return p;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str(const std::string& var) const;

private:
    void add_term(long long e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<long long, Rational> terms_;
};

}  // namespace parahoric

// The traits must precede any Matrix<LaurentPoly> instantiation below.
namespace Eigen {

template <>
struct NumTraits<parahoric::LaurentPoly> {
    using Self = parahoric::LaurentPoly;
    using Real = Self;
    using NonInteger = Self;
    using Nested = Self;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64,
    };
    static inline Self epsilon() { return Self(); }
    static inline Self dummy_precision() { return Self(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace parahoric {

enum class FormalVariable { z, w };
enum class MatrixKind { group_element, higgs_coefficient };

std::string to_string(FormalVariable v);
std::string to_string(MatrixKind k);

/// Square matrix of finite Laurent expansions, tagged by formal variable
/// (z downstairs, w on the cover) and by kind.  A higgs_coefficient matrix
/// is the coefficient of dz/z respectively dw/w; the form tag follows the
/// variable, so the chain-rule factor between the two forms is applied
/// exactly once, at transport time.
class LaurentMatrix {
public:
    LaurentMatrix(Index n, FormalVariable var, MatrixKind kind);
    static LaurentMatrix identity(Index n, FormalVariable var);

    Index size() const { return entries_.rows(); }
    FormalVariable variable() const { return var_; }
    MatrixKind kind() const { return kind_; }
    /// "dz/z" or "dw/w" for higgs coefficients, empty for group elements.
    std::string form_tag() const;

    LaurentPoly& operator()(Index i, Index j) { return entries_(i, j); }
    const LaurentPoly& operator()(Index i, Index j) const { return entries_(i, j); }
    const DenseMatrix<LaurentPoly>& entries() const { return entries_; }
    DenseMatrix<LaurentPoly>& entries() { return entries_; }

    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) { return !(a == b); }

private:
    DenseMatrix<LaurentPoly> entries_;
    FormalVariable var_;
    MatrixKind kind_;
};

/// Matrix product with exact arithmetic.  Kinds compose as
/// group x group = group and group x higgs = higgs (conjugation halves);
/// a higgs x higgs product is rejected.
LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b);
inline LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    return multiply(a, b);
}

/// Entrywise sum, higgs coefficients only.
LaurentMatrix add(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix scale(const LaurentMatrix& m, const Rational& c);

LaurentPoly determinant(const LaurentMatrix& m);

/// Exact inverse of a group element.  A finite Laurent matrix has a finite
/// Laurent inverse precisely when its determinant is a single term c*t^k;
/// anything else throws, since the inverse would be an infinite series.
LaurentMatrix inverse(const LaurentMatrix& m);

/// Required exponent residues a_i - a_j (mod d) derived from the cyclic
/// action rho(gamma) = diag(xi^{a_1}, ..., xi^{a_n}).  Working per exponent
/// replaces all root-of-unity arithmetic: xi^k = xi^{a_i - a_j} iff
/// k = a_i - a_j (mod d).
class EquivarianceClass {
public:
    EquivarianceClass(long long d, IntVector exponents);
    static EquivarianceClass from_weight(const Weight& theta);
    static EquivarianceClass from_weight(const Weight& theta, long long d);

    long long order() const { return d_; }
    /// Normalized exponents, 0 <= a_i < d.
    const IntVector& exponents() const { return exponents_; }
    Index size() const { return exponents_.size(); }

    /// (a_i - a_j) mod d, in [0, d).
    long long residue(Index i, Index j) const;
    IntMatrix residues() const;

private:
    long long d_;
    IntVector exponents_;
};

/// True iff every stored exponent k at entry (i, j) satisfies
/// k = a_i - a_j (mod d).  Invariance is the special case residues = 0.
bool is_equivariant(const LaurentMatrix& m, const EquivarianceClass& cls);

/// Empty when equivariant, else a description naming the offending entry
/// and exponent.
std::string equivariance_violation(const LaurentMatrix& m, const EquivarianceClass& cls);

/// Delta-conjugation and substitution z = w^d: entry (i, j) picks up
/// w^{A_j - A_i} with A = d*theta, all exponents are then divided by d.
/// Higgs coefficients are additionally scaled by 1/d (dz/z = d * dw/w).
/// Input must be w-variable and equivariant for cls; cls must match theta.
LaurentMatrix descend(const LaurentMatrix& m, const EquivarianceClass& cls, const Weight& theta);
LaurentMatrix descend(const LaurentMatrix& m, const Weight& theta);

/// Inverse transport: exponents k -> d*k + (A_i - A_j), higgs coefficients
/// scaled by d.  descend(lift(m)) == m exactly.
LaurentMatrix lift(const LaurentMatrix& m, const Weight& theta);
LaurentMatrix lift(const LaurentMatrix& m, const Weight& theta, long long d);

}  // namespace parahoric
