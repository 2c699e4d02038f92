#include "parahoric/laurent.hpp"

#include <sstream>

namespace parahoric {

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (e == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << a.str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string to_string(FormalVariable v) { return v == FormalVariable::z ? "z" : "w"; }

std::string to_string(MatrixKind k) {
    return k == MatrixKind::group_element ? "group" : "higgs";
}

LaurentMatrix::LaurentMatrix(Index n, FormalVariable var, MatrixKind kind)
    : entries_(n, n), var_(var), kind_(kind) {
    if (n <= 0) throw std::invalid_argument("LaurentMatrix: size must be positive");
    entries_.setConstant(LaurentPoly());
}

LaurentMatrix LaurentMatrix::identity(Index n, FormalVariable var) {
    LaurentMatrix m(n, var, MatrixKind::group_element);
    for (Index i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
    return m;
}

std::string LaurentMatrix::form_tag() const {
    if (kind_ != MatrixKind::higgs_coefficient) return "";
    return var_ == FormalVariable::z ? "dz/z" : "dw/w";
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.var_ != b.var_ || a.kind_ != b.kind_ || a.size() != b.size()) return false;
    for (Index i = 0; i < a.size(); ++i)
        for (Index j = 0; j < a.size(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.variable() != b.variable())
        throw std::invalid_argument("multiply: formal variable mismatch");
    if (a.size() != b.size()) throw std::invalid_argument("multiply: size mismatch");
    if (a.kind() == MatrixKind::higgs_coefficient && b.kind() == MatrixKind::higgs_coefficient)
        throw std::invalid_argument("multiply: at least one factor must be a group element");
    MatrixKind kind = (a.kind() == MatrixKind::group_element && b.kind() == MatrixKind::group_element)
                          ? MatrixKind::group_element
                          : MatrixKind::higgs_coefficient;
    LaurentMatrix out(a.size(), a.variable(), kind);
    out.entries() = a.entries().lazyProduct(b.entries());
    return out;
}

LaurentMatrix add(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.variable() != b.variable() || a.kind() != b.kind() || a.size() != b.size())
        throw std::invalid_argument("add: incompatible matrices");
    if (a.kind() != MatrixKind::higgs_coefficient)
        throw std::invalid_argument("add: only higgs coefficients are added");
    LaurentMatrix out = a;
    for (Index i = 0; i < a.size(); ++i)
        for (Index j = 0; j < a.size(); ++j) out(i, j) += b(i, j);
    return out;
}

LaurentMatrix scale(const LaurentMatrix& m, const Rational& c) {
    LaurentMatrix out = m;
    for (Index i = 0; i < m.size(); ++i)
        for (Index j = 0; j < m.size(); ++j) out(i, j) = m(i, j).scaled(c);
    return out;
}

namespace {

LaurentPoly det_recursive(const DenseMatrix<LaurentPoly>& m, std::vector<Index>& cols, Index row) {
    const Index n = m.rows();
    if (row == n) return LaurentPoly(1);
    LaurentPoly acc;
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        Index j = cols[k];
        if (!m(row, j).is_zero()) {
            std::vector<Index> rest;
            rest.reserve(cols.size() - 1);
            for (std::size_t l = 0; l < cols.size(); ++l)
                if (l != k) rest.push_back(cols[l]);
            LaurentPoly minor = det_recursive(m, rest, row + 1);
            LaurentPoly term = m(row, j) * minor;
            if (sign < 0) term = -term;
            acc += term;
        }
        sign = -sign;
    }
    return acc;
}

}  // namespace

LaurentPoly determinant(const LaurentMatrix& m) {
    std::vector<Index> cols(static_cast<std::size_t>(m.size()));
    for (Index j = 0; j < m.size(); ++j) cols[static_cast<std::size_t>(j)] = j;
    return det_recursive(m.entries(), cols, 0);
}

LaurentMatrix inverse(const LaurentMatrix& m) {
    if (m.kind() != MatrixKind::group_element)
        throw std::invalid_argument("inverse: group elements only");
    LaurentPoly det = determinant(m);
    if (!det.is_monomial())
        throw std::domain_error(
            "inverse: determinant is not a unit monomial, inverse is an infinite series");
    const long long de = det.min_exponent();
    const Rational dc = det.coeff(de);
    const Index n = m.size();
    LaurentMatrix out(n, m.variable(), MatrixKind::group_element);
    // Adjugate over the Laurent ring, then divide by the unit determinant.
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            std::vector<Index> cols;
            cols.reserve(static_cast<std::size_t>(n - 1));
            for (Index c = 0; c < n; ++c)
                if (c != i) cols.push_back(c);
            DenseMatrix<LaurentPoly> sub(n - 1, n - 1);
            Index rr = 0;
            for (Index r = 0; r < n; ++r) {
                if (r == j) continue;
                Index cc = 0;
                for (Index c : cols) sub(rr, cc++) = m(r, c);
                ++rr;
            }
            std::vector<Index> subcols(static_cast<std::size_t>(n - 1));
            for (Index c = 0; c + 1 < n; ++c) subcols[static_cast<std::size_t>(c)] = c;
            LaurentPoly cof = (n == 1) ? LaurentPoly(1) : det_recursive(sub, subcols, 0);
            if (((i + j) & 1) != 0) cof = -cof;
            out(i, j) = cof.shifted(-de).scaled(Rational(1) / dc);
        }
    }
    return out;
}

EquivarianceClass::EquivarianceClass(long long d, IntVector exponents)
    : d_(d), exponents_(std::move(exponents)) {
    if (d_ <= 0) throw std::invalid_argument("EquivarianceClass: order must be positive");
    if (exponents_.size() == 0) throw std::invalid_argument("EquivarianceClass: empty exponents");
    for (Index i = 0; i < exponents_.size(); ++i)
        exponents_(i) = ((exponents_(i) % d_) + d_) % d_;
}

EquivarianceClass EquivarianceClass::from_weight(const Weight& theta) {
    return from_weight(theta, theta.denominator());
}

EquivarianceClass EquivarianceClass::from_weight(const Weight& theta, long long d) {
    return EquivarianceClass(d, theta.scaled(d));
}

long long EquivarianceClass::residue(Index i, Index j) const {
    return ((exponents_(i) - exponents_(j)) % d_ + d_) % d_;
}

IntMatrix EquivarianceClass::residues() const {
    const Index n = size();
    IntMatrix out(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) out(i, j) = residue(i, j);
    return out;
}

std::string equivariance_violation(const LaurentMatrix& m, const EquivarianceClass& cls) {
    if (m.variable() != FormalVariable::w)
        throw std::invalid_argument("is_equivariant: expected a w-variable matrix");
    if (m.size() != cls.size()) throw std::invalid_argument("is_equivariant: size mismatch");
    const long long d = cls.order();
    for (Index i = 0; i < m.size(); ++i)
        for (Index j = 0; j < m.size(); ++j) {
            const long long want = cls.residue(i, j);
            for (const auto& [e, c] : m(i, j).terms()) {
                (void)c;
                if (((e % d) + d) % d != want)
                    return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           "): exponent " + std::to_string(e) + " violates the residue " +
                           std::to_string(want) + " (mod " + std::to_string(d) + ")";
            }
        }
    return "";
}

bool is_equivariant(const LaurentMatrix& m, const EquivarianceClass& cls) {
    return equivariance_violation(m, cls).empty();
}

LaurentMatrix descend(const LaurentMatrix& m, const EquivarianceClass& cls, const Weight& theta) {
    if (m.variable() != FormalVariable::w)
        throw std::invalid_argument("descend: expected a w-variable matrix");
    const long long d = cls.order();
    if (!theta.is_integral_for(d))
        throw std::invalid_argument("descend: class order incompatible with theta");
    IntVector A = theta.scaled(d);
    if (A.size() != cls.size()) throw std::invalid_argument("descend: dimension mismatch");
    for (Index i = 0; i < A.size(); ++i)
        if (((A(i) % d) + d) % d != cls.exponents()(i))
            throw std::invalid_argument("descend: class does not match theta");
    if (std::string why = equivariance_violation(m, cls); !why.empty())
        throw std::invalid_argument("descend: matrix is not equivariant, " + why);

    LaurentMatrix out(m.size(), FormalVariable::z, m.kind());
    for (Index i = 0; i < m.size(); ++i)
        for (Index j = 0; j < m.size(); ++j)
            out(i, j) = m(i, j).shifted(A(j) - A(i)).contracted(d);
    if (m.kind() == MatrixKind::higgs_coefficient)
        out = scale(out, Rational(1, d));
    return out;
}

LaurentMatrix descend(const LaurentMatrix& m, const Weight& theta) {
    return descend(m, EquivarianceClass::from_weight(theta), theta);
}

LaurentMatrix lift(const LaurentMatrix& m, const Weight& theta) {
    return lift(m, theta, theta.denominator());
}

LaurentMatrix lift(const LaurentMatrix& m, const Weight& theta, long long d) {
    if (m.variable() != FormalVariable::z)
        throw std::invalid_argument("lift: expected a z-variable matrix");
    IntVector A = theta.scaled(d);
    if (A.size() != m.size()) throw std::invalid_argument("lift: dimension mismatch");
    LaurentMatrix out(m.size(), FormalVariable::w, m.kind());
    for (Index i = 0; i < m.size(); ++i)
        for (Index j = 0; j < m.size(); ++j)
            out(i, j) = m(i, j).stretched(d).shifted(A(i) - A(j));
    if (m.kind() == MatrixKind::higgs_coefficient)
        out = scale(out, Rational(d));
    return out;
}

}  // namespace parahoric
