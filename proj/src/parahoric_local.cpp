#include "parahoric/parahoric_local.hpp"

#include <stdexcept>

namespace parahoric {

namespace {

// Exact rational determinant by fraction-free Gaussian elimination.
Rational rat_determinant(RatMatrix m) {
    const Index n = m.rows();
    Rational det(1);
    for (Index c = 0; c < n; ++c) {
        Index pivot = -1;
        for (Index r = c; r < n; ++r)
            if (!m(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != c) {
            m.row(pivot).swap(m.row(c));
            det = -det;
        }
        det *= m(c, c);
        for (Index r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            Rational f = m(r, c) / m(c, c);
            for (Index k = c; k < n; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return det;
}

}  // namespace

PoleProfile::PoleProfile(Weight theta, GroupTag tag, DenseMatrix<bool> root_positions)
    : theta_(std::move(theta)), tag_(tag), root_positions_(std::move(root_positions)) {
    const Index n = theta_.size();
    if (root_positions_.rows() != n || root_positions_.cols() != n)
        throw std::invalid_argument("PoleProfile: root position mask dimension mismatch");
    bounds_.resize(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            bounds_(i, j) = (i == j) ? 0 : (theta_[j] - theta_[i]).ceil();

    // Coordinates with integral theta differences share a graded block.
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Index i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<Index> cls{i};
        seen[static_cast<std::size_t>(i)] = true;
        for (Index j = i + 1; j < n; ++j) {
            if (seen[static_cast<std::size_t>(j)]) continue;
            if ((theta_[i] - theta_[j]).is_integer()) {
                cls.push_back(j);
                seen[static_cast<std::size_t>(j)] = true;
            }
        }
        classes_.push_back(std::move(cls));
    }
}

PoleProfile profile(const RootDatum& datum, const Weight& theta) {
    if (datum.rank() != theta.size())
        throw std::invalid_argument("profile: weight dimension does not match datum rank");
    const Index n = datum.rank();
    DenseMatrix<bool> allowed(n, n);
    allowed.setConstant(true);
    if (datum.tag() == GroupTag::custom) {
        allowed.setConstant(false);
        for (Index i = 0; i < n; ++i) allowed(i, i) = true;
        for (const auto& r : datum.roots()) {
            Index plus = -1, minus = -1;
            bool type_a = true;
            for (Index k = 0; k < n; ++k) {
                if (r(k) == 1 && plus < 0) plus = k;
                else if (r(k) == -1 && minus < 0) minus = k;
                else if (r(k) != 0) type_a = false;
            }
            if (!type_a || plus < 0 || minus < 0)
                throw std::invalid_argument(
                    "profile: custom roots must have the form e_i - e_j for the matrix model");
            allowed(plus, minus) = true;
        }
    }
    return PoleProfile(theta, datum.tag(), std::move(allowed));
}

PoleProfile profile(const Weight& theta) {
    DenseMatrix<bool> allowed(theta.size(), theta.size());
    allowed.setConstant(true);
    return PoleProfile(theta, GroupTag::gl, std::move(allowed));
}

namespace {

std::string bound_violation(const LaurentMatrix& m, const PoleProfile& p) {
    for (Index i = 0; i < m.size(); ++i)
        for (Index j = 0; j < m.size(); ++j) {
            const LaurentPoly& e = m(i, j);
            if (e.is_zero()) continue;
            const std::string where =
                "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            if (!p.position_allowed(i, j))
                return where + " must vanish, no root at this position";
            if (e.min_exponent() < p.bound(i, j))
                return where + ": exponent " + std::to_string(e.min_exponent()) +
                       " below the bound " + std::to_string(p.bound(i, j));
        }
    return "";
}

std::string graded_violation(const LaurentMatrix& m, const PoleProfile& p) {
    // Graded invertibility per integral class: the coefficients sitting
    // exactly on the bound must form an invertible matrix.
    for (const auto& cls : p.integral_classes()) {
        const Index k = static_cast<Index>(cls.size());
        RatMatrix g(k, k);
        for (Index a = 0; a < k; ++a)
            for (Index b = 0; b < k; ++b)
                g(a, b) = m(cls[static_cast<std::size_t>(a)], cls[static_cast<std::size_t>(b)])
                              .coeff(p.bound(cls[static_cast<std::size_t>(a)],
                                             cls[static_cast<std::size_t>(b)]));
        if (rat_determinant(g).is_zero()) {
            std::string s = "graded determinant vanishes on the class {";
            for (std::size_t a = 0; a < cls.size(); ++a)
                s += (a ? "," : "") + std::to_string(cls[a] + 1);
            return s + "}";
        }
    }
    return "";
}

}  // namespace

std::string membership_violation(const LaurentMatrix& m, const PoleProfile& p) {
    if (m.variable() != FormalVariable::z)
        throw std::invalid_argument("membership: expected a z-variable matrix");
    if (m.size() != p.size()) throw std::invalid_argument("membership: size mismatch");
    std::string why = bound_violation(m, p);
    if (!why.empty()) return why;
    if (m.kind() == MatrixKind::higgs_coefficient) return "";
    if (p.tag() == GroupTag::custom) return "";
    return graded_violation(m, p);
}

bool is_member(const LaurentMatrix& m, const PoleProfile& p) {
    if (m.kind() != MatrixKind::group_element)
        throw std::invalid_argument("is_member: expected a group element");
    return membership_violation(m, p).empty();
}

bool is_higgs_member(const LaurentMatrix& phi, const PoleProfile& p) {
    if (phi.kind() != MatrixKind::higgs_coefficient)
        throw std::invalid_argument("is_higgs_member: expected a dz/z coefficient");
    return membership_violation(phi, p).empty();
}

PoleProfile hecke_shift(const PoleProfile& p, const IntVector& shift) {
    if (shift.size() != p.size())
        throw std::invalid_argument("hecke_shift: shift dimension mismatch");
    DenseMatrix<bool> allowed(p.size(), p.size());
    for (Index i = 0; i < p.size(); ++i)
        for (Index j = 0; j < p.size(); ++j) allowed(i, j) = p.position_allowed(i, j);
    return PoleProfile(p.theta().shifted(shift), p.tag(), std::move(allowed));
}

ParabolicProfile::ParabolicProfile(PoleProfile base, ParabolicType parabolic,
                                   std::set<std::pair<Index, Index>> forbidden)
    : base_(std::move(base)), parabolic_(std::move(parabolic)), forbidden_(std::move(forbidden)) {
    if (base_.size() != parabolic_.rank())
        throw std::invalid_argument("ParabolicProfile: parabolic rank mismatch");
}

ParabolicProfile ParabolicProfile::standard(PoleProfile base, ParabolicType parabolic) {
    std::set<std::pair<Index, Index>> forbidden;
    for (Index i = 0; i < parabolic.rank(); ++i)
        for (Index j = 0; j < parabolic.rank(); ++j)
            if (parabolic.block_of(i) > parabolic.block_of(j)) forbidden.emplace(i, j);
    return ParabolicProfile(std::move(base), std::move(parabolic), std::move(forbidden));
}

ParabolicProfile ParabolicProfile::opposite(PoleProfile base, ParabolicType parabolic) {
    std::set<std::pair<Index, Index>> forbidden;
    for (Index i = 0; i < parabolic.rank(); ++i)
        for (Index j = 0; j < parabolic.rank(); ++j)
            if (parabolic.block_of(i) < parabolic.block_of(j)) forbidden.emplace(i, j);
    return ParabolicProfile(std::move(base), std::move(parabolic), std::move(forbidden));
}

bool is_liftable(const LaurentMatrix& phi, const ParabolicProfile& pp) {
    if (!is_higgs_member(phi, pp.base()))
        throw std::invalid_argument("is_liftable: phi is not a Higgs coefficient of the profile");
    for (const auto& [i, j] : pp.forbidden())
        if (!phi(i, j).is_zero()) return false;
    return true;
}

std::string cell_notation(long long bound) {
    if (bound == 0) return "A";
    if (bound == 1) return "z A";
    return "z^" + std::to_string(bound) + " A";
}

}  // namespace parahoric
