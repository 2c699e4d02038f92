#include "parahoric/descent.hpp"

#include <stdexcept>

namespace parahoric {

namespace {

Weight weight_from_exponents(const IntVector& a, long long d) {
    RatVector coords(a.size());
    for (Index i = 0; i < a.size(); ++i) coords(i) = Rational(a(i), d);
    return Weight(std::move(coords));
}

void verify_membership(const LaurentMatrix& m, const Weight& theta, const char* what) {
    PoleProfile p = profile(theta);
    std::string why = membership_violation(m, p);
    if (!why.empty())
        throw std::invalid_argument(std::string(what) +
                                    ": element fails the membership test, " + why);
}

}  // namespace

EquivariantLocalDatum::EquivariantLocalDatum(long long d, IntVector rho_exponents,
                                             LaurentMatrix element)
    : exponents_(std::move(rho_exponents)),
      cls_(d, exponents_),
      element_(std::move(element)) {
    if (element_.variable() != FormalVariable::w)
        throw std::invalid_argument("EquivariantLocalDatum: expected a w-variable element");
    if (element_.size() != cls_.size())
        throw std::invalid_argument("EquivariantLocalDatum: element size mismatch");
    if (std::string why = equivariance_violation(element_, cls_); !why.empty())
        throw std::invalid_argument("EquivariantLocalDatum: element is not equivariant, " + why);
}

EquivariantLocalDatum EquivariantLocalDatum::normalized() const {
    IntVector a = exponents_;
    for (Index i = 0; i < a.size(); ++i) a(i) = ((a(i) % order()) + order()) % order();
    return EquivariantLocalDatum(order(), std::move(a), element_);
}

ParahoricLocalDatum::ParahoricLocalDatum(Weight theta, LaurentMatrix element)
    : theta_(std::move(theta)), element_(std::move(element)) {
    if (element_.variable() != FormalVariable::z)
        throw std::invalid_argument("ParahoricLocalDatum: expected a z-variable element");
    if (element_.size() != theta_.size())
        throw std::invalid_argument("ParahoricLocalDatum: element size mismatch");
    verify_membership(element_, theta_, "ParahoricLocalDatum");
}

ParahoricLocalDatum to_parahoric(const EquivariantLocalDatum& e) {
    Weight theta = weight_from_exponents(e.rho_exponents(), e.order());
    LaurentMatrix down = descend(e.element(), e.cls(), theta);
    return ParahoricLocalDatum(std::move(theta), std::move(down));
}

EquivariantLocalDatum from_parahoric(const ParahoricLocalDatum& p, long long d) {
    if (!p.theta().is_integral_for(d))
        throw std::invalid_argument("from_parahoric: d * theta is not integral");
    // a = d * theta without reduction mod d, so the two transport
    // directions are mutually inverse on the nose.
    LaurentMatrix up = lift(p.element(), p.theta(), d);
    return EquivariantLocalDatum(d, p.theta().scaled(d), std::move(up));
}

bool automorphism_transport_check(const EquivariantLocalDatum& e1,
                                  const EquivariantLocalDatum& e2) {
    if (e1.order() != e2.order() || e1.rho_exponents() != e2.rho_exponents())
        throw std::invalid_argument("automorphism_transport_check: mismatched local data");
    EquivariantLocalDatum prod(e1.order(), e1.rho_exponents(),
                               multiply(e1.element(), e2.element()));
    LaurentMatrix lhs = to_parahoric(prod).element();
    LaurentMatrix rhs = multiply(to_parahoric(e1).element(), to_parahoric(e2).element());
    return lhs == rhs;
}

}  // namespace parahoric
