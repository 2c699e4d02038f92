#pragma once

#include "parahoric/laurent.hpp"
#include "parahoric/parahoric_local.hpp"
#include "parahoric/root_datum.hpp"

namespace parahoric {

/// Local datum on the covering disk: cyclic order d, torus exponents of
/// rho, and an equivariant group element or Higgs coefficient in w.
/// The given exponent representative is kept as is; only its residues
/// mod d enter the equivariance test, while Delta = w^a uses the
/// representative itself, so transport round-trips are exact for any
/// integral a.  normalized() produces the [0, d) representative, which
/// differs by a Hecke shift.
class EquivariantLocalDatum {
public:
    EquivariantLocalDatum(long long d, IntVector rho_exponents, LaurentMatrix element);

    long long order() const { return cls_.order(); }
    const IntVector& rho_exponents() const { return exponents_; }
    const EquivarianceClass& cls() const { return cls_; }
    const LaurentMatrix& element() const { return element_; }

    /// Same element viewed with exponents reduced to [0, d).
    EquivariantLocalDatum normalized() const;

    friend bool operator==(const EquivariantLocalDatum& a, const EquivariantLocalDatum& b) {
        return a.order() == b.order() && a.rho_exponents() == b.rho_exponents() &&
               a.element() == b.element();
    }
    friend bool operator!=(const EquivariantLocalDatum& a, const EquivariantLocalDatum& b) {
        return !(a == b);
    }

private:
    IntVector exponents_;
    EquivarianceClass cls_;
    LaurentMatrix element_;
};

/// Local datum on the quotient disk: a weight and a z-matrix passing the
/// relevant membership test for its profile.
class ParahoricLocalDatum {
public:
    ParahoricLocalDatum(Weight theta, LaurentMatrix element);

    const Weight& theta() const { return theta_; }
    const LaurentMatrix& element() const { return element_; }

    friend bool operator==(const ParahoricLocalDatum& a, const ParahoricLocalDatum& b) {
        return a.theta() == b.theta() && a.element() == b.element();
    }
    friend bool operator!=(const ParahoricLocalDatum& a, const ParahoricLocalDatum& b) {
        return !(a == b);
    }

private:
    Weight theta_;
    LaurentMatrix element_;
};

/// Descent direction of the local correspondence: theta = a/d, the element
/// is Delta-conjugated and rewritten in z, and membership for the profile
/// of theta is verified (a failure signals inconsistent input).
ParahoricLocalDatum to_parahoric(const EquivariantLocalDatum& e);

/// Inverse direction for a compatible order d (d * theta integral).
/// Mutually inverse with to_parahoric on small-weight data.
EquivariantLocalDatum from_parahoric(const ParahoricLocalDatum& p, long long d);

/// Checks the homomorphism law behind the automorphism-group isomorphism:
/// descent of a product equals the product of descents.
bool automorphism_transport_check(const EquivariantLocalDatum& e1,
                                  const EquivariantLocalDatum& e2);

}  // namespace parahoric
