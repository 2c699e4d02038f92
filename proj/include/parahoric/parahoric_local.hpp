#pragma once

#include <set>
#include <utility>
#include <vector>

#include "parahoric/laurent.hpp"
#include "parahoric/root_datum.hpp"
#include "parahoric/types.hpp"

namespace parahoric {

/// Pole-order profile of a parahoric subgroup: bounds(i, j) is the least
/// allowed z-exponent of entry (i, j), computed as ceil(theta_j - theta_i)
/// under the convention that entry (i, j) carries the root e_i - e_j.
/// That convention is fixed by the SL_2 display with theta = (1/2, -1/2),
/// whose scheme is [[A, z^-1 A], [z A, A]].
///
/// Always satisfies bounds(i, j) + bounds(j, i) in {0, 1}, with 0 exactly
/// when theta_i - theta_j is an integer.
class PoleProfile {
public:
    PoleProfile(Weight theta, GroupTag tag, DenseMatrix<bool> root_positions);

    Index size() const { return bounds_.rows(); }
    const IntMatrix& bounds() const { return bounds_; }
    long long bound(Index i, Index j) const { return bounds_(i, j); }
    const Weight& theta() const { return theta_; }
    GroupTag tag() const { return tag_; }

    /// True when entry (i, j) corresponds to a root of the datum (always
    /// for gl/sl); membership requires non-root entries to vanish.
    bool position_allowed(Index i, Index j) const { return root_positions_(i, j); }

    /// Partition of coordinates into classes with integral theta
    /// differences; the graded invertibility test runs per class.
    const std::vector<std::vector<Index>>& integral_classes() const { return classes_; }

private:
    IntMatrix bounds_;
    Weight theta_;
    GroupTag tag_;
    DenseMatrix<bool> root_positions_;
    std::vector<std::vector<Index>> classes_;
};

/// Profile of the matrix desk model for the root datum and weight.  For a
/// custom datum every root must be of the form e_i - e_j, else the matrix
/// model does not apply and an error is raised.
PoleProfile profile(const RootDatum& datum, const Weight& theta);
/// GL_n convenience overload.
PoleProfile profile(const Weight& theta);

/// Lattice-stabilizer membership for a group element: entrywise bounds,
/// holomorphic invertible diagonal data, and a nonzero graded determinant
/// on every class of coordinates with integral theta differences.  For a
/// custom datum only the entrywise bounds are tested (documented model).
bool is_member(const LaurentMatrix& m, const PoleProfile& p);

/// Entrywise bound check for a dz/z Higgs coefficient; no invertibility.
bool is_higgs_member(const LaurentMatrix& phi, const PoleProfile& p);

/// Empty when the matrix passes the membership test for its kind, else a
/// description naming the offending entry and exponent (or graded class).
std::string membership_violation(const LaurentMatrix& m, const PoleProfile& p);

/// Profile for theta + shift, for an integral cocharacter shift fixed by
/// the cyclic action: bounds(i, j) drop by shift_i - shift_j.
PoleProfile hecke_shift(const PoleProfile& p, const IntVector& shift);

/// A standard parabolic sub-profile: the pole bounds of the ambient
/// parahoric together with the entry positions whose root lies outside
/// R_P and which therefore must vanish.  For the standard orientation the
/// forbidden positions are exactly those strictly below the block
/// diagonal; the opposite orientation swaps them above, which is how the
/// lower-triangular parabolic of the rank-two example is reached without
/// relabeling coordinates.
class ParabolicProfile {
public:
    static ParabolicProfile standard(PoleProfile base, ParabolicType parabolic);
    static ParabolicProfile opposite(PoleProfile base, ParabolicType parabolic);

    const PoleProfile& base() const { return base_; }
    const ParabolicType& parabolic() const { return parabolic_; }
    const std::set<std::pair<Index, Index>>& forbidden() const { return forbidden_; }

private:
    ParabolicProfile(PoleProfile base, ParabolicType parabolic,
                     std::set<std::pair<Index, Index>> forbidden);

    PoleProfile base_;
    ParabolicType parabolic_;
    std::set<std::pair<Index, Index>> forbidden_;
};

/// Whether the Higgs coefficient lifts to a section of the parabolic
/// sub-profile: every forbidden entry must vanish identically, the rest
/// keep the ambient bounds.  phi must already pass is_higgs_member for
/// the base profile.
bool is_liftable(const LaurentMatrix& phi, const ParabolicProfile& pp);

/// Display cell "z^m A" notation for one bound.
std::string cell_notation(long long bound);

}  // namespace parahoric
