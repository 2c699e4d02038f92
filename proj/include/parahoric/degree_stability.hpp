#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parahoric/root_datum.hpp"
#include "parahoric/types.hpp"

namespace parahoric {

using Subset = std::vector<Index>;

/// Desk model of a parabolic Higgs bundle: a split sum of line-bundle
/// summands carrying integer degrees, one rational parabolic weight per
/// summand at each marked point, and a constant rational residue matrix
/// for the Higgs field.  Degrees are free inputs; every formula below
/// consumes only degrees, dimensions, weights and pairings, so no curve
/// geometry enters.
class ParabolicHiggsDatum {
public:
    ParabolicHiggsDatum(IntVector summand_degrees, std::vector<Weight> marked_points,
                        RatMatrix higgs, GroupTag tag = GroupTag::gl,
                        bool normalize_weights = false);

    Index rank() const { return degrees_.size(); }
    const IntVector& summand_degrees() const { return degrees_; }
    const std::vector<Weight>& marked_points() const { return points_; }
    const RatMatrix& higgs() const { return higgs_; }
    GroupTag tag() const { return tag_; }

private:
    IntVector degrees_;
    std::vector<Weight> points_;
    RatMatrix higgs_;
    GroupTag tag_;
};

/// Reduction datum in the desk model: a strictly increasing chain of
/// coordinate subsets S_1 < ... < S_r = {all} together with strictly
/// increasing (anti-dominant) block values lambda_1 < ... < lambda_r.
/// V_j = S_j minus S_{j-1} are the character eigenspaces.
class ReductionDatum {
public:
    ReductionDatum(std::vector<Subset> flag, RatVector lambda);
    /// Single-block reduction with the given central value.
    static ReductionDatum trivial(Index n, Rational lambda = Rational(1));

    Index rank() const;
    Index block_count() const { return static_cast<Index>(flag_.size()); }
    const std::vector<Subset>& flag() const { return flag_; }
    const RatVector& lambda() const { return lambda_; }
    /// V_j, 0-based.
    Subset eigenspace(Index j) const;
    /// Character as an n-vector: coordinate i carries the lambda of its block.
    RatVector character_vector() const;

private:
    std::vector<Subset> flag_;
    RatVector lambda_;
};

/// par deg of the subobject spanned by the summands in s:
/// sum of degrees plus the sum of all marked-point weights over s.
Rational parabolic_degree(const ParabolicHiggsDatum& d, const Subset& s);

/// Parahoric degree of a reduction: deg L^chi + <theta, chi>, computed a
/// second time as sum_j lambda_j * par deg V_j; the two routes must agree
/// exactly and the common value is returned.
Rational parahoric_degree(const ParabolicHiggsDatum& d, const ReductionDatum& r);

/// Degree of the corresponding equivariant bundle upstairs on a cover of
/// the given order: the pulled-back line-bundle degree plus the
/// Delta contribution, assembled independently and asserted equal to
/// cover_order * parahoric_degree.
Rational equivariant_degree(const ParabolicHiggsDatum& d, const ReductionDatum& r,
                            long long cover_order);

/// All coordinate subsets preserved by the residue matrix: s is invariant
/// when every column in s vanishes on the rows outside s.  Includes the
/// empty and full subsets; enumeration order is by ascending bitmask.
std::vector<Subset> invariant_subsets(const ParabolicHiggsDatum& d);
bool subset_invariant(const RatMatrix& higgs, const Subset& s);

enum class Verdict { stable, semistable, unstable };
std::string to_string(Verdict v);

/// Destabilizing (or tightest) subobject with its exact margin.  The
/// margin sign matches the verdict; central marks the center direction of
/// the R_mu check, where the subset is empty.
struct StabilityWitness {
    Subset subset;
    bool central = false;
    Rational margin;
};

struct CheckResult {
    Verdict verdict = Verdict::stable;
    std::optional<StabilityWitness> worst;
};

/// Ramanathan stability over center-trivial anti-dominant characters.
/// Route one walks every flag of (invariant) subsets against the cone rays
/// of antidominant_ray_basis through parahoric_degree; route two scans
/// single subsets with the reduced margin |S| par deg(E) - n par deg(S).
/// The two routes must agree and the worst witness is recorded.
CheckResult check_R(const ParabolicHiggsDatum& d, bool with_higgs);

/// Stability with the center released and mu subtracted: margins
/// mu |W| - par deg(W) over invariant subsets, plus the center direction
/// par deg(E) - mu n which must vanish for semistability to be possible.
/// Route one evaluates flags and rays (including the central ones) through
/// parahoric_degree; the routes must agree.
CheckResult check_R_mu(const ParabolicHiggsDatum& d, const Rational& mu, bool with_higgs);

/// Parabolic slope stability over (invariant) proper subobjects.
CheckResult check_slope(const ParabolicHiggsDatum& d, bool with_higgs);

/// Canonical mu for gl data: the parabolic slope par deg(E) / n.
/// Non-gl data has no scalar center normalization and is rejected.
Rational canonical_mu(const ParabolicHiggsDatum& d);

/// General form: pairings <mu, chi_i> = deg L^{chi_i} + <theta, chi_i>
/// evaluated on the trivial reduction, one per supplied center character.
std::vector<Rational> canonical_mu_pairings(const ParabolicHiggsDatum& d,
                                            const std::vector<Character>& center_basis);

struct StabilityTriple {
    CheckResult R;
    CheckResult R_mu;
    CheckResult slope;
};

struct StabilityReport {
    Rational mu;             // canonical slope used by the R_mu checker
    StabilityTriple higgs;   // quantified over residue-invariant subobjects
    StabilityTriple bundle;  // quantified over all subobjects
};

/// Runs the three checkers with and without the Higgs constraint and
/// asserts the triple equivalence R <=> R_mu(canonical) <=> slope; a
/// disagreement is an internal error and throws.
StabilityReport full_report(const ParabolicHiggsDatum& d);

}  // namespace parahoric
