#pragma once

#include <string>
#include <vector>

#include "parahoric/types.hpp"

namespace parahoric {

enum class GroupTag { gl, sl, custom };

std::string to_string(GroupTag tag);
GroupTag group_tag_from_string(const std::string& s);

/// Rational cocharacter theta, the object driving every pole bound and
/// pairing.  The denominator is the lcm of the coordinate denominators
/// and doubles as the order of the cyclic group on the covering disk.
class Weight {
public:
    explicit Weight(RatVector coords);
    static Weight zero(Index n);

    Index size() const { return coords_.size(); }
    const RatVector& coords() const { return coords_; }
    const Rational& operator[](Index i) const { return coords_(i); }
    long long denominator() const { return den_; }

    bool is_integral_for(long long d) const;
    /// d * theta as an integer vector; throws if d * theta is not integral.
    IntVector scaled(long long d) const;

    /// theta + shift for an integral cocharacter shift.
    Weight shifted(const IntVector& shift) const;
    /// Coordinates reduced to [0,1).
    Weight normalized() const;

    friend bool operator==(const Weight& a, const Weight& b);
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

private:
    RatVector coords_;
    long long den_;
};

/// Root data for GL_n / SL_n and for user-supplied type-A-like data given
/// as explicit lists of integer root vectors.  No Dynkin classification.
class RootDatum {
public:
    static RootDatum gl(Index n);
    static RootDatum sl(Index n);
    static RootDatum custom(Index rank, std::vector<IntVector> roots,
                            std::vector<IntVector> simple_roots,
                            std::vector<IntVector> center_basis);

    Index rank() const { return rank_; }
    GroupTag tag() const { return tag_; }
    const std::vector<IntVector>& roots() const { return roots_; }
    const std::vector<IntVector>& simple_roots() const { return simple_roots_; }
    const std::vector<IntVector>& center_basis() const { return center_basis_; }

    bool has_root(const IntVector& r) const;

private:
    RootDatum(Index rank, std::vector<IntVector> roots, std::vector<IntVector> simple,
              std::vector<IntVector> center, GroupTag tag);

    Index rank_;
    std::vector<IntVector> roots_;
    std::vector<IntVector> simple_roots_;
    std::vector<IntVector> center_basis_;
    GroupTag tag_;
};

/// Standard block-upper-triangular parabolic, described by the ordered
/// sizes of its consecutive Levi blocks.
class ParabolicType {
public:
    explicit ParabolicType(std::vector<Index> block_sizes);
    static ParabolicType full(Index n) { return ParabolicType({n}); }

    Index rank() const { return rank_; }
    Index block_count() const { return static_cast<Index>(block_sizes_.size()); }
    const std::vector<Index>& block_sizes() const { return block_sizes_; }

    /// Block index (0-based) containing coordinate i.
    Index block_of(Index i) const;
    /// Total size of blocks 0..j inclusive.
    Index prefix_size(Index j) const;

    bool is_proper() const { return block_count() >= 2; }

private:
    std::vector<Index> block_sizes_;
    std::vector<Index> block_of_;
    Index rank_;
};

/// Character of a standard parabolic: one rational value per coordinate,
/// constant on Levi blocks.  Anti-dominance (block values nondecreasing)
/// is a predicate here, not an invariant.
class Character {
public:
    explicit Character(RatVector values);
    static Character from_block_values(const ParabolicType& p, const RatVector& block_values);

    Index size() const { return values_.size(); }
    const RatVector& values() const { return values_; }
    const Rational& operator[](Index i) const { return values_(i); }

    bool is_constant_on_blocks(const ParabolicType& p) const;
    RatVector block_values(const ParabolicType& p) const;
    bool is_antidominant(const ParabolicType& p) const;

private:
    RatVector values_;
};

/// Canonical pairing Y(T) x X(T) -> Z extended to Q: sum_i theta_i chi_i.
Rational pairing(const Weight& theta, const Character& chi);
Rational pairing(const Weight& theta, const RatVector& chi);

/// r(theta) = <theta, r>.  The RootDatum overload rejects vectors that are
/// not roots of the datum.
Rational root_value(const Weight& theta, const IntVector& root);
Rational root_value(const RootDatum& datum, const Weight& theta, const IntVector& root);

/// Generating rays of the anti-dominant cone of p, center-trivial by
/// construction: ray j takes value -(n - m_j) on blocks 0..j and m_j on the
/// rest, m_j the size of the first j+1 blocks.  Every anti-dominant
/// character pairing to zero with the center is a nonnegative rational
/// combination of these rays (plus a central summand when center
/// triviality is not imposed), which reduces the stability quantifier over
/// all characters to finitely many evaluations.
///
/// With center_trivial set, a trivial parabolic is rejected; otherwise a
/// trivial parabolic yields an empty list and the central directions are
/// the caller's to supply.
std::vector<Character> antidominant_ray_basis(const ParabolicType& p, bool center_trivial);

}  // namespace parahoric
