#include "parahoric/root_datum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parahoric {

std::string to_string(GroupTag tag) {
    switch (tag) {
        case GroupTag::gl: return "gl";
        case GroupTag::sl: return "sl";
        case GroupTag::custom: return "custom";
    }
    return "custom";
}

GroupTag group_tag_from_string(const std::string& s) {
    if (s == "gl") return GroupTag::gl;
    if (s == "sl") return GroupTag::sl;
    if (s == "custom") return GroupTag::custom;
    throw std::invalid_argument("unknown group tag \"" + s + "\"");
}

Weight::Weight(RatVector coords) : coords_(std::move(coords)), den_(1) {
    if (coords_.size() == 0) throw std::invalid_argument("Weight: empty coordinate vector");
    for (Index i = 0; i < coords_.size(); ++i)
        den_ = std::lcm(den_, coords_(i).denominator());
}

Weight Weight::zero(Index n) {
    RatVector v(n);
    v.setConstant(Rational(0));
    return Weight(std::move(v));
}

bool Weight::is_integral_for(long long d) const {
    if (d <= 0) return false;
    return d % den_ == 0;
}

IntVector Weight::scaled(long long d) const {
    if (!is_integral_for(d))
        throw std::invalid_argument("Weight: " + std::to_string(d) +
                                    " * theta is not an integer vector");
    IntVector out(coords_.size());
    for (Index i = 0; i < coords_.size(); ++i)
        out(i) = coords_(i).numerator() * (d / coords_(i).denominator());
    return out;
}

Weight Weight::shifted(const IntVector& shift) const {
    if (shift.size() != coords_.size())
        throw std::invalid_argument("Weight: shift dimension mismatch");
    RatVector v = coords_;
    for (Index i = 0; i < v.size(); ++i) v(i) += Rational(shift(i));
    return Weight(std::move(v));
}

Weight Weight::normalized() const {
    RatVector v = coords_;
    for (Index i = 0; i < v.size(); ++i) v(i) -= Rational(v(i).floor());
    return Weight(std::move(v));
}

bool operator==(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) return false;
    for (Index i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

namespace {

std::vector<IntVector> type_a_roots(Index n) {
    std::vector<IntVector> roots;
    roots.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            if (i == j) continue;
            IntVector r = IntVector::Zero(n);
            r(i) = 1;
            r(j) = -1;
            roots.push_back(std::move(r));
        }
    return roots;
}

std::vector<IntVector> type_a_simple(Index n) {
    std::vector<IntVector> simple;
    simple.reserve(n - 1);
    for (Index i = 0; i + 1 < n; ++i) {
        IntVector r = IntVector::Zero(n);
        r(i) = 1;
        r(i + 1) = -1;
        simple.push_back(std::move(r));
    }
    return simple;
}

}  // namespace

RootDatum::RootDatum(Index rank, std::vector<IntVector> roots, std::vector<IntVector> simple,
                     std::vector<IntVector> center, GroupTag tag)
    : rank_(rank),
      roots_(std::move(roots)),
      simple_roots_(std::move(simple)),
      center_basis_(std::move(center)),
      tag_(tag) {
    if (rank_ <= 0) throw std::invalid_argument("RootDatum: rank must be positive");
    for (const auto& r : roots_) {
        if (r.size() != rank_) throw std::invalid_argument("RootDatum: root dimension mismatch");
        if (r.isZero()) throw std::invalid_argument("RootDatum: zero root");
        if (!has_root(-r))
            throw std::invalid_argument("RootDatum: root set not closed under negation");
    }
    for (const auto& s : simple_roots_)
        if (!has_root(s)) throw std::invalid_argument("RootDatum: simple root not in root set");
    for (const auto& c : center_basis_)
        if (c.size() != rank_)
            throw std::invalid_argument("RootDatum: center character dimension mismatch");
}

RootDatum RootDatum::gl(Index n) {
    if (n <= 0) throw std::invalid_argument("RootDatum::gl: rank must be positive");
    IntVector ones = IntVector::Ones(n);
    return RootDatum(n, type_a_roots(n), type_a_simple(n), {ones}, GroupTag::gl);
}

RootDatum RootDatum::sl(Index n) {
    if (n <= 1) throw std::invalid_argument("RootDatum::sl: rank must be at least 2");
    // Characters are taken modulo the all-ones vector; the center is finite,
    // so no center characters enter stability bookkeeping.
    return RootDatum(n, type_a_roots(n), type_a_simple(n), {}, GroupTag::sl);
}

RootDatum RootDatum::custom(Index rank, std::vector<IntVector> roots,
                            std::vector<IntVector> simple_roots,
                            std::vector<IntVector> center_basis) {
    return RootDatum(rank, std::move(roots), std::move(simple_roots), std::move(center_basis),
                     GroupTag::custom);
}

bool RootDatum::has_root(const IntVector& r) const {
    return std::any_of(roots_.begin(), roots_.end(),
                       [&](const IntVector& s) { return s.size() == r.size() && s == r; });
}

ParabolicType::ParabolicType(std::vector<Index> block_sizes)
    : block_sizes_(std::move(block_sizes)), rank_(0) {
    if (block_sizes_.empty()) throw std::invalid_argument("ParabolicType: no blocks");
    for (Index b : block_sizes_) {
        if (b <= 0) throw std::invalid_argument("ParabolicType: empty block");
        rank_ += b;
    }
    block_of_.reserve(rank_);
    for (std::size_t b = 0; b < block_sizes_.size(); ++b)
        for (Index k = 0; k < block_sizes_[b]; ++k) block_of_.push_back(static_cast<Index>(b));
}

Index ParabolicType::block_of(Index i) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("ParabolicType: coordinate out of range");
    return block_of_[static_cast<std::size_t>(i)];
}

Index ParabolicType::prefix_size(Index j) const {
    if (j < 0 || j >= block_count()) throw std::out_of_range("ParabolicType: block out of range");
    Index m = 0;
    for (Index b = 0; b <= j; ++b) m += block_sizes_[static_cast<std::size_t>(b)];
    return m;
}

Character::Character(RatVector values) : values_(std::move(values)) {
    if (values_.size() == 0) throw std::invalid_argument("Character: empty value vector");
}

Character Character::from_block_values(const ParabolicType& p, const RatVector& block_values) {
    if (block_values.size() != p.block_count())
        throw std::invalid_argument("Character: one value per block expected");
    RatVector v(p.rank());
    for (Index i = 0; i < p.rank(); ++i) v(i) = block_values(p.block_of(i));
    return Character(std::move(v));
}

bool Character::is_constant_on_blocks(const ParabolicType& p) const {
    if (p.rank() != size()) return false;
    for (Index i = 0; i + 1 < size(); ++i)
        if (p.block_of(i) == p.block_of(i + 1) && values_(i) != values_(i + 1)) return false;
    return true;
}

RatVector Character::block_values(const ParabolicType& p) const {
    if (!is_constant_on_blocks(p))
        throw std::invalid_argument("Character: not constant on Levi blocks");
    RatVector out(p.block_count());
    Index i = 0;
    for (Index b = 0; b < p.block_count(); ++b) {
        out(b) = values_(i);
        i += p.block_sizes()[static_cast<std::size_t>(b)];
    }
    return out;
}

bool Character::is_antidominant(const ParabolicType& p) const {
    if (!is_constant_on_blocks(p)) return false;
    RatVector bv = block_values(p);
    for (Index b = 0; b + 1 < bv.size(); ++b)
        if (bv(b) > bv(b + 1)) return false;
    return true;
}

Rational pairing(const Weight& theta, const RatVector& chi) {
    if (theta.size() != chi.size())
        throw std::invalid_argument("pairing: dimension mismatch");
    Rational acc(0);
    for (Index i = 0; i < chi.size(); ++i) acc += theta[i] * chi(i);
    return acc;
}

Rational pairing(const Weight& theta, const Character& chi) { return pairing(theta, chi.values()); }

Rational root_value(const Weight& theta, const IntVector& root) {
    if (theta.size() != root.size())
        throw std::invalid_argument("root_value: dimension mismatch");
    Rational acc(0);
    for (Index i = 0; i < root.size(); ++i) acc += theta[i] * Rational(root(i));
    return acc;
}

Rational root_value(const RootDatum& datum, const Weight& theta, const IntVector& root) {
    if (!datum.has_root(root)) throw std::invalid_argument("root_value: unknown root");
    return root_value(theta, root);
}

std::vector<Character> antidominant_ray_basis(const ParabolicType& p, bool center_trivial) {
    if (center_trivial && !p.is_proper())
        throw std::invalid_argument(
            "antidominant_ray_basis: trivial parabolic with center_trivial set");
    const Index n = p.rank();
    const Index r = p.block_count();
    std::vector<Character> rays;
    rays.reserve(static_cast<std::size_t>(r - 1));
    for (Index j = 0; j + 1 < r; ++j) {
        const Index m = p.prefix_size(j);
        RatVector bv(r);
        for (Index b = 0; b < r; ++b) bv(b) = (b <= j) ? Rational(-(n - m)) : Rational(m);
        rays.push_back(Character::from_block_values(p, bv));
    }
    return rays;
}

}  // namespace parahoric
