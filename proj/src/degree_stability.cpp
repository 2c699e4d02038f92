#include "parahoric/degree_stability.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace parahoric {

namespace {

// The stability quantifiers are exhaustive over subsets and flags, which
// is exponential; this is a desk model, not a production solver.
constexpr Index kMaxScanRank = 8;

void require_scannable(Index n, const char* what) {
    if (n > kMaxScanRank)
        throw std::invalid_argument(std::string(what) +
                                    ": exhaustive scan supports rank <= " +
                                    std::to_string(kMaxScanRank));
}

Subset subset_from_mask(unsigned mask, Index n) {
    Subset s;
    for (Index i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i);
    return s;
}

Subset full_subset(Index n) {
    Subset s;
    for (Index i = 0; i < n; ++i) s.push_back(i);
    return s;
}

bool is_sorted_unique(const Subset& s, Index n) {
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 0 || s[k] >= n) return false;
        if (k > 0 && s[k] <= s[k - 1]) return false;
    }
    return true;
}

bool strict_subset(const Subset& a, const Subset& b) {
    if (a.size() >= b.size()) return false;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ParabolicHiggsDatum::ParabolicHiggsDatum(IntVector summand_degrees,
                                         std::vector<Weight> marked_points, RatMatrix higgs,
                                         GroupTag tag, bool normalize_weights)
    : degrees_(std::move(summand_degrees)),
      points_(std::move(marked_points)),
      higgs_(std::move(higgs)),
      tag_(tag) {
    const Index n = degrees_.size();
    if (n <= 0) throw std::invalid_argument("ParabolicHiggsDatum: rank must be positive");
    if (higgs_.rows() == 0 && higgs_.cols() == 0) {
        higgs_.resize(n, n);
        higgs_.setConstant(Rational(0));
    }
    if (higgs_.rows() != n || higgs_.cols() != n)
        throw std::invalid_argument("ParabolicHiggsDatum: residue matrix must be n x n");
    for (auto& p : points_) {
        if (p.size() != n)
            throw std::invalid_argument("ParabolicHiggsDatum: weight dimension mismatch");
        if (normalize_weights) {
            p = p.normalized();
        } else {
            for (Index i = 0; i < n; ++i)
                if (p[i] < Rational(0) || p[i] >= Rational(1))
                    throw std::invalid_argument(
                        "ParabolicHiggsDatum: weights must lie in [0,1); pass the "
                        "normalization flag to reduce them");
        }
    }
    if (tag_ == GroupTag::custom)
        throw std::invalid_argument("ParabolicHiggsDatum: desk model covers gl and sl data");
}

ReductionDatum::ReductionDatum(std::vector<Subset> flag, RatVector lambda)
    : flag_(std::move(flag)), lambda_(std::move(lambda)) {
    if (flag_.empty()) throw std::invalid_argument("ReductionDatum: empty flag");
    if (lambda_.size() != static_cast<Index>(flag_.size()))
        throw std::invalid_argument("ReductionDatum: one lambda per flag step expected");
    const Index n = static_cast<Index>(flag_.back().size());
    for (std::size_t k = 0; k < flag_.size(); ++k) {
        if (!is_sorted_unique(flag_[k], n))
            throw std::invalid_argument("ReductionDatum: flag subsets must be sorted index sets");
        if (flag_[k].empty()) throw std::invalid_argument("ReductionDatum: empty flag step");
        if (k > 0 && !strict_subset(flag_[k - 1], flag_[k]))
            throw std::invalid_argument("ReductionDatum: flag must be strictly increasing");
    }
    for (Index i = 0; i < n; ++i)
        if (flag_.back()[static_cast<std::size_t>(i)] != i)
            throw std::invalid_argument("ReductionDatum: flag must end at the full index set");
    for (Index j = 0; j + 1 < lambda_.size(); ++j)
        if (!(lambda_(j) < lambda_(j + 1)))
            throw std::invalid_argument("ReductionDatum: lambda must be strictly increasing");
}

ReductionDatum ReductionDatum::trivial(Index n, Rational lambda) {
    Subset full;
    for (Index i = 0; i < n; ++i) full.push_back(i);
    RatVector l(1);
    l(0) = lambda;
    return ReductionDatum({full}, std::move(l));
}

Index ReductionDatum::rank() const { return static_cast<Index>(flag_.back().size()); }

Subset ReductionDatum::eigenspace(Index j) const {
    if (j < 0 || j >= block_count()) throw std::out_of_range("ReductionDatum: block out of range");
    if (j == 0) return flag_[0];
    Subset v;
    const Subset& lo = flag_[static_cast<std::size_t>(j - 1)];
    const Subset& hi = flag_[static_cast<std::size_t>(j)];
    std::set_difference(hi.begin(), hi.end(), lo.begin(), lo.end(), std::back_inserter(v));
    return v;
}

RatVector ReductionDatum::character_vector() const {
    RatVector chi(rank());
    for (Index j = 0; j < block_count(); ++j)
        for (Index i : eigenspace(j)) chi(i) = lambda_(j);
    return chi;
}

Rational parabolic_degree(const ParabolicHiggsDatum& d, const Subset& s) {
    if (!is_sorted_unique(s, d.rank()))
        throw std::invalid_argument("parabolic_degree: subset must be a sorted index set");
    Rational acc(0);
    for (Index i : s) acc += Rational(d.summand_degrees()(i));
    for (const auto& p : d.marked_points())
        for (Index i : s) acc += p[i];
    return acc;
}

Rational parahoric_degree(const ParabolicHiggsDatum& d, const ReductionDatum& r) {
    if (r.rank() != d.rank())
        throw std::invalid_argument("parahoric_degree: reduction rank mismatch");
    // Route one: deg L^chi + <theta, chi> on the raw character vector.
    RatVector chi = r.character_vector();
    Rational deg_line(0);
    for (Index i = 0; i < d.rank(); ++i) deg_line += chi(i) * Rational(d.summand_degrees()(i));
    Rational theta_pair(0);
    for (const auto& p : d.marked_points()) theta_pair += pairing(p, chi);
    Rational route_one = deg_line + theta_pair;
    // Route two: sum_j lambda_j par deg V_j.
    Rational route_two(0);
    for (Index j = 0; j < r.block_count(); ++j)
        route_two += r.lambda()(j) * parabolic_degree(d, r.eigenspace(j));
    if (route_one != route_two)
        throw std::logic_error("parahoric_degree: the two degree routes disagree");
    return route_one;
}

Rational equivariant_degree(const ParabolicHiggsDatum& d, const ReductionDatum& r,
                            long long cover_order) {
    if (cover_order <= 0)
        throw std::invalid_argument("equivariant_degree: cover order must be positive");
    for (const auto& p : d.marked_points())
        if (!p.is_integral_for(cover_order))
            throw std::invalid_argument(
                "equivariant_degree: cover order times theta is not integral");
    // Pulled-back line-bundle degree plus the Delta contribution, assembled
    // from scratch rather than through parahoric_degree.
    RatVector chi = r.character_vector();
    Rational pulled(0);
    for (Index i = 0; i < d.rank(); ++i)
        pulled += chi(i) * Rational(cover_order * d.summand_degrees()(i));
    Rational delta_part(0);
    for (const auto& p : d.marked_points()) delta_part += Rational(cover_order) * pairing(p, chi);
    Rational upstairs = pulled + delta_part;
    if (upstairs != Rational(cover_order) * parahoric_degree(d, r))
        throw std::logic_error("equivariant_degree: cover-degree identity violated");
    return upstairs;
}

bool subset_invariant(const RatMatrix& higgs, const Subset& s) {
    std::vector<bool> inside(static_cast<std::size_t>(higgs.rows()), false);
    for (Index i : s) inside[static_cast<std::size_t>(i)] = true;
    for (Index j : s)
        for (Index i = 0; i < higgs.rows(); ++i)
            if (!inside[static_cast<std::size_t>(i)] && !higgs(i, j).is_zero()) return false;
    return true;
}

std::vector<Subset> invariant_subsets(const ParabolicHiggsDatum& d) {
    const Index n = d.rank();
    if (n > 24) throw std::invalid_argument("invariant_subsets: rank too large to enumerate");
    std::vector<Subset> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Subset s = subset_from_mask(mask, n);
        if (subset_invariant(d.higgs(), s)) out.push_back(std::move(s));
    }
    return out;
}

namespace {

struct MarginScan {
    std::optional<StabilityWitness> worst;

    void offer(const Subset& s, bool central, const Rational& margin) {
        if (!worst || margin < worst->margin) worst = StabilityWitness{s, central, margin};
    }

    Verdict verdict() const {
        if (!worst) return Verdict::stable;
        const int sign = worst->margin.sign();
        return sign > 0 ? Verdict::stable : (sign == 0 ? Verdict::semistable : Verdict::unstable);
    }
};

std::vector<Subset> candidate_subsets(const ParabolicHiggsDatum& d, bool with_higgs) {
    const Index n = d.rank();
    std::vector<Subset> out;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        Subset s = subset_from_mask(mask, n);
        if (!with_higgs || subset_invariant(d.higgs(), s)) out.push_back(std::move(s));
    }
    return out;
}

// Ordered set partitions of the coordinates whose prefix unions are all
// invariant (when the Higgs constraint applies); prefixes arrive as sorted
// subsets, partitions in a fixed deterministic order.
void enumerate_flags(const ParabolicHiggsDatum& d, bool with_higgs, unsigned rem, unsigned used,
                     std::vector<Subset>& prefix_chain,
                     const std::function<void(const std::vector<Subset>&)>& visit) {
    const Index n = d.rank();
    if (rem == 0) {
        if (prefix_chain.size() >= 2) visit(prefix_chain);
        return;
    }
    for (unsigned sub = rem; sub != 0; sub = (sub - 1) & rem) {
        unsigned next_used = used | sub;
        Subset prefix = subset_from_mask(next_used, n);
        // Proper prefixes must be invariant; the final full set always is.
        if (with_higgs && next_used != (1u << n) - 1 && !subset_invariant(d.higgs(), prefix))
            continue;
        prefix_chain.push_back(std::move(prefix));
        enumerate_flags(d, with_higgs, rem & ~sub, next_used, prefix_chain, visit);
        prefix_chain.pop_back();
    }
}

Rational ray_margin_via_reduction(const ParabolicHiggsDatum& d, const Subset& s) {
    // Two-block reduction carrying the center-trivial cone ray
    // (-(n-m), ..., m, ...) with m = |S|.
    const Index n = d.rank();
    const Index m = static_cast<Index>(s.size());
    RatVector lambda(2);
    lambda(0) = Rational(-(n - m));
    lambda(1) = Rational(m);
    return parahoric_degree(d, ReductionDatum({s, full_subset(n)}, std::move(lambda)));
}

}  // namespace

CheckResult check_R(const ParabolicHiggsDatum& d, bool with_higgs) {
    const Index n = d.rank();
    require_scannable(n, "check_R");
    Rational full_deg = parabolic_degree(d, full_subset(n));

    // Route two: reduced subset margins.
    MarginScan scan;
    for (const Subset& s : candidate_subsets(d, with_higgs)) {
        Rational margin =
            Rational(static_cast<long long>(s.size())) * full_deg -
            Rational(n) * parabolic_degree(d, s);
        scan.offer(s, false, margin);
    }

    // Route one: every flag against every cone ray, through the reduction
    // machinery.  The ray carried by cut j of a flag sees only the prefix
    // S_j, so the minima of the two routes must coincide exactly.
    std::optional<Rational> flag_min;
    std::vector<Subset> chain;
    enumerate_flags(d, with_higgs, (1u << n) - 1, 0, chain,
                    [&](const std::vector<Subset>& prefixes) {
                        for (std::size_t j = 0; j + 1 < prefixes.size(); ++j) {
                            Rational v = ray_margin_via_reduction(d, prefixes[j]);
                            if (!flag_min || v < *flag_min) flag_min = v;
                        }
                    });
    const bool have_two = scan.worst.has_value();
    if (flag_min.has_value() != have_two ||
        (have_two && *flag_min != scan.worst->margin))
        throw std::logic_error("check_R: flag-ray route disagrees with the subset route");

    return CheckResult{scan.verdict(), scan.worst};
}

CheckResult check_R_mu(const ParabolicHiggsDatum& d, const Rational& mu, bool with_higgs) {
    const Index n = d.rank();
    require_scannable(n, "check_R_mu");
    Rational full_deg = parabolic_degree(d, full_subset(n));
    const Rational center_term = full_deg - mu * Rational(n);

    // Route two: subset margins mu |W| - par deg W, plus the center term.
    MarginScan scan;
    for (const Subset& s : candidate_subsets(d, with_higgs)) {
        Rational margin = mu * Rational(static_cast<long long>(s.size())) - parabolic_degree(d, s);
        scan.offer(s, false, margin);
    }
    Verdict verdict_two = scan.verdict();
    std::optional<StabilityWitness> worst = scan.worst;
    if (!center_term.is_zero()) {
        verdict_two = Verdict::unstable;
        Rational central_margin = -abs(center_term);
        if (!worst || central_margin < worst->margin)
            worst = StabilityWitness{{}, true, central_margin};
    }

    // Route one: flags against the step rays and the central directions,
    // all evaluated through parahoric_degree.
    std::optional<Rational> step_min;
    std::vector<Subset> chain;
    enumerate_flags(d, with_higgs, (1u << n) - 1, 0, chain,
                    [&](const std::vector<Subset>& prefixes) {
                        for (std::size_t j = 0; j + 1 < prefixes.size(); ++j) {
                            const Subset& s = prefixes[j];
                            RatVector lambda(2);
                            lambda(0) = Rational(0);
                            lambda(1) = Rational(1);
                            Rational parh = parahoric_degree(
                                d, ReductionDatum({s, full_subset(n)}, std::move(lambda)));
                            // <varpi, chi> for the step ray is the complement size.
                            Rational margin =
                                parh - mu * Rational(static_cast<long long>(n - s.size()));
                            if (!step_min || margin < *step_min) step_min = margin;
                        }
                    });
    // Central directions +-1 through the trivial reduction; anti-dominance
    // does not pin the sign of a constant character, so both are rays.
    Rational central_plus =
        parahoric_degree(d, ReductionDatum::trivial(n, Rational(1))) - mu * Rational(n);
    Rational central_minus =
        parahoric_degree(d, ReductionDatum::trivial(n, Rational(-1))) + mu * Rational(n);
    Verdict verdict_one;
    if (central_plus.sign() < 0 || central_minus.sign() < 0 ||
        (step_min && step_min->sign() < 0))
        verdict_one = Verdict::unstable;
    else if (step_min && step_min->sign() == 0)
        verdict_one = Verdict::semistable;
    else
        verdict_one = Verdict::stable;
    if (verdict_one != verdict_two)
        throw std::logic_error("check_R_mu: flag-ray route disagrees with the subset route");
    if (center_term.is_zero() && step_min.has_value() != scan.worst.has_value())
        throw std::logic_error("check_R_mu: route witness sets disagree");
    if (center_term.is_zero() && step_min && *step_min != scan.worst->margin)
        throw std::logic_error("check_R_mu: route minima disagree");

    return CheckResult{verdict_two, worst};
}

CheckResult check_slope(const ParabolicHiggsDatum& d, bool with_higgs) {
    const Index n = d.rank();
    require_scannable(n, "check_slope");
    Rational full_slope = parabolic_degree(d, full_subset(n)) / Rational(n);
    MarginScan scan;
    for (const Subset& s : candidate_subsets(d, with_higgs)) {
        Rational margin =
            full_slope - parabolic_degree(d, s) / Rational(static_cast<long long>(s.size()));
        scan.offer(s, false, margin);
    }
    return CheckResult{scan.verdict(), scan.worst};
}

Rational canonical_mu(const ParabolicHiggsDatum& d) {
    if (d.tag() != GroupTag::gl)
        throw std::invalid_argument(
            "canonical_mu: scalar form needs the gl center; supply center characters instead");
    return parabolic_degree(d, full_subset(d.rank())) / Rational(d.rank());
}

std::vector<Rational> canonical_mu_pairings(const ParabolicHiggsDatum& d,
                                            const std::vector<Character>& center_basis) {
    std::vector<Rational> out;
    out.reserve(center_basis.size());
    for (const Character& chi : center_basis) {
        if (chi.size() != d.rank())
            throw std::invalid_argument("canonical_mu_pairings: character dimension mismatch");
        Rational deg_line(0);
        for (Index i = 0; i < d.rank(); ++i)
            deg_line += chi[i] * Rational(d.summand_degrees()(i));
        Rational theta_pair(0);
        for (const auto& p : d.marked_points()) theta_pair += pairing(p, chi);
        out.push_back(deg_line + theta_pair);
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::semistable: return "semistable";
        case Verdict::unstable: return "unstable";
    }
    return "unstable";
}

StabilityReport full_report(const ParabolicHiggsDatum& d) {
    const Index n = d.rank();
    // The parabolic slope is the canonical center normalization for gl and
    // changes nothing for sl data, whose stability ignores the center.
    Rational mu = parabolic_degree(d, full_subset(n)) / Rational(n);
    StabilityReport report;
    report.mu = mu;
    for (bool with_higgs : {true, false}) {
        StabilityTriple t;
        t.R = check_R(d, with_higgs);
        t.R_mu = check_R_mu(d, mu, with_higgs);
        t.slope = check_slope(d, with_higgs);
        if (t.R.verdict != t.R_mu.verdict || t.R.verdict != t.slope.verdict)
            throw std::logic_error("full_report: stability checkers disagree");
        (with_higgs ? report.higgs : report.bundle) = t;
    }
    return report;
}

}  // namespace parahoric
