#include "parahoric/json_io.hpp"

#include <algorithm>

namespace parahoric {

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
        return Rational(j[0].get<long long>(), j[1].get<long long>());
    throw std::invalid_argument("rational: expected integer, \"num/den\" string, or [num, den]");
}

json rational_to_json(const Rational& r) {
    if (r.is_integer()) return json(r.numerator());
    return json(r.str());
}

Weight weight_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("theta: expected a nonempty array of rationals");
    RatVector coords(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        coords(static_cast<Index>(i)) = rational_from_json(j[i]);
    return Weight(std::move(coords));
}

json weight_to_json(const Weight& w) {
    json out = json::array();
    for (Index i = 0; i < w.size(); ++i)
        out.push_back({w[i].numerator(), w[i].denominator()});
    return out;
}

namespace {

IntVector int_vector_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    IntVector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            throw std::invalid_argument(std::string(what) + ": expected integers");
        v(static_cast<Index>(i)) = j[i].get<long long>();
    }
    return v;
}

}  // namespace

RootDatum root_datum_from_json(const json& j) {
    const std::string group = j.value("group", "gl");
    if (group == "gl" || group == "sl") {
        if (!j.contains("rank"))
            throw std::invalid_argument("root datum: \"rank\" required");
        Index n = j.at("rank").get<Index>();
        return group == "gl" ? RootDatum::gl(n) : RootDatum::sl(n);
    }
    if (group != "custom") throw std::invalid_argument("root datum: unknown group tag");
    Index rank = j.at("rank").get<Index>();
    std::vector<IntVector> roots, simple, center;
    for (const auto& r : j.at("roots")) roots.push_back(int_vector_from_json(r, "roots"));
    if (j.contains("simple"))
        for (const auto& r : j.at("simple")) simple.push_back(int_vector_from_json(r, "simple"));
    if (j.contains("center"))
        for (const auto& r : j.at("center")) center.push_back(int_vector_from_json(r, "center"));
    return RootDatum::custom(rank, std::move(roots), std::move(simple), std::move(center));
}

LaurentMatrix matrix_from_json(const json& j) {
    const std::string var = j.at("var").get<std::string>();
    if (var != "z" && var != "w")
        throw std::invalid_argument("matrix: \"var\" must be \"z\" or \"w\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "group" && kind != "higgs")
        throw std::invalid_argument("matrix: \"kind\" must be \"group\" or \"higgs\"");
    const Index n = j.at("n").get<Index>();
    if (n <= 0) throw std::invalid_argument("matrix: positive size required");
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n * n))
        throw std::invalid_argument("matrix: expected n*n row-major entries");
    LaurentMatrix m(n, var == "z" ? FormalVariable::z : FormalVariable::w,
                    kind == "group" ? MatrixKind::group_element : MatrixKind::higgs_coefficient);
    for (Index i = 0; i < n; ++i)
        for (Index j2 = 0; j2 < n; ++j2) {
            const json& cell = entries[static_cast<std::size_t>(i * n + j2)];
            if (!cell.is_array())
                throw std::invalid_argument("matrix: entry must be a list of [exp,num,den]");
            LaurentPoly p;
            for (const auto& term : cell) {
                if (!term.is_array() || term.size() != 3)
                    throw std::invalid_argument("matrix: term must be [exp, num, den]");
                p += LaurentPoly::monomial(
                    term[0].get<long long>(),
                    Rational(term[1].get<long long>(), term[2].get<long long>()));
            }
            m(i, j2) = std::move(p);
        }
    return m;
}

json matrix_to_json(const LaurentMatrix& m) {
    json entries = json::array();
    for (Index i = 0; i < m.size(); ++i)
        for (Index j = 0; j < m.size(); ++j) {
            json cell = json::array();
            for (const auto& [e, c] : m(i, j).terms())
                cell.push_back({e, c.numerator(), c.denominator()});
            entries.push_back(std::move(cell));
        }
    json out;
    out["var"] = to_string(m.variable());
    out["kind"] = to_string(m.kind());
    out["n"] = m.size();
    out["entries"] = std::move(entries);
    if (m.kind() == MatrixKind::higgs_coefficient) out["form"] = m.form_tag();
    return out;
}

ParabolicHiggsDatum higgs_datum_from_json(const json& j) {
    const Index n = j.at("n").get<Index>();
    IntVector degrees = int_vector_from_json(j.at("degrees"), "degrees");
    if (degrees.size() != n) throw std::invalid_argument("datum: degrees must have length n");
    std::vector<Weight> points;
    if (j.contains("points"))
        for (const auto& pt : j.at("points")) points.push_back(weight_from_json(pt.at("theta")));
    RatMatrix higgs(0, 0);
    if (j.contains("higgs")) {
        const json& h = j.at("higgs");
        if (!h.is_array() || h.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("datum: higgs must be an n x n matrix");
        higgs.resize(n, n);
        for (Index r = 0; r < n; ++r) {
            const json& row = h[static_cast<std::size_t>(r)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
                throw std::invalid_argument("datum: higgs must be an n x n matrix");
            for (Index c = 0; c < n; ++c)
                higgs(r, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
        }
    }
    GroupTag tag = group_tag_from_string(j.value("group", "gl"));
    bool normalize = j.value("normalize", false);
    return ParabolicHiggsDatum(std::move(degrees), std::move(points), std::move(higgs), tag,
                               normalize);
}

json higgs_datum_to_json(const ParabolicHiggsDatum& d) {
    json out;
    out["n"] = d.rank();
    out["group"] = to_string(d.tag());
    json degs = json::array();
    for (Index i = 0; i < d.rank(); ++i) degs.push_back(d.summand_degrees()(i));
    out["degrees"] = std::move(degs);
    json pts = json::array();
    for (const auto& p : d.marked_points()) pts.push_back({{"theta", weight_to_json(p)}});
    out["points"] = std::move(pts);
    json h = json::array();
    for (Index r = 0; r < d.rank(); ++r) {
        json row = json::array();
        for (Index c = 0; c < d.rank(); ++c) row.push_back(rational_to_json(d.higgs()(r, c)));
        h.push_back(std::move(row));
    }
    out["higgs"] = std::move(h);
    return out;
}

ReductionDatum reduction_from_json(const json& j, Index n) {
    std::vector<Subset> flag;
    for (const auto& step : j.at("flag")) {
        Subset s;
        for (const auto& idx : step) {
            long long v = idx.get<long long>();
            if (v < 1 || v > n)
                throw std::invalid_argument("reduction: indices are 1-based in 1..n");
            s.push_back(static_cast<Index>(v - 1));
        }
        std::sort(s.begin(), s.end());
        flag.push_back(std::move(s));
    }
    const json& lj = j.at("lambda");
    RatVector lambda(static_cast<Index>(lj.size()));
    for (std::size_t k = 0; k < lj.size(); ++k)
        lambda(static_cast<Index>(k)) = rational_from_json(lj[k]);
    return ReductionDatum(std::move(flag), std::move(lambda));
}

namespace {

json bounds_to_json(const IntMatrix& b) {
    json rows = json::array();
    for (Index i = 0; i < b.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < b.cols(); ++j) row.push_back(b(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json cells_to_json(const IntMatrix& b) {
    json rows = json::array();
    for (Index i = 0; i < b.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < b.cols(); ++j) row.push_back(cell_notation(b(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json profile_to_json(const PoleProfile& p, bool both_conventions) {
    json out;
    out["theta"] = weight_to_json(p.theta());
    out["bounds"] = bounds_to_json(p.bounds());
    out["cells"] = cells_to_json(p.bounds());
    if (both_conventions) {
        IntMatrix t = p.bounds().transpose();
        out["bounds_transposed"] = bounds_to_json(t);
        out["cells_transposed"] = cells_to_json(t);
    }
    return out;
}

std::string witness_label(const std::optional<StabilityWitness>& w) {
    if (!w) return "-";
    if (w->central) return "center";
    std::string s = "{";
    for (std::size_t k = 0; k < w->subset.size(); ++k) {
        if (k > 0) s += ",";
        s += std::to_string(w->subset[k] + 1);
    }
    return s + "}";
}

json check_result_to_json(const CheckResult& c) {
    json out;
    out["verdict"] = to_string(c.verdict);
    if (c.worst) {
        out["witness"] = witness_label(c.worst);
        out["margin"] = rational_to_json(c.worst->margin);
    }
    return out;
}

json report_to_json(const StabilityReport& r) {
    json out;
    out["mu"] = rational_to_json(r.mu);
    for (const auto& [name, triple] :
         {std::pair<const char*, const StabilityTriple&>{"higgs", r.higgs},
          std::pair<const char*, const StabilityTriple&>{"bundle", r.bundle}}) {
        json t;
        t["R"] = check_result_to_json(triple.R);
        t["R_mu"] = check_result_to_json(triple.R_mu);
        t["slope"] = check_result_to_json(triple.slope);
        out[name] = std::move(t);
    }
    return out;
}

}  // namespace parahoric
