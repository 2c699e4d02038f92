#include "parahoric/wall_scan.hpp"

#include <sstream>
#include <stdexcept>

#include "parahoric/json_io.hpp"

namespace parahoric {

WallScanConfig wall_config_from_json(const nlohmann::json& j) {
    WallScanConfig cfg;
    const Index n = j.at("n").get<Index>();
    if (n <= 0) throw std::invalid_argument("walls: positive rank required");
    cfg.degrees.resize(n);
    const json& degs = j.at("degrees");
    if (!degs.is_array() || degs.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("walls: degrees must have length n");
    for (Index i = 0; i < n; ++i) cfg.degrees(i) = degs[static_cast<std::size_t>(i)].get<long long>();
    cfg.higgs.resize(n, n);
    cfg.higgs.setConstant(Rational(0));
    if (j.contains("higgs")) {
        const json& h = j.at("higgs");
        for (Index r = 0; r < n; ++r)
            for (Index c = 0; c < n; ++c)
                cfg.higgs(r, c) = rational_from_json(h.at(static_cast<std::size_t>(r))
                                                         .at(static_cast<std::size_t>(c)));
    }
    cfg.tag = group_tag_from_string(j.value("group", "gl"));
    for (const auto& point : j.at("grid")) {
        const json& coords = point.at("coords");
        if (!coords.is_array() || coords.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("walls: one coordinate range per summand expected");
        std::vector<WallRange> ranges;
        for (const auto& c : coords) {
            WallRange r{rational_from_json(c.at("min")), rational_from_json(c.at("max")),
                        rational_from_json(c.at("step"))};
            if (r.step.sign() <= 0) throw std::invalid_argument("walls: steps must be positive");
            if (r.max < r.min) throw std::invalid_argument("walls: empty coordinate range");
            ranges.push_back(std::move(r));
        }
        cfg.grid.push_back(std::move(ranges));
    }
    if (cfg.grid.empty()) throw std::invalid_argument("walls: at least one marked point expected");
    cfg.output_path = j.value("output", "");
    return cfg;
}

std::string run_wall_scan(const WallScanConfig& cfg) {
    const Index n = cfg.degrees.size();
    // Flatten the per-point, per-coordinate ranges into one mixed-radix
    // counter; the last coordinate advances fastest.
    std::vector<const WallRange*> axes;
    for (const auto& point : cfg.grid)
        for (const auto& r : point) axes.push_back(&r);
    std::vector<long long> extent;
    for (const WallRange* r : axes) {
        Rational span = (r->max - r->min) / r->step;
        extent.push_back(span.floor() + 1);
    }

    std::ostringstream csv;
    csv << "#parahoric-lab v1\n";
    for (std::size_t p = 0; p < cfg.grid.size(); ++p)
        for (Index c = 0; c < n; ++c) csv << "theta_p" << p << "_c" << c << ",";
    csv << "R,R_mu,slope,mu,witness,margin\n";

    std::vector<long long> idx(axes.size(), 0);
    bool done = false;
    while (!done) {
        std::vector<Weight> points;
        std::size_t axis = 0;
        std::ostringstream row;
        for (std::size_t p = 0; p < cfg.grid.size(); ++p) {
            RatVector coords(n);
            for (Index c = 0; c < n; ++c, ++axis) {
                coords(c) = axes[axis]->min + Rational(idx[axis]) * axes[axis]->step;
                row << coords(c).str() << ",";
            }
            points.emplace_back(std::move(coords));
        }
        ParabolicHiggsDatum datum(cfg.degrees, std::move(points), cfg.higgs, cfg.tag);
        StabilityReport rep = full_report(datum);
        const CheckResult& sl = rep.higgs.slope;
        row << to_string(rep.higgs.R.verdict) << "," << to_string(rep.higgs.R_mu.verdict) << ","
            << to_string(sl.verdict) << "," << rep.mu.str() << "," << witness_label(sl.worst)
            << "," << (sl.worst ? sl.worst->margin.str() : "-");
        csv << row.str() << "\n";

        // advance, last axis fastest
        done = true;
        for (std::size_t a = axes.size(); a-- > 0;) {
            if (++idx[a] < extent[a]) {
                done = false;
                break;
            }
            idx[a] = 0;
        }
    }
    return csv.str();
}

}  // namespace parahoric
