#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "parahoric/degree_stability.hpp"

namespace parahoric {

/// Inclusive rational range walked with a positive exact step.
struct WallRange {
    Rational min;
    Rational max;
    Rational step;
};

/// A stability datum without its weights, plus a finite rational grid for
/// the weights at each marked point.  Scanning the grid locates the walls
/// in weight space where verdicts flip; between walls verdicts are
/// constant, so the flip rows carry exact slope-equality witnesses.
struct WallScanConfig {
    IntVector degrees;
    RatMatrix higgs;
    GroupTag tag = GroupTag::gl;
    std::vector<std::vector<WallRange>> grid;  // per point, one range per summand
    std::string output_path;                   // empty writes to stdout
};

WallScanConfig wall_config_from_json(const nlohmann::json& j);

/// Full CSV text, one row per grid point in lexicographic grid order
/// (last coordinate fastest).  Header comment "#parahoric-lab v1" pins the
/// column layout; output is byte-deterministic.
std::string run_wall_scan(const WallScanConfig& cfg);

}  // namespace parahoric
