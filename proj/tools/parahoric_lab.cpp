// parahoric-lab: pole profiles, descent/lift transport, membership,
// degrees, stability reports and weight-space wall scans, all in exact
// rational arithmetic.  See README.md for the wire formats.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parahoric/degree_stability.hpp"
#include "parahoric/descent.hpp"
#include "parahoric/json_io.hpp"
#include "parahoric/laurent.hpp"
#include "parahoric/parahoric_local.hpp"
#include "parahoric/root_datum.hpp"
#include "parahoric/wall_scan.hpp"

namespace {

using namespace parahoric;

constexpr int kExitStable = 0;
constexpr int kExitSemistable = 1;
constexpr int kExitUnstable = 2;
constexpr int kExitInputError = 3;

json read_json(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
}

json parse_inline(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
}

IntVector parse_int_list(const std::string& text) {
    std::vector<long long> vals;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        vals.push_back(std::stoll(tok));
    IntVector v(static_cast<Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<Index>(i)) = vals[i];
    return v;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_profile_table(const PoleProfile& p, bool both) {
    const Index n = p.size();
    std::cout << "theta = (";
    for (Index i = 0; i < n; ++i) std::cout << (i ? ", " : "") << p.theta()[i].str();
    std::cout << "), denominator " << p.theta().denominator() << "\n";
    auto table = [&](const IntMatrix& b, const char* title) {
        std::cout << title << "\n";
        std::size_t width = 1;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) width = std::max(width, cell_notation(b(i, j)).size());
        for (Index i = 0; i < n; ++i) {
            std::cout << "  [ ";
            for (Index j = 0; j < n; ++j)
                std::cout << std::left << std::setw(static_cast<int>(width) + 2)
                          << cell_notation(b(i, j));
            std::cout << "]\n";
        }
    };
    table(p.bounds(), "cells:");
    if (both) {
        IntMatrix t = p.bounds().transpose();
        table(t, "cells (transposed convention):");
    }
}

struct ThetaArgs {
    std::string theta_text;
    std::string in_path;
    std::string group;
    std::string datum_path;  // full root-datum descriptor, for custom data
};

Weight theta_from_args(const ThetaArgs& args, json* doc_out = nullptr) {
    json doc;
    if (!args.in_path.empty()) {
        doc = read_json(args.in_path);
        if (doc_out) *doc_out = doc;
        if (doc.contains("theta")) return weight_from_json(doc.at("theta"));
        throw std::invalid_argument("input file carries no \"theta\" field");
    }
    if (args.theta_text.empty()) throw std::invalid_argument("--theta or --in required");
    return weight_from_json(parse_inline(args.theta_text));
}

int cmd_profile(const ThetaArgs& args, bool both, bool as_json) {
    json doc;
    Weight theta = theta_from_args(args, &doc);
    RootDatum datum = [&] {
        if (!args.datum_path.empty()) return root_datum_from_json(read_json(args.datum_path));
        std::string group = !args.group.empty()
                                ? args.group
                                : (doc.is_object() ? doc.value("group", "gl") : "gl");
        if (group == "sl") return RootDatum::sl(theta.size());
        if (group == "gl") return RootDatum::gl(theta.size());
        throw std::invalid_argument("profile: pass custom data through --datum");
    }();
    PoleProfile p = profile(datum, theta);
    if (as_json) {
        emit(profile_to_json(p, both));
    } else {
        print_profile_table(p, both);
    }
    return 0;
}

int cmd_hecke(const ThetaArgs& args, const std::string& shift_text, bool check, bool as_json) {
    Weight theta = theta_from_args(args);
    IntVector shift = parse_int_list(shift_text);
    PoleProfile before = profile(theta);
    PoleProfile after = hecke_shift(before, shift);
    if (check) {
        for (Index i = 0; i < theta.size(); ++i)
            for (Index j = 0; j < theta.size(); ++j)
                if (after.bound(i, j) != before.bound(i, j) - (shift(i) - shift(j)))
                    throw std::logic_error("hecke: profile law violated");
    }
    if (as_json) {
        json out = profile_to_json(after);
        if (check) out["check"] = "ok";
        emit(out);
    } else {
        print_profile_table(after, false);
        if (check) std::cout << "profile law m_r(theta+shift) = m_r(theta) - r(shift): ok\n";
    }
    return 0;
}

struct TransportInput {
    LaurentMatrix matrix;
    json doc;
};

TransportInput read_matrix_doc(const std::string& path) {
    json doc = read_json(path);
    const json& matj = doc.contains("matrix") ? doc.at("matrix") : doc;
    return TransportInput{matrix_from_json(matj), doc};
}

int cmd_descend(const std::string& in_path, const std::string& theta_text,
                const std::string& a_text, long long d_flag, bool verify) {
    TransportInput in = read_matrix_doc(in_path);
    json out;
    LaurentMatrix down(in.matrix.size(), FormalVariable::z, in.matrix.kind());
    Weight theta = Weight::zero(in.matrix.size());
    long long d = 0;
    if (!a_text.empty() || in.doc.contains("a")) {
        IntVector a = !a_text.empty() ? parse_int_list(a_text)
                                      : [&] {
                                            IntVector v(static_cast<Index>(in.doc.at("a").size()));
                                            for (std::size_t k = 0; k < in.doc.at("a").size(); ++k)
                                                v(static_cast<Index>(k)) =
                                                    in.doc.at("a")[k].get<long long>();
                                            return v;
                                        }();
        d = d_flag > 0 ? d_flag : in.doc.value("d", 0LL);
        if (d <= 0) throw std::invalid_argument("descend: positive --d required with --a");
        EquivariantLocalDatum e(d, a, in.matrix);
        ParahoricLocalDatum p = to_parahoric(e);
        theta = p.theta();
        down = p.element();
    } else {
        ThetaArgs ta;
        ta.theta_text = theta_text;
        if (theta_text.empty() && in.doc.contains("theta"))
            theta = weight_from_json(in.doc.at("theta"));
        else
            theta = theta_from_args(ta);
        d = d_flag > 0 ? d_flag
                       : (in.doc.contains("d") ? in.doc.at("d").get<long long>()
                                               : theta.denominator());
        down = descend(in.matrix, EquivarianceClass::from_weight(theta, d), theta);
    }
    if (verify) {
        if (lift(down, theta, d) != in.matrix)
            throw std::logic_error("descend: round-trip verification failed");
        std::string why = membership_violation(down, profile(theta));
        if (!why.empty())
            throw std::logic_error("descend: result fails its membership test, " + why);
        out["verify"] = "ok";
    }
    out["matrix"] = matrix_to_json(down);
    out["theta"] = weight_to_json(theta);
    emit(out);
    return 0;
}

int cmd_lift(const std::string& in_path, const std::string& theta_text, long long d_flag,
             bool verify) {
    TransportInput in = read_matrix_doc(in_path);
    Weight theta = !theta_text.empty() ? weight_from_json(parse_inline(theta_text))
                                       : weight_from_json(in.doc.at("theta"));
    long long d = d_flag > 0 ? d_flag : theta.denominator();
    LaurentMatrix up = lift(in.matrix, theta, d);
    json out;
    if (verify) {
        EquivarianceClass cls = EquivarianceClass::from_weight(theta, d);
        if (!is_equivariant(up, cls)) throw std::logic_error("lift: result not equivariant");
        if (descend(up, cls, theta) != in.matrix)
            throw std::logic_error("lift: round-trip verification failed");
        out["verify"] = "ok";
    }
    out["matrix"] = matrix_to_json(up);
    out["d"] = d;
    json a = json::array();
    IntVector av = theta.scaled(d);
    for (Index i = 0; i < av.size(); ++i) a.push_back(((av(i) % d) + d) % d);
    out["a"] = std::move(a);
    emit(out);
    return 0;
}

int cmd_member(const std::string& in_path, const std::string& theta_text, bool as_json) {
    TransportInput in = read_matrix_doc(in_path);
    Weight theta = !theta_text.empty() ? weight_from_json(parse_inline(theta_text))
                                       : weight_from_json(in.doc.at("theta"));
    PoleProfile p = profile(theta);
    bool ok = in.matrix.kind() == MatrixKind::group_element ? is_member(in.matrix, p)
                                                             : is_higgs_member(in.matrix, p);
    if (as_json)
        emit(json{{"member", ok}});
    else
        std::cout << (ok ? "member: true" : "member: false") << "\n";
    return 0;
}

int cmd_degree(const std::string& datum_path, const std::string& reduction_path,
               const std::string& subset_text, long long cover) {
    ParabolicHiggsDatum d = higgs_datum_from_json(read_json(datum_path));
    json out;
    Subset full;
    for (Index i = 0; i < d.rank(); ++i) full.push_back(i);
    out["parabolic_full"] = rational_to_json(parabolic_degree(d, full));
    if (!subset_text.empty()) {
        Subset s;
        for (Index i : parse_int_list(subset_text)) {
            if (i < 1 || i > d.rank())
                throw std::invalid_argument("degree: subset indices are 1-based in 1..n");
            s.push_back(i - 1);
        }
        std::sort(s.begin(), s.end());
        out["parabolic_subset"] = rational_to_json(parabolic_degree(d, s));
    }
    if (!reduction_path.empty()) {
        ReductionDatum r = reduction_from_json(read_json(reduction_path), d.rank());
        out["parahoric"] = rational_to_json(parahoric_degree(d, r));
        if (cover > 0) out["equivariant"] = rational_to_json(equivariant_degree(d, r, cover));
    }
    emit(out);
    return 0;
}

int cmd_stability(const std::string& datum_path, bool as_json) {
    ParabolicHiggsDatum d = higgs_datum_from_json(read_json(datum_path));
    StabilityReport rep = full_report(d);
    if (as_json) {
        emit(report_to_json(rep));
    } else {
        std::cout << "canonical mu = " << rep.mu.str() << "\n";
        auto line = [](const char* name, const CheckResult& c) {
            std::cout << "  " << std::left << std::setw(6) << name << " "
                      << to_string(c.verdict);
            if (c.worst)
                std::cout << "   worst " << witness_label(c.worst) << " margin "
                          << c.worst->margin.str();
            std::cout << "\n";
        };
        std::cout << "with Higgs constraint:\n";
        line("R", rep.higgs.R);
        line("R_mu", rep.higgs.R_mu);
        line("slope", rep.higgs.slope);
        std::cout << "bundle only:\n";
        line("R", rep.bundle.R);
        line("R_mu", rep.bundle.R_mu);
        line("slope", rep.bundle.slope);
    }
    switch (rep.higgs.slope.verdict) {
        case Verdict::stable: return kExitStable;
        case Verdict::semistable: return kExitSemistable;
        case Verdict::unstable: return kExitUnstable;
    }
    return kExitInputError;
}

int cmd_walls(const std::string& config_path, const std::string& output_override) {
    WallScanConfig cfg = wall_config_from_json(read_json(config_path));
    if (!output_override.empty()) cfg.output_path = output_override;
    std::string csv = run_wall_scan(cfg);
    if (cfg.output_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) throw std::invalid_argument("walls: cannot write \"" + cfg.output_path + "\"");
        out << csv;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parahoric-lab: exact pole profiles, descent transport and stability checks"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    bool verify = false;
    app.add_flag("--json", as_json, "emit JSON instead of tables");
    app.add_flag("--verify", verify, "re-verify transport results (round trip, membership)");

    ThetaArgs profile_args;
    bool both = false;
    auto* profile_cmd = app.add_subcommand("profile", "pole-order profile of a weight");
    profile_cmd->add_option("--theta", profile_args.theta_text, "weight, e.g. [[1,2],[-1,2]]");
    profile_cmd->add_option("--in", profile_args.in_path, "JSON file with a theta field");
    profile_cmd->add_option("--group", profile_args.group, "gl or sl (default gl)");
    profile_cmd->add_option("--datum", profile_args.datum_path, "root-datum descriptor JSON");
    profile_cmd->add_flag("--both-conventions", both, "also print the transposed reading");

    ThetaArgs hecke_args;
    std::string shift_text;
    bool hecke_check = false;
    auto* hecke_cmd = app.add_subcommand("hecke", "shift a profile by an integral cocharacter");
    hecke_cmd->add_option("--theta", hecke_args.theta_text, "weight");
    hecke_cmd->add_option("--in", hecke_args.in_path, "JSON file with a theta field");
    hecke_cmd->add_option("--shift", shift_text, "integral shift, e.g. 1,0")->required();
    hecke_cmd->add_flag("--check", hecke_check, "verify the profile transformation law");

    std::string tr_in, tr_theta, tr_a;
    long long tr_d = 0;
    auto* descend_cmd = app.add_subcommand("descend", "transport w-data to the z-disk");
    descend_cmd->add_option("--in", tr_in, "matrix JSON (optionally with header)")->required();
    descend_cmd->add_option("--theta", tr_theta, "weight header");
    descend_cmd->add_option("--a", tr_a, "rho exponents, e.g. 1,1");
    descend_cmd->add_option("--d", tr_d, "cyclic order");

    std::string lift_in, lift_theta;
    long long lift_d = 0;
    auto* lift_cmd = app.add_subcommand("lift", "transport z-data to the w-disk");
    lift_cmd->add_option("--in", lift_in, "matrix JSON (optionally with header)")->required();
    lift_cmd->add_option("--theta", lift_theta, "weight header");
    lift_cmd->add_option("--d", lift_d, "cyclic order (defaults to the weight denominator)");

    std::string mem_in, mem_theta;
    auto* member_cmd = app.add_subcommand("member", "parahoric membership test");
    member_cmd->add_option("--in", mem_in, "matrix JSON")->required();
    member_cmd->add_option("--theta", mem_theta, "weight");

    std::string deg_datum, deg_reduction, deg_subset;
    long long deg_cover = 0;
    auto* degree_cmd = app.add_subcommand("degree", "parabolic/parahoric/equivariant degrees");
    degree_cmd->add_option("--datum", deg_datum, "stability datum JSON")->required();
    degree_cmd->add_option("--reduction", deg_reduction, "reduction JSON");
    degree_cmd->add_option("--subset", deg_subset, "1-based summand subset, e.g. 1,2");
    degree_cmd->add_option("--cover", deg_cover, "cover order for the equivariant degree");

    std::string stab_datum;
    auto* stability_cmd = app.add_subcommand("stability", "full stability report");
    stability_cmd->add_option("--datum", stab_datum, "stability datum JSON")->required();

    std::string walls_config, walls_output;
    auto* walls_cmd = app.add_subcommand("walls", "weight-space wall scan to CSV");
    walls_cmd->add_option("--config", walls_config, "scan configuration JSON")->required();
    walls_cmd->add_option("--output", walls_output, "override the output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (profile_cmd->parsed()) return cmd_profile(profile_args, both, as_json);
        if (hecke_cmd->parsed()) return cmd_hecke(hecke_args, shift_text, hecke_check, as_json);
        if (descend_cmd->parsed()) return cmd_descend(tr_in, tr_theta, tr_a, tr_d, verify);
        if (lift_cmd->parsed()) return cmd_lift(lift_in, lift_theta, lift_d, verify);
        if (member_cmd->parsed()) return cmd_member(mem_in, mem_theta, as_json);
        if (degree_cmd->parsed()) return cmd_degree(deg_datum, deg_reduction, deg_subset, deg_cover);
        if (stability_cmd->parsed()) return cmd_stability(stab_datum, as_json);
        if (walls_cmd->parsed()) return cmd_walls(walls_config, walls_output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
