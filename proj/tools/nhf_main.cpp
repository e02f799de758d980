// Command-line front end for the classification toolkit: root-system
// combinatorics, the equal-rank and corank-one classifiers, the matrix
// oracles, and the Finsler curvature lab.

#include "nhf/metrics.hpp"
#include "nhf/models.hpp"
#include "nhf/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace nhf;

namespace {

void write_file(const std::string& path, const std::string& content) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::vector<Rational> parse_rationals(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto slash = tok.find('/');
        if (slash == std::string::npos)
            out.push_back(Rational(Int(tok)));
        else
            out.push_back(Rational(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1))));
    }
    return out;
}

VecD parse_vec(const std::string& csv) {
    std::vector<double> xs;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) xs.push_back(std::stod(tok));
    VecD v(static_cast<Eigen::Index>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
    return v;
}

int cmd_roots(const std::string& type, int rank, const std::string& json_out) {
    RootSystem rs = parse_system(type, rank);
    std::string doc = root_system_json(rs);
    if (json_out.empty())
        std::cout << doc << "\n";
    else
        write_file(json_out, doc);
    return 0;
}

int cmd_equal_rank(const std::string& type, int rank, const std::string& json_out,
                   int rank_cap, bool include_e, double budget) {
    RootSystem rs = parse_system(type, rank);
    bool has_e = false;
    for (const auto& f : rs.factors) has_e = has_e || f.type == TypeLabel::E;
    if (has_e && !include_e)
        throw std::runtime_error(
            "equal-rank enumeration on the E series is expensive; pass --include-e");
    EqualRankReport rep = classify_equal_rank(rs, rank_cap, has_e ? budget : 0);
    std::string doc = equal_rank_json(rep);
    if (!json_out.empty()) write_file(json_out, doc);
    std::cout << "g = " << rep.g_name << ", candidates: " << rep.results.size() << "\n";
    for (const auto& r : rep.results) {
        std::cout << "  h = " << r.candidate.h_type.str() << "  "
                  << (r.verdict.pass() ? "pass" : ("fail [" + r.verdict.failing_rule + "]"));
        for (const auto& w : r.verdict.witness) std::cout << " " << w.str();
        std::cout << "\n";
    }
    std::cout << "survivors:";
    for (const auto& t : rep.survivors()) std::cout << " " << t.str();
    std::cout << "\n";
    return 0;
}

int cmd_corank1(const std::string& type, int rank, bool trace, const std::string& json_out) {
    RootSystem rs = parse_system(type, rank);
    CaseTable table = run_corank_one(rs);
    if (!json_out.empty()) write_file(json_out, corank_json(table, trace));
    std::cout << "g = " << table.g_name << ", seed classes: " << table.rows.size() << "\n";
    for (const auto& r : table.rows) {
        bool contra = r.verdict.status == CaseVerdict::Status::Contradiction;
        std::cout << "  [" << r.seed.id << "] " << r.seed.klass << "  "
                  << (contra ? "contradiction (" + r.verdict.rule + ")"
                             : "saturated h=" + r.verdict.derived_h_type.str());
        if (r.verdict.k_proper) std::cout << "  k=" << r.verdict.k_type.str();
        std::cout << "\n";
        if (trace)
            for (const auto& s : r.verdict.trace)
                std::cout << "      [" << s.rule << "] " << s.detail << "\n";
    }
    return 0;
}

int cmd_explain(const std::string& seed_id) {
    auto colon = seed_id.find(':');
    if (colon == std::string::npos || seed_id.compare(colon, 2, ":c") != 0)
        throw CLI::ValidationError("--seed", "expected an id like F4:c2");
    std::string gname = seed_id.substr(0, colon);
    std::size_t index = std::stoul(seed_id.substr(colon + 2));
    RootSystem rs = parse_system(gname, 0);
    auto seeds = enumerate_seeds(rs);
    if (index >= seeds.size())
        throw CLI::ValidationError("--seed", "index out of range; " + gname + " has " +
                                                 std::to_string(seeds.size()) + " classes");
    CaseState st = init_case(rs, seeds[index]);
    CaseVerdict v = saturate(st);
    std::cout << "seed " << seeds[index].id << "  class " << seeds[index].klass << "\n";
    for (const auto& s : v.trace) std::cout << "  [" << s.rule << "] " << s.detail << "\n";
    bool contra = v.status == CaseVerdict::Status::Contradiction;
    std::cout << (contra ? "verdict: contradiction (" + v.rule + ")"
                         : "verdict: saturated, h = " + v.derived_h_type.str());
    if (v.k_proper) std::cout << ", k = " << v.k_type.str();
    std::cout << "\n";
    return 0;
}

int cmd_verify(const std::string& out_dir, int cap_a, int cap_b, int cap_c, int cap_d,
               bool skip_e) {
    VerifyOptions opt;
    opt.rank_cap_a = cap_a;
    opt.rank_cap_b = cap_b;
    opt.rank_cap_c = cap_c;
    opt.rank_cap_d = cap_d;
    opt.include_e = !skip_e;
    VerifyReport rep = verify_theorem1(opt);
    write_file((fs::path(out_dir) / "report.json").string(), rep.to_json());
    std::cout << "equal-rank sections: " << rep.equal_rank.size()
              << ", corank sections: " << rep.corank.size()
              << ", orbit tests: " << rep.condition_r.size() << "\n";
    for (const auto& d : rep.diffs)
        std::cout << "DIFF " << d.where << ": expected " << d.expected << ", got " << d.actual
                  << "\n";
    std::cout << (rep.ok() ? "verified: no diffs against the embedded tables"
                           : "verification failed")
              << "  (" << rep.elapsed_seconds << " s)\n";
    std::cout << "report written to " << (fs::path(out_dir) / "report.json").string() << "\n";
    return rep.ok() ? 0 : 2;
}

int cmd_condition_r(const std::string& space, const std::string& ts,
                    const std::string& json_out) {
    auto rep = condition_r_report(space, parse_rationals(ts));
    nlohmann::json doc;
    doc["space"] = rep.space;
    doc["samples"] = nlohmann::json::array();
    for (const auto& t : rep.samples) doc["samples"].push_back(t.str());
    doc["dependent_pairs"] = rep.independent_at.empty();
    doc["independent_at"] = nlohmann::json::array();
    for (const auto& t : rep.independent_at) doc["independent_at"].push_back(t.str());
    doc["verdict"] = rep.fails_condition_r ? "fails: admits non-Riemannian normal metrics"
                                           : "no witness found";
    if (rep.family_unverified) doc["family_membership"] = "taken as given data";
    std::string text = doc.dump(2);
    if (!json_out.empty()) write_file(json_out, text);
    std::cout << text << "\n";
    return 0;
}

int cmd_finsler(const std::string& metric, const std::string& xs, const std::string& ys,
                const std::string& vs, const std::string& json_out) {
    ChartMetric M;
    if (!metric.empty() && metric[0] == '@') {
        std::ifstream in(metric.substr(1));
        if (!in) throw std::runtime_error("cannot read metric file " + metric.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        M = metric_from_json_text(ss.str());
    } else {
        M = make_metric(metric);
    }
    VecD x = parse_vec(xs), y = parse_vec(ys);
    nlohmann::json row;
    row["metric"] = metric;
    row["x"] = xs;
    row["y"] = ys;
    CurvatureDiagnostics diag;
    riemann_curvature(M, x, y, &diag);
    row["diagnostics"] = {{"R_y_y_residual", diag.ry_y_residual},
                          {"self_adjoint_residual", diag.self_adjoint_residual}};
    if (!vs.empty()) {
        VecD v = parse_vec(vs);
        row["v"] = vs;
        row["K"] = flag_curvature(M, x, y, v);
    }
    if (M.dimension <= 3) row["S"] = s_curvature(M, x, y);
    std::string text = row.dump(2);
    if (!json_out.empty()) write_file(json_out, text);
    std::cout << text << "\n";
    return 0;
}

int cmd_export(const std::string& format, const std::string& in_path,
               const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot read report " + in_path);
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json doc = nlohmann::json::parse(ss.str());
    if (format == "json") {
        write_file(out_path, doc.dump(2));
        return 0;
    }
    VerifyReport rep;
    for (const auto& s : doc.at("equal_rank")) {
        EqualRankSection sec;
        sec.g_name = s.at("g").get<std::string>();
        sec.survivors = s.at("survivors").get<std::vector<std::string>>();
        sec.survivor_names = s.at("names").get<std::vector<std::string>>();
        sec.candidates = s.at("candidates").get<std::size_t>();
        rep.equal_rank.push_back(std::move(sec));
    }
    for (const auto& s : doc.at("corank_one")) {
        CorankSection sec;
        sec.g_name = s.at("g").get<std::string>();
        for (const auto& r : s.at("rows")) {
            CorankSection::Row row;
            row.id = r.at("id").get<std::string>();
            row.klass = r.at("class").get<std::string>();
            row.status = r.at("status").get<std::string>();
            if (r.contains("rule")) row.rule = r.at("rule").get<std::string>();
            if (r.contains("h_type")) row.h_type = r.at("h_type").get<std::string>();
            if (r.contains("k_type")) row.k_type = r.at("k_type").get<std::string>();
            if (r.contains("resolution"))
                row.resolution = r.at("resolution").get<std::string>();
            sec.rows.push_back(std::move(row));
        }
        rep.corank.push_back(std::move(sec));
    }
    for (const auto& s : doc.at("condition_r")) {
        ConditionRSection sec;
        sec.space = s.at("space").get<std::string>();
        sec.fails = s.at("fails_condition_R").get<bool>();
        sec.independent_at = s.at("independent_at").get<std::vector<std::string>>();
        rep.condition_r.push_back(std::move(sec));
    }
    for (const auto& d : doc.at("diffs"))
        rep.diffs.push_back({d.at("where").get<std::string>(),
                             d.at("expected").get<std::string>(),
                             d.at("actual").get<std::string>()});
    write_file(out_path, rep.to_markdown());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"normal-homogeneous positive-curvature classification toolkit"};
    app.require_subcommand(1);

    std::string seed_order = "deterministic";
    app.add_option("--seed-order", seed_order, "seed enumeration order (always deterministic)")
        ->check(CLI::IsMember({"deterministic"}));

    // roots
    auto* roots = app.add_subcommand("roots", "build a root system and print it as JSON");
    std::string r_type = "A", r_json;
    int r_rank = 2;
    roots->add_option("--type", r_type, "A..G or a compound like A2+A1")->required();
    roots->add_option("--rank", r_rank);
    roots->add_option("--json", r_json, "output path");

    // classify equal-rank / corank1
    auto* classify = app.add_subcommand("classify", "run one of the classifiers");
    classify->require_subcommand(1);
    auto* eq = classify->add_subcommand("equal-rank", "full-rank subalgebra classification");
    std::string e_type = "B", e_json;
    int e_rank = 2, e_cap = 8;
    bool e_include_e = false;
    double e_budget = 120.0;
    eq->add_option("--type", e_type)->required();
    eq->add_option("--rank", e_rank);
    eq->add_option("--rank-cap", e_cap, "enumeration rank cap");
    eq->add_flag("--include-e", e_include_e, "allow the expensive E-series enumeration");
    eq->add_option("--budget-seconds", e_budget, "time budget for the E-series enumeration");
    eq->add_option("--json", e_json);
    auto* co = classify->add_subcommand("corank1", "corank-one case analysis");
    std::string c_type = "B", c_json;
    int c_rank = 2;
    bool c_trace = false;
    co->add_option("--type", c_type)->required();
    co->add_option("--rank", c_rank);
    co->add_flag("--trace", c_trace, "print the rule-by-rule proof log");
    co->add_option("--json", c_json);

    // verify theorem1
    auto* verify = app.add_subcommand("verify", "check results against the embedded tables");
    auto* thm1 = verify->add_subcommand("theorem1", "run the whole pipeline and diff");
    std::string v_out = "reports";
    int v_a = 4, v_b = 4, v_c = 4, v_d = 4;
    bool v_skip_e = false;
    thm1->add_option("--out-dir", v_out);
    thm1->add_option("--cap-a", v_a);
    thm1->add_option("--cap-b", v_b);
    thm1->add_option("--cap-c", v_c);
    thm1->add_option("--cap-d", v_d);
    thm1->add_flag("--skip-e", v_skip_e, "skip the E-series corank runs");

    // condition-r
    auto* condr = app.add_subcommand("condition-r", "adjoint-orbit test for a model space");
    std::string cr_space, cr_t = "1/10,1/2", cr_json;
    condr->add_option("--space", cr_space)->required();
    condr->add_option("--t", cr_t, "comma-separated rational samples");
    condr->add_option("--json", cr_json);

    // finsler curvature
    auto* fin = app.add_subcommand("finsler", "numerical Finsler geometry");
    auto* curv = fin->add_subcommand("curvature", "flag curvature and diagnostics");
    std::string f_metric, f_x, f_y, f_v, f_json;
    curv->add_option("--metric", f_metric, "catalog name or @file.json")->required();
    curv->add_option("--x", f_x)->required();
    curv->add_option("--y", f_y)->required();
    curv->add_option("--v", f_v);
    curv->add_option("--json", f_json);

    // explain
    auto* explain = app.add_subcommand("explain", "re-derive one seed with its proof log");
    std::string x_seed;
    explain->add_option("--seed", x_seed, "seed id, e.g. F4:c2")->required();

    // export
    auto* exp = app.add_subcommand("export", "convert a verification report");
    std::string ex_format = "markdown", ex_in = "reports/report.json", ex_out;
    exp->add_option("--format", ex_format)->check(CLI::IsMember({"json", "markdown"}));
    exp->add_option("--in", ex_in);
    exp->add_option("--out", ex_out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*roots) return cmd_roots(r_type, r_rank, r_json);
        if (*eq) return cmd_equal_rank(e_type, e_rank, e_json, e_cap, e_include_e, e_budget);
        if (*co) return cmd_corank1(c_type, c_rank, c_trace, c_json);
        if (*thm1) return cmd_verify(v_out, v_a, v_b, v_c, v_d, v_skip_e);
        if (*condr) return cmd_condition_r(cr_space, cr_t, cr_json);
        if (*curv) return cmd_finsler(f_metric, f_x, f_y, f_v, f_json);
        if (*explain) return cmd_explain(x_seed);
        if (*exp) return cmd_export(ex_format, ex_in, ex_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
