#include "nhf/report.hpp"

#include <json.hpp>

#include <sstream>

namespace nhf {

namespace {

nlohmann::json qext_json(const QExt& q) {
    return nlohmann::json::array(
        {q.c1().str(), q.c_sqrt2().str(), q.c_sqrt3().str(), q.c_sqrt6().str()});
}

nlohmann::json vector_json(const ExactVector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(qext_json(v[i]));
    return arr;
}

} // namespace

RootSystem parse_system(const std::string& type, int rank) {
    // compound names: "A2+A1" and friends
    if (type.find('+') != std::string::npos) {
        std::vector<RootSystem> parts;
        std::stringstream ss(type);
        std::string tok;
        while (std::getline(ss, tok, '+')) {
            if (tok.size() < 2) throw std::invalid_argument("bad system name: " + type);
            TypeLabel t;
            switch (tok[0]) {
                case 'A': t = TypeLabel::A; break;
                case 'B': t = TypeLabel::B; break;
                case 'C': t = TypeLabel::C; break;
                case 'D': t = TypeLabel::D; break;
                case 'E': t = TypeLabel::E; break;
                case 'F': t = TypeLabel::F; break;
                case 'G': t = TypeLabel::G; break;
                default: throw std::invalid_argument("bad type letter in " + type);
            }
            parts.push_back(RootSystem::build(t, std::stoi(tok.substr(1))));
        }
        RootSystem rs = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) rs = RootSystem::direct_sum(rs, parts[i]);
        return rs;
    }
    TypeLabel t;
    if (type == "A") t = TypeLabel::A;
    else if (type == "B") t = TypeLabel::B;
    else if (type == "C") t = TypeLabel::C;
    else if (type == "D") t = TypeLabel::D;
    else if (type == "E") t = TypeLabel::E;
    else if (type == "F") t = TypeLabel::F;
    else if (type == "G") t = TypeLabel::G;
    else if (type.size() >= 2 && type.find('(') == std::string::npos)
        return parse_system(type.substr(0, 1), std::stoi(type.substr(1)));
    else
        throw std::invalid_argument("unknown type: " + type);
    return RootSystem::build(t, rank);
}

std::string root_system_json(const RootSystem& rs) {
    nlohmann::json doc;
    doc["factors"] = nlohmann::json::array();
    for (const auto& f : rs.factors)
        doc["factors"].push_back({{"type", type_name(f.type)}, {"rank", f.rank}});
    doc["ambient_dim"] = rs.ambient_dim;
    doc["roots"] = nlohmann::json::array();
    for (const auto& r : rs.roots) doc["roots"].push_back(vector_json(r));
    return doc.dump(2);
}

std::string equal_rank_json(const EqualRankReport& report) {
    nlohmann::json doc;
    if (!report.results.empty() && report.results[0].candidate.rs->factors.size() == 1) {
        const auto& f = report.results[0].candidate.rs->factors[0];
        doc["g"] = {{"type", type_name(f.type)}, {"rank", f.rank}, {"name", report.g_name}};
    } else {
        doc["g"] = {{"name", report.g_name}};
    }
    doc["candidates"] = nlohmann::json::array();
    for (const auto& r : report.results) {
        nlohmann::json row;
        row["h_type"] = r.candidate.h_type.str();
        row["verdict"] = r.verdict.pass() ? "pass" : "fail";
        if (!r.verdict.pass()) {
            row["failing_rule"] = r.verdict.failing_rule;
            row["witness"] = nlohmann::json::array();
            for (const auto& w : r.verdict.witness) row["witness"].push_back(w.str());
        }
        doc["candidates"].push_back(std::move(row));
    }
    return doc.dump(2);
}

std::string corank_json(const CaseTable& table, bool with_traces) {
    nlohmann::json doc;
    doc["g"] = table.g_name;
    doc["seeds"] = nlohmann::json::array();
    for (const auto& r : table.rows) {
        nlohmann::json row;
        row["id"] = r.seed.id;
        row["class"] = r.seed.klass;
        switch (r.seed.kind) {
            case SeedKind::CaseI: row["kind"] = "I"; break;
            case SeedKind::CaseII: row["kind"] = "II"; break;
            case SeedKind::CaseIII: row["kind"] = "III"; break;
        }
        if (r.seed.kind != SeedKind::CaseI) {
            row["alpha"] = r.seed.alpha.str();
            row["beta"] = r.seed.beta.str();
        }
        bool contra = r.verdict.status == CaseVerdict::Status::Contradiction;
        row["status"] = contra ? "contradiction" : "saturated";
        if (contra) {
            row["rule"] = r.verdict.rule;
            row["witness"] = r.verdict.witness;
        } else {
            row["h_type"] = r.verdict.derived_h_type.str();
        }
        if (r.verdict.k_proper) row["k_type"] = r.verdict.k_type.str();
        if (with_traces) {
            row["trace"] = nlohmann::json::array();
            for (const auto& step : r.verdict.trace)
                row["trace"].push_back({{"rule", step.rule}, {"detail", step.detail}});
        }
        doc["seeds"].push_back(std::move(row));
    }
    return doc.dump(2);
}

std::string VerifyReport::to_json() const {
    nlohmann::json doc;
    doc["ok"] = ok();
    doc["equal_rank"] = nlohmann::json::array();
    for (const auto& s : equal_rank) {
        nlohmann::json row;
        row["g"] = s.g_name;
        row["survivors"] = s.survivors;
        row["names"] = s.survivor_names;
        row["candidates"] = s.candidates;
        doc["equal_rank"].push_back(std::move(row));
    }
    doc["corank_one"] = nlohmann::json::array();
    for (const auto& s : corank) {
        nlohmann::json sec;
        sec["g"] = s.g_name;
        sec["rows"] = nlohmann::json::array();
        for (const auto& r : s.rows) {
            nlohmann::json row;
            row["id"] = r.id;
            row["class"] = r.klass;
            row["status"] = r.status;
            if (!r.rule.empty()) row["rule"] = r.rule;
            if (!r.h_type.empty()) row["h_type"] = r.h_type;
            if (!r.k_type.empty()) row["k_type"] = r.k_type;
            if (!r.resolution.empty()) row["resolution"] = r.resolution;
            sec["rows"].push_back(std::move(row));
        }
        doc["corank_one"].push_back(std::move(sec));
    }
    doc["condition_r"] = nlohmann::json::array();
    for (const auto& s : condition_r) {
        nlohmann::json row;
        row["space"] = s.space;
        row["fails_condition_R"] = s.fails;
        row["independent_at"] = s.independent_at;
        if (s.family_unverified) row["family_membership"] = "taken as given data";
        doc["condition_r"].push_back(std::move(row));
    }
    doc["diffs"] = nlohmann::json::array();
    for (const auto& d : diffs)
        doc["diffs"].push_back(
            {{"where", d.where}, {"expected", d.expected}, {"actual", d.actual}});
    return doc.dump(2);
}

std::string VerifyReport::to_markdown() const {
    std::ostringstream os;
    os << "# Classification report\n\n";
    os << "## Equal rank\n\n| g | survivors | spaces |\n|---|---|---|\n";
    for (const auto& s : equal_rank) {
        os << "| " << s.g_name << " | ";
        for (std::size_t i = 0; i < s.survivors.size(); ++i)
            os << (i ? ", " : "") << s.survivors[i];
        if (s.survivors.empty()) os << "none";
        os << " | ";
        for (std::size_t i = 0; i < s.survivor_names.size(); ++i)
            os << (i ? "; " : "") << s.survivor_names[i];
        os << " |\n";
    }
    os << "\n## Corank one\n\n| g | class | status | h | k | resolution |\n"
          "|---|---|---|---|---|---|\n";
    for (const auto& s : corank)
        for (const auto& r : s.rows) {
            os << "| " << s.g_name << " | " << r.klass << " | " << r.status;
            if (!r.rule.empty()) os << " (" << r.rule << ")";
            os << " | " << (r.h_type.empty() ? "-" : r.h_type) << " | "
               << (r.k_type.empty() ? "-" : r.k_type) << " | "
               << (r.resolution.empty() ? "-" : r.resolution) << " |\n";
        }
    os << "\n## Adjoint orbit test\n\n| space | single orbit fails | witnesses |\n|---|---|---|\n";
    for (const auto& s : condition_r) {
        os << "| " << s.space << " | " << (s.fails ? "yes" : "no") << " | ";
        for (std::size_t i = 0; i < s.independent_at.size(); ++i)
            os << (i ? ", " : "t = ") << s.independent_at[i];
        if (s.independent_at.empty()) os << "-";
        os << " |\n";
    }
    os << "\n## Diffs\n\n";
    if (diffs.empty()) {
        os << "none\n";
    } else {
        os << "| where | expected | actual |\n|---|---|---|\n";
        for (const auto& d : diffs)
            os << "| " << d.where << " | " << d.expected << " | " << d.actual << " |\n";
    }
    return os.str();
}

} // namespace nhf
