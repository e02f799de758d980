#include "nhf/report.hpp"

#include <json.hpp>

namespace nhf {

namespace {

// The classification data, frozen as a document. Survivor type strings are
// canonical (C2 -> B2, D3 -> A3, D2 -> A1+A1); "+R" marks torus corank.
const char* kExpectedJson = R"json({
  "equal_rank": {
    "A1": ["R"],
    "A2": ["A1+R"],
    "A3": ["A2+R"],
    "A4": ["A3+R"],
    "B2": ["A1+R", "A1+A1"],
    "B3": ["A3"],
    "B4": ["D4"],
    "C3": ["B2+R", "A1+B2"],
    "C4": ["C3+R", "A1+C3"],
    "D4": [],
    "G2": ["A2"],
    "F4": ["B4"]
  },
  "survivor_names": {
    "A1|R": "CP^1 = SU(2)/S(U(1)xU(1))",
    "A2|A1+R": "CP^2 = SU(3)/S(U(2)xU(1))",
    "A3|A2+R": "CP^3 = SU(4)/S(U(3)xU(1))",
    "A4|A3+R": "CP^4 = SU(5)/S(U(4)xU(1))",
    "B2|A1+A1": "S^4 = SO(5)/SO(4)",
    "B2|A1+R": "CP^3 = Sp(2)/Sp(1)S^1",
    "B3|A3": "S^6 = SO(7)/SO(6)",
    "B4|D4": "S^8 = SO(9)/SO(8)",
    "C3|B2+R": "CP^5 = Sp(3)/Sp(2)S^1",
    "C3|A1+B2": "HP^2 = Sp(3)/Sp(2)Sp(1)",
    "C4|C3+R": "CP^7 = Sp(4)/Sp(3)S^1",
    "C4|A1+C3": "HP^3 = Sp(4)/Sp(3)Sp(1)",
    "G2|A2": "S^6 = G2/SU(3)",
    "F4|B4": "OP^2 = F4/Spin(9)"
  },
  "corank_one": {
    "A1": [
      {"klass": "caseI;k=R", "outcome": "survivor", "h": "0", "k": "R",
       "names": "S^3 = SU(2)/SU(1), U(2)/U(1)"}
    ],
    "A2": [
      {"klass": "q+1;l2,2;same;p0", "outcome": "contradiction"},
      {"klass": "q-1;l2,2;same;p0", "outcome": "contradiction"},
      {"klass": "caseI;k=A1+R", "outcome": "survivor", "h": "A1", "k": "A1+R",
       "names": "S^5 = SU(3)/SU(2), U(3)/U(2)"}
    ],
    "A3": [
      {"klass": "q+1;l2,2;same;p0", "outcome": "contradiction"},
      {"klass": "q-1;l2,2;same;p0", "outcome": "contradiction"},
      {"klass": "q0;l2,2;same;p0", "outcome": "survivor", "h": "B2",
       "names": "S^5 = SO(6)/SO(5)"},
      {"klass": "caseI;k=A2+R", "outcome": "survivor", "h": "A2", "k": "A2+R",
       "names": "S^7 = SU(4)/SU(3), U(4)/U(3)"}
    ],
    "A4": [
      {"klass": "q+1;l2,2;same;p2", "outcome": "contradiction"},
      {"klass": "q-1;l2,2;same;p2", "outcome": "contradiction"},
      {"klass": "q0;l2,2;same;p0", "outcome": "survivor", "h": "B2+R", "k": "A3+R",
       "names": "SU(5)/Sp(2)S^1"},
      {"klass": "caseI;k=A3+R", "outcome": "survivor", "h": "A3", "k": "A3+R",
       "names": "S^9 = SU(5)/SU(4), U(5)/U(4)"}
    ],
    "B2": [
      {"klass": "q+2;l1,2;same;p0", "outcome": "excluded_oracle", "h": "A1",
       "oracle": "so5-core"},
      {"klass": "q0;l2,2;same;p0", "outcome": "excluded_oracle", "h": "A1",
       "oracle": "so5-core"},
      {"klass": "q0;l1,1;same;p0", "outcome": "contradiction"},
      {"klass": "q-2;l1,2;same;p0", "outcome": "survivor_oracle", "h": "A1",
       "oracle": "berger", "names": "Sp(2)/SU(2)"},
      {"klass": "caseI;k=A1+R", "outcome": "survivor", "h": "A1", "k": "A1+R",
       "names": "S^7 = Sp(2)/Sp(1), Sp(2)S^1/Sp(1)S^1"}
    ],
    "B3": [
      {"klass": "q+1;l2,2;same;p0", "outcome": "contradiction"},
      {"klass": "q-1;l2,2;same;p0", "outcome": "contradiction"},
      {"klass": "q+2;l1,2;same;p2", "outcome": "excluded_oracle", "h": "B2",
       "oracle": "so5-core"},
      {"klass": "q0;l2,2;same;p2", "outcome": "excluded_oracle", "h": "B2",
       "oracle": "so5-core"},
      {"klass": "q0;l1,1;same;p2", "outcome": "contradiction"},
      {"klass": "q0;l1,2;same;p2", "outcome": "survivor", "h": "G2",
       "names": "S^7 = Spin(7)/G2"},
      {"klass": "q-2;l1,2;same;p2", "outcome": "contradiction"}
    ],
    "B4": [
      {"klass": "q+1;l2,2;same;p2", "outcome": "contradiction"},
      {"klass": "q-1;l2,2;same;p2", "outcome": "contradiction"},
      {"klass": "q+2;l1,2;same;p8", "outcome": "excluded_oracle", "h": "B3",
       "oracle": "so5-core"},
      {"klass": "q0;l2,2;same;p8", "outcome": "excluded_oracle", "h": "B3",
       "oracle": "so5-core"},
      {"klass": "q0;l2,2;same;p4", "outcome": "survivor", "h": "B3", "k": "D4",
       "names": "S^15 = Spin(9)/Spin(7)"},
      {"klass": "q0;l1,2;same;p4", "outcome": "contradiction"},
      {"klass": "q0;l1,1;same;p8", "outcome": "contradiction"},
      {"klass": "q-2;l1,2;same;p8", "outcome": "contradiction"}
    ],
    "C3": [
      {"klass": "q+1;l2,2;same;p0", "outcome": "contradiction"},
      {"klass": "q-1;l2,2;same;p0", "outcome": "contradiction"},
      {"klass": "q+2;l2,4;same;p2", "outcome": "contradiction"},
      {"klass": "q0;l2,2;same;p2", "outcome": "contradiction"},
      {"klass": "q0;l2,4;same;p2", "outcome": "contradiction"},
      {"klass": "q0;l4,4;same;p2", "outcome": "contradiction"},
      {"klass": "q-2;l2,4;same;p2", "outcome": "excluded_oracle", "h": "A1+A1",
       "k": "A1+B2", "oracle": "sp3-endgame"},
      {"klass": "caseI;k=B2+R", "outcome": "survivor", "h": "B2", "k": "B2+R",
       "names": "S^11 = Sp(3)/Sp(2), Sp(3)S^1/Sp(2)S^1"}
    ],
    "C4": [
      {"klass": "q+1;l2,2;same;p2", "outcome": "contradiction"},
      {"klass": "q-1;l2,2;same;p2", "outcome": "contradiction"},
      {"klass": "q+2;l2,4;same;p8", "outcome": "contradiction"},
      {"klass": "q0;l2,2;same;p4", "outcome": "contradiction", "k": "A3+R"},
      {"klass": "q0;l2,2;same;p8", "outcome": "contradiction"},
      {"klass": "q0;l2,4;same;p4", "outcome": "contradiction"},
      {"klass": "q0;l4,4;same;p8", "outcome": "contradiction"},
      {"klass": "q-2;l2,4;same;p8", "outcome": "contradiction", "k": "B2+B2"},
      {"klass": "caseI;k=C3+R", "outcome": "survivor", "h": "C3", "k": "C3+R",
       "names": "S^15 = Sp(4)/Sp(3), Sp(4)S^1/Sp(3)S^1"}
    ],
    "D4": [
      {"klass": "q+1;l2,2;same;p0", "outcome": "contradiction"},
      {"klass": "q-1;l2,2;same;p0", "outcome": "contradiction"},
      {"klass": "q0;l2,2;same;p4", "outcome": "survivor", "h": "B3",
       "names": "S^7 = SO(8)/SO(7)"}
    ],
    "G2": [
      {"klass": "q+1;l1,1;same;p0", "outcome": "contradiction"},
      {"klass": "q-1;l1,1;same;p0", "outcome": "contradiction"},
      {"klass": "q+1;l3,3;same;p0", "outcome": "contradiction"},
      {"klass": "q-1;l3,3;same;p0", "outcome": "contradiction"},
      {"klass": "q+3;l1,3;same;p0", "outcome": "contradiction"},
      {"klass": "q-3;l1,3;same;p0", "outcome": "contradiction"},
      {"klass": "q0;l1,3;same;p0", "outcome": "contradiction"}
    ],
    "F4": [
      {"klass": "q+1;l1,1;same;p6", "outcome": "contradiction"},
      {"klass": "q-1;l1,1;same;p6", "outcome": "contradiction"},
      {"klass": "q+1;l2,2;same;p6", "outcome": "contradiction"},
      {"klass": "q-1;l2,2;same;p6", "outcome": "contradiction"},
      {"klass": "q+2;l1,2;same;p8", "outcome": "contradiction"},
      {"klass": "q-2;l1,2;same;p8", "outcome": "contradiction"},
      {"klass": "q0;l1,1;same;p8", "outcome": "contradiction"},
      {"klass": "q0;l1,2;same;p4", "outcome": "contradiction"},
      {"klass": "q0;l2,2;same;p8", "outcome": "contradiction"}
    ],
    "E6": [
      {"klass": "q+1;l2,2;same;p12", "outcome": "contradiction"},
      {"klass": "q-1;l2,2;same;p12", "outcome": "contradiction"},
      {"klass": "q0;l2,2;same;p12", "outcome": "contradiction", "k": "D5+R"}
    ],
    "E7": [
      {"klass": "q+1;l2,2;same;p30", "outcome": "contradiction"},
      {"klass": "q-1;l2,2;same;p30", "outcome": "contradiction"},
      {"klass": "q0;l2,2;same;p26", "outcome": "contradiction", "k": "A1+D6"}
    ],
    "E8": [
      {"klass": "q+1;l2,2;same;p72", "outcome": "contradiction"},
      {"klass": "q-1;l2,2;same;p72", "outcome": "contradiction"},
      {"klass": "q0;l2,2;same;p60", "outcome": "contradiction", "k": "D8"}
    ],
    "A1+A1": [
      {"klass": "q0;l2,2;cross;p0", "outcome": "survivor", "h": "A1",
       "names": "S^3 = SO(4)/SO(3)"}
    ],
    "A2+A1": [
      {"klass": "q0;l2,2;cross;p0", "outcome": "survivor", "h": "A1+R",
       "names": "SU(3)xSO(3)/U*(2)"}
    ],
    "C2+A1": [
      {"klass": "q0;l2,4;cross;p2", "outcome": "survivor", "h": "A1+A1",
       "names": "S^7 = Sp(2)Sp(1)/Sp(1)Sp(1)"},
      {"klass": "q0;l2,2;cross;p2", "outcome": "contradiction"}
    ]
  },
  "riemannian_forced": ["so(4)/so(3)", "so(5)/so(4)"],
  "non_riemannian": ["su(3)/su(2)", "su(4)/su(3)", "sp(2)/sp(1)", "sp(3)/sp(2)",
                     "sp(2)/su(2)-berger", "su(5)/sp(2)+R", "spin9-vt-family"]
})json";

ExpectedTable parse_table() {
    nlohmann::json doc = nlohmann::json::parse(kExpectedJson);
    ExpectedTable t;
    for (auto& [g, arr] : doc.at("equal_rank").items()) {
        std::vector<std::string> v = arr.get<std::vector<std::string>>();
        std::sort(v.begin(), v.end());
        t.equal_rank[g] = std::move(v);
    }
    for (auto& [key, val] : doc.at("survivor_names").items())
        t.survivor_names[key] = val.get<std::string>();
    for (auto& [g, arr] : doc.at("corank_one").items()) {
        std::vector<CorankExpectedRow> rows;
        for (auto& row : arr) {
            CorankExpectedRow r;
            r.klass = row.at("klass").get<std::string>();
            std::string oc = row.at("outcome").get<std::string>();
            if (oc == "contradiction") r.outcome = ExpectedOutcome::Contradiction;
            else if (oc == "survivor") r.outcome = ExpectedOutcome::Survivor;
            else if (oc == "survivor_oracle") r.outcome = ExpectedOutcome::SurvivorOracle;
            else if (oc == "excluded_oracle") r.outcome = ExpectedOutcome::ExcludedOracle;
            else throw std::logic_error("expected table: bad outcome " + oc);
            if (row.contains("h")) r.h_type = row.at("h").get<std::string>();
            if (row.contains("k")) r.k_type = row.at("k").get<std::string>();
            if (row.contains("oracle")) r.oracle = row.at("oracle").get<std::string>();
            if (row.contains("names")) r.coset_names = row.at("names").get<std::string>();
            rows.push_back(std::move(r));
        }
        t.corank_one[g] = std::move(rows);
    }
    t.riemannian_forced = doc.at("riemannian_forced").get<std::vector<std::string>>();
    t.non_riemannian = doc.at("non_riemannian").get<std::vector<std::string>>();
    return t;
}

} // namespace

const ExpectedTable& expected_table() {
    static const ExpectedTable table = parse_table();
    return table;
}

std::string expected_table_json() { return kExpectedJson; }

} // namespace nhf
