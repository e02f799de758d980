#include "nhf/equal_rank.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>

namespace nhf {

EqualRankCandidate make_candidate(const RootSystem& rs, const std::vector<int>& h_planes) {
    EqualRankCandidate c;
    c.rs = &rs;
    c.h_planes = h_planes;
    std::sort(c.h_planes.begin(), c.h_planes.end());
    if (!planes_closed(rs, c.h_planes))
        throw std::invalid_argument("make_candidate: h_planes not closed");
    std::set<int> in(c.h_planes.begin(), c.h_planes.end());
    for (std::size_t p = 0; p < rs.plane_reps.size(); ++p)
        if (!in.count(static_cast<int>(p))) c.m_planes.push_back(static_cast<int>(p));
    c.h_type = identify_type(rs, c.h_planes);
    c.signature = subset_signature(rs, c.h_planes);
    return c;
}

namespace {

bool plane_in(const std::vector<int>& sorted, int p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
}

} // namespace

Verdict commuting_pair_filter(const EqualRankCandidate& cand) {
    const RootSystem& rs = *cand.rs;
    for (std::size_t x = 0; x < cand.m_planes.size(); ++x)
        for (std::size_t y = x + 1; y < cand.m_planes.size(); ++y) {
            const ExactVector& a = rs.plane_reps[static_cast<std::size_t>(cand.m_planes[x])];
            const ExactVector& b = rs.plane_reps[static_cast<std::size_t>(cand.m_planes[y])];
            if (sum_diff_status(rs, a, b) == SumDiff::neither)
                return Verdict::fail("commuting_pair", {a, b});
        }
    return Verdict::ok();
}

Verdict acute_pair_filter(const EqualRankCandidate& cand) {
    const RootSystem& rs = *cand.rs;
    for (std::size_t x = 0; x < cand.m_planes.size(); ++x)
        for (std::size_t y = x + 1; y < cand.m_planes.size(); ++y) {
            int p = cand.m_planes[x], q = cand.m_planes[y];
            const Rational& ab = rs.gram(p, q);
            Rational fc = Rational(4) * ab * ab / (rs.plane_len_sq(p) * rs.plane_len_sq(q));
            if (fc != Rational(1)) continue;  // angle pi/3 or 2pi/3 only
            // exemption: both roots inside one G2 factor of g
            if (rs.factor_of_plane[static_cast<std::size_t>(p)] ==
                    rs.factor_of_plane[static_cast<std::size_t>(q)] &&
                rs.factors[static_cast<std::size_t>(
                               rs.factor_of_plane[static_cast<std::size_t>(p)])]
                        .type == TypeLabel::G)
                continue;
            const ExactVector& a = rs.plane_reps[static_cast<std::size_t>(p)];
            const ExactVector& b = rs.plane_reps[static_cast<std::size_t>(q)];
            int ps = rs.plane_index(a + b);
            int pd = rs.plane_index(a - b);
            bool sum_in_h = ps >= 0 && plane_in(cand.h_planes, ps);
            bool diff_in_h = pd >= 0 && plane_in(cand.h_planes, pd);
            if (!sum_in_h && !diff_in_h) return Verdict::fail("acute_pair", {a, b});
        }
    return Verdict::ok();
}

bool in_rank_one_symmetric_table(const RootSystem& rs, const TypeDecomp& h_type) {
    if (rs.factors.size() != 1) return false;
    TypeLabel t = rs.factors[0].type;
    int n = rs.factors[0].rank;
    auto mk = [](std::vector<Factor> fs, int corank) {
        TypeDecomp d;
        d.factors = canonical_factors(fs);
        d.torus_corank = corank;
        return d;
    };
    std::vector<TypeDecomp> table;
    switch (t) {
        case TypeLabel::B:
            table.push_back(mk({{TypeLabel::D, n}}, 0));
            break;
        case TypeLabel::A:
            if (n == 1)
                table.push_back(mk({}, 1));
            else
                table.push_back(mk({{TypeLabel::A, n - 1}}, 1));
            break;
        case TypeLabel::C:
            if (n >= 2) table.push_back(mk({{TypeLabel::C, n - 1}, {TypeLabel::A, 1}}, 0));
            break;
        case TypeLabel::F:
            table.push_back(mk({{TypeLabel::B, 4}}, 0));
            break;
        default:
            break;
    }
    for (const auto& d : table)
        if (d == h_type) return true;
    return false;
}

Verdict symmetric_excess_rank(const EqualRankCandidate& cand) {
    const RootSystem& rs = *cand.rs;
    std::optional<std::pair<ExactVector, ExactVector>> flat;
    for (std::size_t x = 0; x < cand.m_planes.size(); ++x)
        for (std::size_t y = x + 1; y < cand.m_planes.size(); ++y) {
            const ExactVector& a = rs.plane_reps[static_cast<std::size_t>(cand.m_planes[x])];
            const ExactVector& b = rs.plane_reps[static_cast<std::size_t>(cand.m_planes[y])];
            bool any_root = false;
            for (const ExactVector& s : {a + b, a - b}) {
                int pi = rs.plane_index(s);
                if (pi < 0) continue;
                any_root = true;
                if (!plane_in(cand.h_planes, pi)) return Verdict::ok();  // not symmetric
            }
            if (!any_root && !flat) flat = std::make_pair(a, b);
        }
    if (flat) return Verdict::fail("symmetric_rank", {flat->first, flat->second});
    if (!cand.m_planes.empty() && !in_rank_one_symmetric_table(rs, cand.h_type)) {
        return Verdict::fail("symmetric_table", {});
    }
    return Verdict::ok();
}

Verdict factor_spread(const EqualRankCandidate& cand) {
    const RootSystem& rs = *cand.rs;
    if (rs.factors.size() < 2) return Verdict::ok();
    int seen = -1;
    for (int p : cand.m_planes) {
        int f = rs.factor_of_plane[static_cast<std::size_t>(p)];
        if (seen < 0) {
            seen = f;
        } else if (f != seen) {
            // witness: one commuting m-plane pair across the two factors
            for (int q : cand.m_planes)
                if (rs.factor_of_plane[static_cast<std::size_t>(q)] == seen)
                    return Verdict::fail(
                        "factor_spread",
                        {rs.plane_reps[static_cast<std::size_t>(q)],
                         rs.plane_reps[static_cast<std::size_t>(p)]});
        }
    }
    return Verdict::ok();
}

EqualRankReport classify_equal_rank(const RootSystem& rs, int rank_cap,
                                    double budget_seconds) {
    EqualRankReport report;
    report.g_name = rs.name();
    auto classes = closed_subsystems(rs, rank_cap, budget_seconds);
    for (const auto& cls : classes) {
        if (cls.planes.size() == rs.plane_reps.size()) continue;  // h = g: dim M = 0
        EqualRankCandidate cand = make_candidate(rs, cls.planes);
        Verdict v = factor_spread(cand);
        if (v.pass()) v = commuting_pair_filter(cand);
        if (v.pass()) v = acute_pair_filter(cand);
        if (v.pass()) v = symmetric_excess_rank(cand);
        report.results.push_back({std::move(cand), std::move(v)});
    }
    std::sort(report.results.begin(), report.results.end(),
              [](const EqualRankResult& a, const EqualRankResult& b) {
                  return a.candidate.signature < b.candidate.signature;
              });
    return report;
}

EqualRankReport classify_equal_rank(TypeLabel type, int rank, int rank_cap,
                                    double budget_seconds) {
    auto rs = std::make_shared<RootSystem>(RootSystem::build(type, rank));
    EqualRankReport rep = classify_equal_rank(*rs, rank_cap, budget_seconds);
    rep.owned = rs;
    return rep;
}

std::vector<TypeDecomp> EqualRankReport::survivors() const {
    std::vector<TypeDecomp> out;
    for (const auto& r : results)
        if (r.verdict.pass()) out.push_back(r.candidate.h_type);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<TypeDecomp> equal_rank_survivor_types(TypeLabel type, int rank) {
    auto mk = [](std::vector<Factor> fs, int corank) {
        TypeDecomp d;
        d.factors = canonical_factors(fs);
        d.torus_corank = corank;
        return d;
    };
    std::vector<TypeDecomp> out;
    switch (type) {
        case TypeLabel::A:
            out.push_back(rank == 1 ? mk({}, 1) : mk({{TypeLabel::A, rank - 1}}, 1));
            break;
        case TypeLabel::B:
            out.push_back(mk({{TypeLabel::D, rank}}, 0));
            if (rank == 2) out.push_back(mk({{TypeLabel::A, 1}}, 1));
            break;
        case TypeLabel::C:
            if (rank >= 2) {
                out.push_back(mk({{TypeLabel::C, rank - 1}}, 1));
                out.push_back(mk({{TypeLabel::C, rank - 1}, {TypeLabel::A, 1}}, 0));
            }
            break;
        case TypeLabel::F:
            out.push_back(mk({{TypeLabel::B, 4}}, 0));
            break;
        case TypeLabel::G:
            out.push_back(mk({{TypeLabel::A, 2}}, 0));
            break;
        case TypeLabel::D:
        case TypeLabel::E:
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nhf
