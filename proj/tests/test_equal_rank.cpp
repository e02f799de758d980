#include <doctest.h>

#include "nhf/equal_rank.hpp"

#include <algorithm>
#include <set>

using namespace nhf;

namespace {

ExactVector ev(std::vector<long long> cs) {
    std::vector<QExt> q;
    for (auto c : cs) q.push_back(QExt(c));
    return ExactVector(q);
}

TypeDecomp td(std::vector<Factor> fs, int corank) {
    TypeDecomp d;
    d.factors = canonical_factors(fs);
    d.torus_corank = corank;
    return d;
}

EqualRankCandidate candidate_from_roots(const RootSystem& rs,
                                        const std::vector<ExactVector>& h_roots) {
    std::vector<int> planes;
    for (const auto& r : h_roots) {
        int p = rs.plane_index(r);
        REQUIRE(p >= 0);
        planes.push_back(p);
    }
    std::sort(planes.begin(), planes.end());
    planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
    return make_candidate(rs, planes);
}

std::vector<TypeDecomp> survivors_of(TypeLabel t, int n) {
    return classify_equal_rank(t, n).survivors();
}

// every Fail witness must re-validate against the raw predicate it names
void check_witnesses(const EqualRankReport& rep) {
    for (const auto& r : rep.results) {
        if (r.verdict.pass()) continue;
        const RootSystem& rs = *r.candidate.rs;
        if (r.verdict.failing_rule == "commuting_pair") {
            REQUIRE(r.verdict.witness.size() == 2);
            const auto& a = r.verdict.witness[0];
            const auto& b = r.verdict.witness[1];
            CHECK(sum_diff_status(rs, a, b) == SumDiff::neither);
            for (const auto& w : r.verdict.witness) {
                int p = rs.plane_index(w);
                CHECK_FALSE(std::binary_search(r.candidate.h_planes.begin(),
                                               r.candidate.h_planes.end(), p));
            }
        } else if (r.verdict.failing_rule == "acute_pair") {
            REQUIRE(r.verdict.witness.size() == 2);
            const auto& a = r.verdict.witness[0];
            const auto& b = r.verdict.witness[1];
            CHECK(angle_class(a, b).four_cos_sq == Rational(1));
            for (const ExactVector& s : {a + b, a - b}) {
                int p = rs.plane_index(s);
                if (p >= 0)
                    CHECK_FALSE(std::binary_search(r.candidate.h_planes.begin(),
                                                   r.candidate.h_planes.end(), p));
            }
        }
    }
}

} // namespace

TEST_CASE("exclusion filters on the named candidates") {
    RootSystem b2 = RootSystem::build(TypeLabel::B, 2);

    SUBCASE("B2 with h the short A1 fails the first filter") {
        auto cand = candidate_from_roots(b2, {ev({1, 0})});
        Verdict v = commuting_pair_filter(cand);
        REQUIRE_FALSE(v.pass());
        // the witness pair is the orthogonal long pair
        CHECK(sum_diff_status(b2, v.witness[0], v.witness[1]) == SumDiff::neither);
    }
    SUBCASE("B2 with h the long D2 passes all filters") {
        auto cand = candidate_from_roots(b2, {ev({1, 1}), ev({1, -1})});
        CHECK(commuting_pair_filter(cand).pass());
        CHECK(acute_pair_filter(cand).pass());
        CHECK(symmetric_excess_rank(cand).pass());
        CHECK(cand.h_type == td({{TypeLabel::D, 2}}, 0));
    }
    SUBCASE("A3 with h = A2+R passes the first filter") {
        RootSystem a3 = RootSystem::build(TypeLabel::A, 3);
        auto cand = candidate_from_roots(
            a3, {ev({1, -1, 0, 0}), ev({1, 0, -1, 0}), ev({0, 1, -1, 0})});
        CHECK(cand.h_type == td({{TypeLabel::A, 2}}, 1));
        CHECK(commuting_pair_filter(cand).pass());
        CHECK(acute_pair_filter(cand).pass());
        CHECK(symmetric_excess_rank(cand).pass());
    }
    SUBCASE("A2 with h the torus fails the second filter") {
        RootSystem a2 = RootSystem::build(TypeLabel::A, 2);
        auto cand = candidate_from_roots(a2, {});
        CHECK(commuting_pair_filter(cand).pass());
        Verdict v = acute_pair_filter(cand);
        REQUIRE_FALSE(v.pass());
    }
    SUBCASE("F4 with h = D4 fails the second filter") {
        RootSystem f4 = RootSystem::build(TypeLabel::F, 4);
        std::vector<ExactVector> longs;
        for (const auto& r : f4.roots)
            if (norm_sq(r) == QExt(2)) longs.push_back(r);
        auto cand = candidate_from_roots(f4, longs);
        CHECK(cand.h_type == td({{TypeLabel::D, 4}}, 0));
        Verdict v = acute_pair_filter(cand);
        REQUIRE_FALSE(v.pass());
    }
    SUBCASE("G2 with h = A2 passes via the G2 exemption") {
        RootSystem g2 = RootSystem::build(TypeLabel::G, 2);
        std::vector<ExactVector> longs;
        for (const auto& r : g2.roots)
            if (norm_sq(r) == QExt(3)) longs.push_back(r);
        auto cand = candidate_from_roots(g2, longs);
        CHECK(commuting_pair_filter(cand).pass());
        CHECK(acute_pair_filter(cand).pass());
        CHECK(symmetric_excess_rank(cand).pass());
    }
    SUBCASE("D4 with h = D3+R fails: a 2-flat inside m") {
        RootSystem d4 = RootSystem::build(TypeLabel::D, 4);
        std::vector<ExactVector> h;
        for (const auto& r : d4.roots) {
            bool uses4 = !r[3].is_zero();
            if (!uses4) h.push_back(r);
        }
        auto cand = candidate_from_roots(d4, h);
        CHECK(cand.h_type == td({{TypeLabel::D, 3}}, 1));
        CHECK_FALSE(commuting_pair_filter(cand).pass());
        CHECK_FALSE(symmetric_excess_rank(cand).pass());
    }
    SUBCASE("B3 with h = D3 and F4 with h = B4 pass the symmetric filter") {
        RootSystem b3 = RootSystem::build(TypeLabel::B, 3);
        std::vector<ExactVector> h;
        for (const auto& r : b3.roots)
            if (norm_sq(r) == QExt(2)) h.push_back(r);
        auto cand = candidate_from_roots(b3, h);
        CHECK(cand.h_type == td({{TypeLabel::D, 3}}, 0));
        CHECK(symmetric_excess_rank(cand).pass());
        CHECK(commuting_pair_filter(cand).pass());
        CHECK(acute_pair_filter(cand).pass());

        RootSystem f4 = RootSystem::build(TypeLabel::F, 4);
        std::vector<ExactVector> ints;
        for (const auto& r : f4.roots) {
            bool integer_coords = true;
            for (std::size_t i = 0; i < r.dim(); ++i)
                integer_coords = integer_coords && r[i].is_rational() &&
                                 r[i].rational_part().is_integer();
            if (integer_coords) ints.push_back(r);
        }
        auto cf4 = candidate_from_roots(f4, ints);
        CHECK(cf4.h_type == td({{TypeLabel::B, 4}}, 0));
        CHECK(commuting_pair_filter(cf4).pass());
        CHECK(acute_pair_filter(cf4).pass());
        CHECK(symmetric_excess_rank(cf4).pass());
    }
}

TEST_CASE("equal-rank survivor sets reproduce the classification") {
    // A_n: only A_{n-1} + R
    CHECK(survivors_of(TypeLabel::A, 1) == std::vector<TypeDecomp>{td({}, 1)});
    CHECK(survivors_of(TypeLabel::A, 2) ==
          std::vector<TypeDecomp>{td({{TypeLabel::A, 1}}, 1)});
    CHECK(survivors_of(TypeLabel::A, 3) ==
          std::vector<TypeDecomp>{td({{TypeLabel::A, 2}}, 1)});
    CHECK(survivors_of(TypeLabel::A, 4) ==
          std::vector<TypeDecomp>{td({{TypeLabel::A, 3}}, 1)});

    // B2: D2 and additionally the long A1 + R
    {
        auto got = survivors_of(TypeLabel::B, 2);
        std::vector<TypeDecomp> want{td({{TypeLabel::A, 1}}, 1),
                                     td({{TypeLabel::A, 1}, {TypeLabel::A, 1}}, 0)};
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
    CHECK(survivors_of(TypeLabel::B, 3) ==
          std::vector<TypeDecomp>{td({{TypeLabel::D, 3}}, 0)});
    CHECK(survivors_of(TypeLabel::B, 4) ==
          std::vector<TypeDecomp>{td({{TypeLabel::D, 4}}, 0)});

    // C_n: C_{n-1} + R and C_{n-1} + A1
    {
        auto got = survivors_of(TypeLabel::C, 3);
        std::vector<TypeDecomp> want{td({{TypeLabel::C, 2}}, 1),
                                     td({{TypeLabel::C, 2}, {TypeLabel::A, 1}}, 0)};
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        got = survivors_of(TypeLabel::C, 4);
        want = {td({{TypeLabel::C, 3}}, 1), td({{TypeLabel::C, 3}, {TypeLabel::A, 1}}, 0)};
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }

    // D4: nothing
    CHECK(survivors_of(TypeLabel::D, 4).empty());

    // G2 and F4
    CHECK(survivors_of(TypeLabel::G, 2) ==
          std::vector<TypeDecomp>{td({{TypeLabel::A, 2}}, 0)});
    CHECK(survivors_of(TypeLabel::F, 4) ==
          std::vector<TypeDecomp>{td({{TypeLabel::B, 4}}, 0)});
}

TEST_CASE("fail witnesses re-validate and reports are deterministic") {
    for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{
             {TypeLabel::B, 3}, {TypeLabel::C, 3}, {TypeLabel::D, 4}, {TypeLabel::G, 2}}) {
        EqualRankReport rep = classify_equal_rank(t, n);
        check_witnesses(rep);
        EqualRankReport rep2 = classify_equal_rank(t, n);
        REQUIRE(rep.results.size() == rep2.results.size());
        for (std::size_t i = 0; i < rep.results.size(); ++i) {
            CHECK(rep.results[i].candidate.signature == rep2.results[i].candidate.signature);
            CHECK(rep.results[i].verdict.pass() == rep2.results[i].verdict.pass());
            CHECK(rep.results[i].verdict.failing_rule == rep2.results[i].verdict.failing_rule);
        }
    }
}

TEST_CASE("survivors are maximal: adding any plane breaks closure or the type") {
    for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{
             {TypeLabel::A, 2}, {TypeLabel::B, 2}, {TypeLabel::B, 3}, {TypeLabel::C, 3},
             {TypeLabel::G, 2}}) {
        RootSystem rs = RootSystem::build(t, n);
        EqualRankReport rep = classify_equal_rank(rs);
        for (const auto& r : rep.results) {
            if (!r.verdict.pass()) continue;
            for (std::size_t p = 0; p < rs.plane_reps.size(); ++p) {
                if (std::binary_search(r.candidate.h_planes.begin(),
                                       r.candidate.h_planes.end(), static_cast<int>(p)))
                    continue;
                std::vector<int> bigger = r.candidate.h_planes;
                bigger.push_back(static_cast<int>(p));
                std::sort(bigger.begin(), bigger.end());
                if (!planes_closed(rs, bigger)) continue;  // closure broken: fine
                CHECK(identify_type(rs, bigger) != r.candidate.h_type);
            }
        }
    }
}
