#include <doctest.h>

#include "nhf/root_system.hpp"

#include <map>
#include <random>
#include <set>

using namespace nhf;

namespace {

ExactVector ev(std::vector<long long> cs) {
    std::vector<QExt> q;
    for (auto c : cs) q.push_back(QExt(c));
    return ExactVector(q);
}

ExactVector half_vec(std::vector<int> signs) {
    std::vector<QExt> q;
    for (int s : signs) q.push_back(QExt(s) * QExt::half());
    return ExactVector(q);
}

} // namespace

TEST_CASE("root counts match the classical values") {
    auto count = [](TypeLabel t, int n) { return RootSystem::build(t, n).roots.size(); };
    CHECK(count(TypeLabel::A, 1) == 2);
    CHECK(count(TypeLabel::A, 2) == 6);
    CHECK(count(TypeLabel::A, 4) == 20);
    CHECK(count(TypeLabel::B, 2) == 8);
    CHECK(count(TypeLabel::B, 4) == 32);
    CHECK(count(TypeLabel::C, 3) == 18);
    CHECK(count(TypeLabel::D, 4) == 24);
    CHECK(count(TypeLabel::G, 2) == 12);
    CHECK(count(TypeLabel::F, 4) == 48);
    CHECK(count(TypeLabel::E, 6) == 72);
    CHECK(count(TypeLabel::E, 7) == 126);
    CHECK(count(TypeLabel::E, 8) == 240);
}

TEST_CASE("roots come in opposite pairs and presentations are reduced") {
    for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{
             {TypeLabel::A, 3}, {TypeLabel::B, 3}, {TypeLabel::C, 3}, {TypeLabel::D, 4},
             {TypeLabel::G, 2}, {TypeLabel::F, 4}, {TypeLabel::E, 6}, {TypeLabel::E, 7}}) {
        RootSystem rs = RootSystem::build(t, n);
        for (const auto& r : rs.roots) {
            CHECK(rs.is_root(-r));
            CHECK_FALSE(rs.is_root(QExt(2) * r));
        }
        CHECK(rs.plane_reps.size() * 2 == rs.roots.size());
    }
}

TEST_CASE("membership checks from the presentations") {
    RootSystem f4 = RootSystem::build(TypeLabel::F, 4);
    CHECK(f4.is_root(ev({1, 1, 0, 0})));
    CHECK_FALSE(f4.is_root(ev({2, 1, 0, 0})));
    CHECK(f4.is_root(half_vec({1, 1, 1, 1})));
    CHECK(f4.is_root(half_vec({1, -1, 1, -1})));

    RootSystem c3 = RootSystem::build(TypeLabel::C, 3);
    CHECK(c3.is_root(ev({1, 0, 1})));
    CHECK(c3.is_root(ev({0, 2, 0})));
    CHECK_FALSE(c3.is_root(ev({1, 0, 0})));

    RootSystem g2 = RootSystem::build(TypeLabel::G, 2);
    CHECK(g2.is_root(ExactVector({QExt::sqrt3(), QExt(0)})));
    CHECK(g2.is_root(ev({0, 1})));

    RootSystem a2 = RootSystem::build(TypeLabel::A, 2);
    CHECK(a2.ambient_dim == 3);
    CHECK(a2.is_root(ev({1, -1, 0})));
}

TEST_CASE("sum and difference status") {
    RootSystem b2 = RootSystem::build(TypeLabel::B, 2);
    CHECK(sum_diff_status(b2, ev({1, 1}), ev({1, -1})) == SumDiff::neither);
    RootSystem a2 = RootSystem::build(TypeLabel::A, 2);
    CHECK(sum_diff_status(a2, ev({1, -1, 0}), ev({0, 1, -1})) == SumDiff::sum_only);
    RootSystem f4 = RootSystem::build(TypeLabel::F, 4);
    // e1 - (e1+e2+e3+e4)/2 lies in the half-integer family, e1 + it does not
    CHECK(sum_diff_status(f4, ev({1, 0, 0, 0}), half_vec({1, 1, 1, 1})) == SumDiff::diff_only);
    CHECK(sum_diff_status(f4, ev({0, 1, 0, 0}), half_vec({1, 1, 1, 1})) == SumDiff::diff_only);
    CHECK(sum_diff_status(f4, ev({1, 1, 0, 0}), ev({1, -1, 0, 0})) == SumDiff::neither);
}

TEST_CASE("angle classes") {
    auto ac = angle_class(ev({1, 1}), ev({-1, 1}));
    CHECK(ac.four_cos_sq == Rational(0));
    CHECK(ac.len_ratio_sq == Rational(1));
    ac = angle_class(ev({1, 1}), ev({0, 1}));
    CHECK(ac.four_cos_sq == Rational(2));
    CHECK(ac.len_ratio_sq == Rational(2));
    ac = angle_class(ev({1, -1, 0}), ev({0, 1, -1}));
    CHECK(ac.four_cos_sq == Rational(1));
    CHECK(ac.len_ratio_sq == Rational(1));
}

TEST_CASE("reflections map roots to roots") {
    RootSystem a2 = RootSystem::build(TypeLabel::A, 2);
    CHECK(reflect(a2, ev({1, -1, 0}), ev({1, 0, -1})) == ev({0, 1, -1}));
    RootSystem b2 = RootSystem::build(TypeLabel::B, 2);
    CHECK(reflect(b2, ev({0, 1}), ev({1, 1})) == ev({1, -1}));

    for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{{TypeLabel::A, 3},
                                                              {TypeLabel::B, 4},
                                                              {TypeLabel::C, 4},
                                                              {TypeLabel::D, 4},
                                                              {TypeLabel::G, 2},
                                                              {TypeLabel::F, 4}}) {
        RootSystem rs = RootSystem::build(t, n);
        for (const auto& alpha : rs.roots) {
            std::set<ExactVector> image;
            for (const auto& r : rs.roots) {
                ExactVector ref = reflect(rs, alpha, r);
                CHECK(rs.is_root(ref));
                image.insert(ref);
            }
            CHECK(image.size() == rs.roots.size());
        }
        if (t == TypeLabel::B) break;  // one large system is enough for the orbit check
    }
}

TEST_CASE("crystallographic menu over all pairs") {
    for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{
             {TypeLabel::B, 3}, {TypeLabel::C, 3}, {TypeLabel::G, 2}, {TypeLabel::F, 4},
             {TypeLabel::E, 6}}) {
        RootSystem rs = RootSystem::build(t, n);
        std::set<std::string> fours{"0", "1", "2", "3", "4"};
        std::set<std::string> ratios{"1", "2", "3", "1/2", "1/3"};
        for (std::size_t i = 0; i < rs.plane_reps.size(); ++i)
            for (std::size_t j = 0; j < rs.plane_reps.size(); ++j) {
                auto ac = angle_class(rs.plane_reps[i], rs.plane_reps[j]);
                CHECK(fours.count(ac.four_cos_sq.str()));
                CHECK(ratios.count(ac.len_ratio_sq.str()));
            }
    }
}

TEST_CASE("identify_type recovers every built system") {
    for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{
             {TypeLabel::A, 1}, {TypeLabel::A, 4}, {TypeLabel::B, 2}, {TypeLabel::B, 4},
             {TypeLabel::C, 3}, {TypeLabel::C, 4}, {TypeLabel::D, 4}, {TypeLabel::G, 2},
             {TypeLabel::F, 4}, {TypeLabel::E, 6}, {TypeLabel::E, 7}, {TypeLabel::E, 8}}) {
        RootSystem rs = RootSystem::build(t, n);
        TypeDecomp d = identify_type(rs.roots, rs.rank());
        CHECK(d.torus_corank == 0);
        REQUIRE(d.factors.size() == 1);
        auto want = canonical_factors({Factor{t, n}});
        CHECK(d.factors == want);
    }
}

TEST_CASE("identify_type on distinguished subsets") {
    RootSystem b2 = RootSystem::build(TypeLabel::B, 2);
    // long roots of B2 form A1+A1
    std::vector<ExactVector> longs;
    for (const auto& r : b2.roots)
        if (norm_sq(r) == QExt(2)) longs.push_back(r);
    TypeDecomp d = identify_type(longs, 2);
    CHECK(d.factors == canonical_factors({{TypeLabel::A, 1}, {TypeLabel::A, 1}}));
    CHECK(d.torus_corank == 0);

    RootSystem g2 = RootSystem::build(TypeLabel::G, 2);
    longs.clear();
    for (const auto& r : g2.roots)
        if (norm_sq(r) == QExt(3)) longs.push_back(r);
    d = identify_type(longs, 2);
    CHECK(d.factors == std::vector<Factor>{{TypeLabel::A, 2}});

    // the G2 root pattern inside the B3 projection: long e_i - e_j plus the
    // short thirds family
    auto third = [](long long a, long long b, long long c) {
        Rational t3 = Rational::of(1, 3);
        return ExactVector({QExt(Rational(a) * t3), QExt(Rational(b) * t3),
                            QExt(Rational(c) * t3)});
    };
    std::vector<ExactVector> g2set;
    for (auto v : {ev({1, -1, 0}), ev({1, 0, -1}), ev({0, 1, -1}), third(1, 1, -2),
                   third(1, -2, 1), third(-2, 1, 1)}) {
        g2set.push_back(v);
        g2set.push_back(-v);
    }
    d = identify_type(g2set, 2);
    CHECK(d.factors == std::vector<Factor>{{TypeLabel::G, 2}});
    CHECK(d.torus_corank == 0);
}

TEST_CASE("closed subsystem enumeration agrees with brute force") {
    for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{
             {TypeLabel::A, 1}, {TypeLabel::A, 2}, {TypeLabel::A, 3}, {TypeLabel::B, 2},
             {TypeLabel::C, 3}, {TypeLabel::G, 2}, {TypeLabel::D, 4}, {TypeLabel::B, 4},
             {TypeLabel::C, 4}}) {
        RootSystem rs = RootSystem::build(t, n);
        auto fast = closed_subsystems(rs);
        auto brute = closed_subsystems_brute(rs);
        std::set<std::string> fast_sigs, brute_sigs;
        for (const auto& c : fast) fast_sigs.insert(c.signature);
        for (const auto& c : brute) brute_sigs.insert(c.signature);
        CHECK(fast_sigs == brute_sigs);
    }
}

TEST_CASE("closed subsystem classes of the small systems") {
    RootSystem b2 = RootSystem::build(TypeLabel::B, 2);
    auto classes = closed_subsystems(b2);
    // torus, short A1, long A1, long A1+A1, B2 itself
    CHECK(classes.size() == 5);

    RootSystem a2 = RootSystem::build(TypeLabel::A, 2);
    classes = closed_subsystems(a2);
    CHECK(classes.size() == 3);  // torus, A1, A2

    RootSystem g2 = RootSystem::build(TypeLabel::G, 2);
    classes = closed_subsystems(g2);
    std::set<std::string> types;
    for (const auto& c : classes) types.insert(c.type.str());
    CHECK(types.count("R+R"));       // torus
    CHECK(types.count("A1+R"));      // both A1 classes share the type string
    CHECK(types.count("A1+A1"));
    CHECK(types.count("A2"));
    CHECK(types.count("G2"));
    CHECK(classes.size() == 6);  // the two A1 classes differ by root length
}

TEST_CASE("direct sums") {
    RootSystem a2 = RootSystem::build(TypeLabel::A, 2);
    RootSystem a1 = RootSystem::build(TypeLabel::A, 1);
    RootSystem sum = RootSystem::direct_sum(a2, a1);
    CHECK(sum.roots.size() == 8);
    CHECK(sum.ambient_dim == 5);
    CHECK(sum.rank() == 3);
    CHECK(sum.factors.size() == 2);
    TypeDecomp d = identify_type(sum.roots, sum.rank());
    CHECK(d.factors == canonical_factors({{TypeLabel::A, 2}, {TypeLabel::A, 1}}));
}
