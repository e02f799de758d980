#include <doctest.h>

#include "nhf/models.hpp"

#include <cmath>
#include <random>

using namespace nhf;

namespace {

GaussQ gq(long long re) { return GaussQ(QExt(re)); }
GaussQ gqi(long long im) { return GaussQ(QExt(0), QExt(im)); }

void check_algebra_invariants(const MatrixAlgebra& model) {
    CAPTURE(model.name);
    // bases are anti-Hermitian and g closes under the bracket
    for (const auto& b : model.g_basis) CHECK(b.is_anti_hermitian());
    for (std::size_t i = 0; i < model.g_basis.size(); ++i)
        for (std::size_t j = i + 1; j < model.g_basis.size(); ++j)
            CHECK(in_real_span(model.g_basis, bracket(model.g_basis[i], model.g_basis[j])));
    // h is a subalgebra of g
    for (const auto& b : model.h_basis) CHECK(in_real_span(model.g_basis, b));
    for (std::size_t i = 0; i < model.h_basis.size(); ++i)
        for (std::size_t j = i + 1; j < model.h_basis.size(); ++j)
            CHECK(in_real_span(model.h_basis, bracket(model.h_basis[i], model.h_basis[j])));
    // orthogonality and invariance of m
    for (const auto& h : model.h_basis)
        for (const auto& m : model.m_basis) {
            CHECK(minus_re_trace_prod(h, m).is_zero());
            CHECK(in_real_span(model.m_basis, bracket(h, m)));
        }
    // the pairing is positive on basis directions
    for (const auto& b : model.g_basis) CHECK(minus_re_trace_prod(b, b).sign() > 0);
}

} // namespace

TEST_CASE("catalog models have the expected dimensions and structure") {
    struct Row {
        const char* name;
        std::size_t g, h;
    };
    for (Row row : std::initializer_list<Row>{{"su(3)/su(2)", 8, 3},
                                              {"su(4)/su(3)", 15, 8},
                                              {"su(3)/s(u(2)u(1))", 8, 4},
                                              {"u(2)/u(1)", 4, 1},
                                              {"sp(2)/sp(1)", 10, 3},
                                              {"sp(3)/sp(2)", 21, 10},
                                              {"so(4)/so(3)", 6, 3},
                                              {"so(5)/so(4)", 10, 6},
                                              {"sp(2)/su(2)-berger", 10, 3},
                                              {"su(5)/sp(2)+R", 24, 11},
                                              {"su(3)/t", 8, 2}}) {
        MatrixAlgebra model = build_model(row.name);
        CAPTURE(row.name);
        CHECK(model.dim_g() == row.g);
        CHECK(model.dim_h() == row.h);
        CHECK(model.dim_m() == row.g - row.h);
        check_algebra_invariants(model);
    }
    // Berger space is 7-dimensional
    CHECK(build_model("sp(2)/su(2)-berger").dim_m() == 7);
}

TEST_CASE("internal oracle models are consistent") {
    check_algebra_invariants(build_so5_core_model());
    check_algebra_invariants(build_sp3_endgame_model());
    CHECK(build_so5_core_model().dim_m() == 7);
    CHECK(build_sp3_endgame_model().dim_h() == 6);
}

TEST_CASE("the v(t) families lie in m") {
    for (const char* name : {"su(3)/su(2)", "su(4)/su(3)", "u(2)/u(1)", "u(3)/u(2)",
                             "sp(2)/sp(1)", "sp(3)/sp(2)", "sp(2)/su(2)-berger",
                             "su(5)/sp(2)+R"}) {
        MatrixAlgebra model = build_model(name);
        CAPTURE(name);
        for (Rational t : {Rational(0), Rational::of(1, 3), Rational(2)}) {
            CMatrix v = model_family_vt(name, t);
            CHECK(v.is_anti_hermitian());
            CHECK(in_real_span(model.m_basis, v));
        }
    }
    // the 9x9 family is anti-symmetric real
    CMatrix v = model_family_vt("spin9-vt-family", Rational::of(1, 2));
    CHECK(v.is_anti_hermitian());
}

TEST_CASE("eigenvalue sequences of the printed families") {
    SUBCASE("su(3) family") {
        CMatrix v0 = model_family_vt("su(3)/su(2)", Rational(0));
        auto seq = eigenvalue_sequence(v0);
        auto vals = seq.values();
        REQUIRE(vals.size() == 3);
        CHECK(vals[0] == doctest::Approx(-1).epsilon(1e-9));
        CHECK(vals[1] == doctest::Approx(-1).epsilon(1e-9));
        CHECK(vals[2] == doctest::Approx(2).epsilon(1e-9));

        CMatrix v1 = model_family_vt("su(3)/su(2)", Rational(1));
        vals = eigenvalue_sequence(v1).values();
        REQUIRE(vals.size() == 3);
        double s13 = std::sqrt(13.0);
        CHECK(vals[0] == doctest::Approx((1 - s13) / 2).epsilon(1e-9));
        CHECK(vals[1] == doctest::Approx(-1).epsilon(1e-9));
        CHECK(vals[2] == doctest::Approx((1 + s13) / 2).epsilon(1e-9));
    }
    SUBCASE("so(9) family at t = 0") {
        CMatrix v0 = model_family_vt("spin9-vt-family", Rational(0));
        auto vals = eigenvalue_sequence(v0).values();
        REQUIRE(vals.size() == 9);
        std::vector<double> want{-1, -1, -1, -1, 0, 1, 1, 1, 1};
        for (std::size_t i = 0; i < 9; ++i)
            CHECK(vals[i] == doctest::Approx(want[i]).epsilon(1e-9));
    }
    SUBCASE("sequences are trace-balanced and so-symmetric") {
        for (const char* name : {"su(4)/su(3)", "sp(2)/sp(1)", "su(5)/sp(2)+R"}) {
            CMatrix v = model_family_vt(name, Rational::of(1, 2));
            auto vals = eigenvalue_sequence(v).values();
            double sum = 0;
            for (double x : vals) sum += x;
            CHECK(std::abs(sum) < 1e-9);
        }
        CMatrix v = model_family_vt("spin9-vt-family", Rational::of(1, 2));
        auto vals = eigenvalue_sequence(v).values();
        for (std::size_t i = 0; i < vals.size(); ++i)
            CHECK(vals[i] == doctest::Approx(-vals[vals.size() - 1 - i]).epsilon(1e-9));
    }
}

TEST_CASE("sequence dependence is decided exactly") {
    CMatrix v0 = model_family_vt("su(3)/su(2)", Rational(0));
    SUBCASE("scaling is dependent") {
        CMatrix w = GaussQ(QExt(2)) * v0;
        CHECK(seq_dependent(v0, w));
        w = GaussQ(QExt(Rational::of(-3, 7))) * v0;
        CHECK(seq_dependent(v0, w));
    }
    SUBCASE("the deformed family leaves the orbit line") {
        CHECK_FALSE(seq_dependent(v0, model_family_vt("su(3)/su(2)", Rational::of(1, 10))));
    }
    SUBCASE("equivalence relation on random nonzero matrices") {
        MatrixAlgebra so4 = build_model("so(4)/so(3)");
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> c(-4, 4);
        for (int trial = 0; trial < 20; ++trial) {
            auto rand_m = [&]() {
                CMatrix x(so4.dim_ambient);
                bool z = true;
                while (z) {
                    x = CMatrix(so4.dim_ambient);
                    for (const auto& b : so4.g_basis) {
                        int k = c(rng);
                        if (k) x = x + (GaussQ(QExt(k)) * b);
                    }
                    z = x.is_zero();
                }
                return x;
            };
            CMatrix a = rand_m(), b = rand_m(), d = rand_m();
            CHECK(seq_dependent(a, a));
            CHECK(seq_dependent(a, b) == seq_dependent(b, a));
            if (seq_dependent(a, b) && seq_dependent(b, d)) CHECK(seq_dependent(a, d));
        }
    }
    SUBCASE("m-vectors of the round spheres have proportional spectra") {
        MatrixAlgebra so5 = build_model("so(5)/so(4)");
        CHECK(random_m_pairs_dependent(so5, 100, 99));
        MatrixAlgebra so4 = build_model("so(4)/so(3)");
        CHECK(random_m_pairs_dependent(so4, 100, 99));
    }
}

TEST_CASE("centralizers by exact linear algebra") {
    SUBCASE("su(2): centralizer of the torus is the torus") {
        MatrixAlgebra su2 = build_model("su(3)/su(2)");
        // use the su(2) block inside: diag(i,-i,0)
        CMatrix d(3);
        d.at(0, 0) = gqi(1);
        d.at(1, 1) = gqi(-1);
        auto cent = centralizer(su2, {d});
        CHECK(cent.size() == 2);  // the full diagonal torus of su(3)... within g
    }
    SUBCASE("regular torus element of su(3) has a 2-dimensional centralizer") {
        MatrixAlgebra su3t = build_model("su(3)/t");
        CMatrix d(3);
        d.at(0, 0) = gqi(1);
        d.at(1, 1) = gqi(2);
        d.at(2, 2) = gqi(-3);
        auto cent = centralizer(su3t, {d});
        CHECK(cent.size() == 2);
    }
}

TEST_CASE("flat splitting on su(3)/t with the printed commuting pair") {
    MatrixAlgebra model = build_model("su(3)/t");
    CMatrix u(3), v(3);
    // u = [[0,1,1],[-1,0,1],[-1,-1,0]]
    u.at(0, 1) = gq(1);
    u.at(0, 2) = gq(1);
    u.at(1, 0) = gq(-1);
    u.at(1, 2) = gq(1);
    u.at(2, 0) = gq(-1);
    u.at(2, 1) = gq(-1);
    // v = [[0,i,-i],[i,0,i],[-i,i,0]]
    v.at(0, 1) = gqi(1);
    v.at(0, 2) = gqi(-1);
    v.at(1, 0) = gqi(1);
    v.at(1, 2) = gqi(1);
    v.at(2, 0) = gqi(-1);
    v.at(2, 1) = gqi(1);

    CHECK(bracket(u, v).is_zero());
    CHECK(in_real_span(model.m_basis, u));
    CHECK(in_real_span(model.m_basis, v));

    auto w = flat_splitting_test(model, u, v);
    REQUIRE(w.has_value());
    CHECK(w->split_ok);
    CHECK(w->dim_m_part >= 2);
    CHECK(w->s0_basis.size() == 2);  // the pair spans a Cartan subalgebra

    // the centralizer of the pair contains its span
    auto cent = centralizer(model, {u, v});
    CHECK(in_real_span(cent, u));
    CHECK(in_real_span(cent, v));
}

TEST_CASE("commuting pair search across the catalog") {
    SUBCASE("su(3)/t has a commuting pair") {
        auto r = commuting_pair_search(build_model("su(3)/t"));
        REQUIRE(r.pair.has_value());
        CHECK(bracket(r.pair->first, r.pair->second).is_zero());
    }
    SUBCASE("the round sphere so(5)/so(4) has none") {
        auto r = commuting_pair_search(build_model("so(5)/so(4)"), 12, 5);
        CHECK_FALSE(r.pair.has_value());
        CHECK(r.achieved_min > 0.1);
    }
    SUBCASE("the other rank-one models have none either") {
        for (const char* name : {"su(3)/su(2)", "su(3)/s(u(2)u(1))", "u(2)/u(1)",
                                 "so(4)/so(3)"}) {
            CAPTURE(name);
            auto r = commuting_pair_search(build_model(name), 8, 5);
            CHECK_FALSE(r.pair.has_value());
            CHECK(r.achieved_min > 1e-3);
        }
    }
    SUBCASE("the Berger space has none") {
        auto r = commuting_pair_search(build_model("sp(2)/su(2)-berger"), 12, 5);
        CHECK_FALSE(r.pair.has_value());
        CHECK(r.achieved_min > 1e-3);
    }
    SUBCASE("the so(5)-core oracle finds the pair behind the pi/4 endgame") {
        MatrixAlgebra model = build_so5_core_model();
        auto r = commuting_pair_search(model);
        REQUIRE(r.pair.has_value());
        auto w = flat_splitting_test(model, r.pair->first, r.pair->second);
        REQUIRE(w.has_value());
        CHECK(w->dim_m_part >= 2);
    }
    SUBCASE("the sp(3) endgame pair gives a flat splitting") {
        MatrixAlgebra model = build_sp3_endgame_model();
        // u spans the j-direction of the middle slot, v the real direction of
        // the (first, third)-slot plane
        CMatrix u(6), v(6);
        u.at(2, 3) = gq(1);
        u.at(3, 2) = gq(-1);
        v.at(0, 4) = gq(1);
        v.at(1, 5) = gq(1);
        v.at(4, 0) = gq(-1);
        v.at(5, 1) = gq(-1);
        CHECK(bracket(u, v).is_zero());
        CHECK(in_real_span(model.m_basis, u));
        CHECK(in_real_span(model.m_basis, v));
        auto w = flat_splitting_test(model, u, v);
        REQUIRE(w.has_value());
        CHECK(w->split_ok);
        CHECK(w->dim_m_part == 2);
        CHECK(w->s0_basis.size() == 2);
    }
}

TEST_CASE("adjoint-orbit reports") {
    std::vector<Rational> ts{Rational::of(1, 10), Rational::of(1, 2)};
    for (const char* name : {"su(3)/su(2)", "su(4)/su(3)", "sp(2)/sp(1)", "sp(3)/sp(2)",
                             "sp(2)/su(2)-berger", "su(5)/sp(2)+R", "spin9-vt-family"}) {
        auto rep = condition_r_report(name, ts);
        CAPTURE(name);
        CHECK(rep.fails_condition_r);
        CHECK(rep.independent_at.size() == 2);
    }
    for (const char* name : {"so(4)/so(3)", "so(5)/so(4)"}) {
        auto rep = condition_r_report(name, ts);
        CAPTURE(name);
        CHECK_FALSE(rep.fails_condition_r);
    }
    CHECK(condition_r_report("spin9-vt-family", ts).family_unverified);
}
