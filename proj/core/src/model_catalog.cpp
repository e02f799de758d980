#include "nhf/models.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace nhf {

namespace {

GaussQ gq(long long re) { return GaussQ(QExt(re)); }
GaussQ gqi(long long im) { return GaussQ(QExt(0), QExt(im)); }

// ---- classical bases ------------------------------------------------------

std::vector<CMatrix> su_basis(std::size_t n) {
    std::vector<CMatrix> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            CMatrix a(n);
            a.at(i, j) = gq(1);
            a.at(j, i) = gq(-1);
            out.push_back(a);
            CMatrix s(n);
            s.at(i, j) = gqi(1);
            s.at(j, i) = gqi(1);
            out.push_back(s);
        }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        CMatrix d(n);
        d.at(k, k) = gqi(1);
        d.at(k + 1, k + 1) = gqi(-1);
        out.push_back(d);
    }
    return out;
}

std::vector<CMatrix> u_basis(std::size_t n) {
    auto out = su_basis(n);
    CMatrix id(n);
    for (std::size_t i = 0; i < n; ++i) id.at(i, i) = gqi(1);
    out.push_back(id);
    return out;
}

std::vector<CMatrix> so_basis(std::size_t n) {
    std::vector<CMatrix> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            CMatrix a(n);
            a.at(i, j) = gq(1);
            a.at(j, i) = gq(-1);
            out.push_back(a);
        }
    return out;
}

// quaternion units as 2x2 complex blocks: a+bi+cj+dk ->
// [[a+bi, c+di], [-c+di, a-bi]]
CMatrix quat_block(std::size_t nslots, std::size_t r, std::size_t c, int unit_id) {
    CMatrix m(2 * nslots);
    std::size_t R = 2 * r, C = 2 * c;
    switch (unit_id) {
        case 0:  // 1
            m.at(R, C) = gq(1);
            m.at(R + 1, C + 1) = gq(1);
            break;
        case 1:  // i
            m.at(R, C) = gqi(1);
            m.at(R + 1, C + 1) = gqi(-1);
            break;
        case 2:  // j
            m.at(R, C + 1) = gq(1);
            m.at(R + 1, C) = gq(-1);
            break;
        case 3:  // k
            m.at(R, C + 1) = gqi(1);
            m.at(R + 1, C) = gqi(1);
            break;
        default:
            throw std::logic_error("quat_block: bad unit");
    }
    return m;
}

// sp(n) as quaternion anti-Hermitian matrices inside su(2n)
std::vector<CMatrix> sp_basis(std::size_t n) {
    std::vector<CMatrix> out;
    for (std::size_t k = 0; k < n; ++k)
        for (int u : {1, 2, 3}) out.push_back(quat_block(n, k, k, u));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
            // q at (k,l) and -conj(q) at (l,k)
            for (int u : {0, 1, 2, 3}) {
                CMatrix m = quat_block(n, k, l, u);
                CMatrix lower = quat_block(n, l, k, u);
                if (u == 0) lower = -lower;  // -conj(1) = -1; -conj(i,j,k) = i,j,k
                out.push_back(m + lower);
            }
        }
    return out;
}

// ---- principal su(2) inside sp(2) ------------------------------------------
// Built from the symmetric-cube action of su(2) in an orthonormal monomial
// basis (weights 3/2, 1/2, -1/2, -3/2), permuted into the requested slot
// order and phase-adjusted into the quaternion convention.
std::array<CMatrix, 3> principal_su2_in_sp2(const std::array<int, 4>& order) {
    QExt r3 = QExt::sqrt3();
    QExt h = QExt::half();
    QExt r3h = r3 * h;

    auto sym_cube = [&](const std::array<std::array<GaussQ, 2>, 2>& x) {
        CMatrix d(4);
        GaussQ x11 = x[0][0], x12 = x[0][1], x21 = x[1][0], x22 = x[1][1];
        GaussQ s3(r3);
        d.at(0, 0) = gq(3) * x11;
        d.at(0, 1) = s3 * x12;
        d.at(1, 0) = s3 * x21;
        d.at(1, 1) = gq(2) * x11 + x22;
        d.at(1, 2) = gq(2) * x12;
        d.at(2, 1) = gq(2) * x21;
        d.at(2, 2) = x11 + gq(2) * x22;
        d.at(2, 3) = s3 * x12;
        d.at(3, 2) = s3 * x21;
        d.at(3, 3) = gq(3) * x22;
        return d;
    };
    GaussQ ih(QExt(0), h), mih(QExt(0), -h), hh(h), mhh(-h);
    CMatrix Z = sym_cube({{{ih, GaussQ()}, {GaussQ(), mih}}});
    CMatrix X = sym_cube({{{GaussQ(), hh}, {mhh, GaussQ()}}});
    CMatrix Y = sym_cube({{{GaussQ(), ih}, {ih, GaussQ()}}});

    auto permute = [&](const CMatrix& m) {
        CMatrix out(4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                out.at(r, c) = m.at(static_cast<std::size_t>(order[r]),
                                    static_cast<std::size_t>(order[c]));
        return out;
    };
    Z = permute(Z);
    X = permute(X);
    Y = permute(Y);

    // quaternionic condition: M = S conj(M) S^T with S = diag([[0,1],[-1,0]])
    CMatrix S(4);
    S.at(0, 1) = gq(1);
    S.at(1, 0) = gq(-1);
    S.at(2, 3) = gq(1);
    S.at(3, 2) = gq(-1);
    auto conj_mat = [](const CMatrix& m) {
        CMatrix out(m.size());
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < m.size(); ++c) out.at(r, c) = m.at(r, c).conj();
        return out;
    };
    auto in_sp = [&](const CMatrix& m) {
        return m == S * conj_mat(m) * S.conj_transpose();
    };

    // phase-adjust the basis: e_k -> phi_k e_k with phi in {1, i, -1, -i}
    std::array<GaussQ, 4> phases{gq(1), gqi(1), gq(-1), gqi(-1)};
    for (int p1 = 0; p1 < 4; ++p1)
        for (int p2 = 0; p2 < 4; ++p2)
            for (int p3 = 0; p3 < 4; ++p3) {
                std::array<GaussQ, 4> phi{gq(1), phases[static_cast<std::size_t>(p1)],
                                          phases[static_cast<std::size_t>(p2)],
                                          phases[static_cast<std::size_t>(p3)]};
                auto apply = [&](const CMatrix& m) {
                    CMatrix out(4);
                    for (std::size_t r = 0; r < 4; ++r)
                        for (std::size_t c = 0; c < 4; ++c)
                            out.at(r, c) = phi[r] * m.at(r, c) * phi[c].conj();
                    return out;
                };
                CMatrix Zp = apply(Z), Xp = apply(X), Yp = apply(Y);
                if (in_sp(Zp) && in_sp(Xp) && in_sp(Yp)) return {Zp, Xp, Yp};
            }
    throw std::logic_error("principal_su2_in_sp2: no admissible phase choice");
}

CMatrix embed(const CMatrix& small, std::size_t n, std::size_t offset) {
    CMatrix out(n);
    for (std::size_t r = 0; r < small.size(); ++r)
        for (std::size_t c = 0; c < small.size(); ++c)
            out.at(offset + r, offset + c) = small.at(r, c);
    return out;
}

MatrixAlgebra finalize(MatrixAlgebra model) {
    model.m_basis = orth_complement(model);
    return model;
}

} // namespace

std::vector<std::string> model_catalog() {
    return {"su(3)/su(2)",        "su(4)/su(3)",     "su(3)/s(u(2)u(1))",
            "su(4)/s(u(3)u(1))",  "u(2)/u(1)",       "u(3)/u(2)",
            "sp(2)/sp(1)",        "sp(3)/sp(2)",     "so(4)/so(3)",
            "so(5)/so(4)",        "sp(2)/su(2)-berger", "su(5)/sp(2)+R",
            "su(3)/t",            "spin9-vt-family"};
}

MatrixAlgebra build_model(const std::string& name) {
    MatrixAlgebra model;
    model.name = name;

    auto starts_with = [&](const char* p) { return name.rfind(p, 0) == 0; };

    if (starts_with("su(") && name.find("/su(") != std::string::npos) {
        std::size_t n = static_cast<std::size_t>(std::stoi(name.substr(3)));
        if (n < 2) throw std::invalid_argument("build_model: su(n)/su(n-1) needs n >= 2");
        model.dim_ambient = n;
        model.g_basis = su_basis(n);
        for (const auto& b : su_basis(n - 1)) model.h_basis.push_back(embed(b, n, 0));
        return finalize(std::move(model));
    }
    if (starts_with("su(") && name.find("/s(u(") != std::string::npos) {
        std::size_t n = static_cast<std::size_t>(std::stoi(name.substr(3)));
        model.dim_ambient = n;
        model.g_basis = su_basis(n);
        for (const auto& b : su_basis(n - 1)) model.h_basis.push_back(embed(b, n, 0));
        CMatrix center(n);
        for (std::size_t i = 0; i + 1 < n; ++i) center.at(i, i) = gqi(1);
        center.at(n - 1, n - 1) = gqi(-(static_cast<long long>(n) - 1));
        model.h_basis.push_back(center);
        return finalize(std::move(model));
    }
    if (starts_with("u(")) {
        std::size_t n = static_cast<std::size_t>(std::stoi(name.substr(2)));
        if (n < 1) throw std::invalid_argument("build_model: u(n)/u(n-1) needs n >= 1");
        model.dim_ambient = n;
        model.g_basis = u_basis(n);
        if (n >= 2)
            for (const auto& b : u_basis(n - 1)) model.h_basis.push_back(embed(b, n, 0));
        return finalize(std::move(model));
    }
    if (name == "sp(2)/su(2)-berger") {
        model.dim_ambient = 4;
        model.g_basis = sp_basis(2);
        auto triple = principal_su2_in_sp2({0, 3, 1, 2});  // weights (3/2,-3/2,1/2,-1/2)
        for (auto& m : triple) model.h_basis.push_back(std::move(m));
        return finalize(std::move(model));
    }
    if (starts_with("sp(")) {
        std::size_t n = static_cast<std::size_t>(std::stoi(name.substr(3)));
        if (n < 1) throw std::invalid_argument("build_model: sp(n)/sp(n-1) needs n >= 1");
        model.dim_ambient = 2 * n;
        model.g_basis = sp_basis(n);
        if (n >= 2) {
            // sp(n-1) occupies the leading quaternion slots
            for (const auto& b : sp_basis(n - 1)) model.h_basis.push_back(embed(b, 2 * n, 0));
        }
        return finalize(std::move(model));
    }
    if (starts_with("so(")) {
        std::size_t n = static_cast<std::size_t>(std::stoi(name.substr(3)));
        if (n < 2) throw std::invalid_argument("build_model: so(n)/so(n-1) needs n >= 2");
        model.dim_ambient = n;
        model.g_basis = so_basis(n);
        // so(n-1) on the trailing coordinates; m is the first row/column
        for (const auto& b : so_basis(n - 1)) model.h_basis.push_back(embed(b, n, 1));
        return finalize(std::move(model));
    }
    if (name == "su(5)/sp(2)+R") {
        model.dim_ambient = 5;
        model.g_basis = su_basis(5);
        for (const auto& b : sp_basis(2)) model.h_basis.push_back(embed(b, 5, 0));
        CMatrix center(5);
        for (std::size_t i = 0; i < 4; ++i) center.at(i, i) = gqi(1);
        center.at(4, 4) = gqi(-4);
        model.h_basis.push_back(center);
        return finalize(std::move(model));
    }
    if (name == "su(3)/t") {
        model.dim_ambient = 3;
        model.g_basis = su_basis(3);
        CMatrix d1(3), d2(3);
        d1.at(0, 0) = gqi(1);
        d1.at(1, 1) = gqi(-1);
        d2.at(1, 1) = gqi(1);
        d2.at(2, 2) = gqi(-1);
        model.h_basis = {d1, d2};
        return finalize(std::move(model));
    }
    if (name == "spin9-vt-family") {
        model.dim_ambient = 9;
        model.g_basis = so_basis(9);
        // no h basis: only the printed v(t) family is used for this space
        model.m_basis.clear();
        return model;
    }
    throw std::invalid_argument("build_model: unsupported name '" + name + "'");
}

MatrixAlgebra build_so5_core_model() {
    MatrixAlgebra model;
    model.name = "so(5)-core";
    model.dim_ambient = 5;
    model.g_basis = so_basis(5);
    auto unit_a = [&](std::size_t i, std::size_t j) {
        CMatrix m(5);
        m.at(i, j) = gq(1);
        m.at(j, i) = gq(-1);
        return m;
    };
    // so(3) on the coordinates {0, 3, 4}
    model.h_basis = {unit_a(0, 3), unit_a(0, 4), unit_a(3, 4)};
    return finalize(std::move(model));
}

MatrixAlgebra build_sp3_endgame_model() {
    MatrixAlgebra model;
    model.name = "sp(3)-endgame";
    model.dim_ambient = 6;
    model.g_basis = sp_basis(3);
    // principal su(2) of the sp(2) block on slots (0,1), with the semisimple
    // direction carrying weights (-1/2, +1/2) on slot 0 and (3/2, -3/2) on
    // slot 1, plus the sp(1) of slot 2.
    auto triple = principal_su2_in_sp2({2, 1, 0, 3});  // weights (-1/2, ... ) order
    for (auto& m : triple) model.h_basis.push_back(embed(m, 6, 0));
    for (int u : {1, 2, 3}) model.h_basis.push_back(quat_block(3, 2, 2, u));
    return finalize(std::move(model));
}

CMatrix model_family_vt(const std::string& name, const Rational& t) {
    GaussQ tq{QExt(t)};
    auto starts_with = [&](const char* p) { return name.rfind(p, 0) == 0; };

    if (starts_with("su(") && name.find("/su(") != std::string::npos) {
        std::size_t n = static_cast<std::size_t>(std::stoi(name.substr(3)));
        CMatrix v(n);
        for (std::size_t i = 0; i + 1 < n; ++i) v.at(i, i) = gqi(-1);
        v.at(n - 1, n - 1) = gqi(static_cast<long long>(n) - 1);
        v.at(n - 2, n - 1) = tq;
        v.at(n - 1, n - 2) = -tq;
        return v;
    }
    if (starts_with("u(")) {
        std::size_t n = static_cast<std::size_t>(std::stoi(name.substr(2)));
        CMatrix v(n);
        v.at(n - 1, n - 1) = gqi(1);
        if (n >= 2) {
            v.at(n - 2, n - 1) = tq;
            v.at(n - 1, n - 2) = -tq;
        }
        return v;
    }
    if (name == "sp(2)/su(2)-berger") {
        // quaternion [[i, t j], [t j, -3i]]
        CMatrix v = quat_block(2, 0, 0, 1) + (GaussQ(QExt(-3)) * quat_block(2, 1, 1, 1));
        CMatrix off = quat_block(2, 0, 1, 2) + quat_block(2, 1, 0, 2);
        return v + (tq * off);
    }
    if (starts_with("sp(")) {
        std::size_t n = static_cast<std::size_t>(std::stoi(name.substr(3)));
        if (n < 2) throw std::invalid_argument("model_family_vt: sp(n)/sp(n-1) needs n >= 2");
        CMatrix v = quat_block(n, n - 1, n - 1, 1);
        CMatrix off = quat_block(n, n - 2, n - 1, 2) + quat_block(n, n - 1, n - 2, 2);
        return v + (tq * off);
    }
    if (name == "su(5)/sp(2)+R") {
        CMatrix v(5);
        v.at(0, 0) = gqi(1);
        v.at(1, 1) = gqi(1);
        v.at(2, 2) = gqi(-1);
        v.at(3, 3) = gqi(-1);
        v.at(3, 4) = tq;
        v.at(4, 3) = -tq;
        return v;
    }
    if (name == "spin9-vt-family") {
        CMatrix v(9);
        auto put = [&](std::size_t i, std::size_t j, GaussQ w) {
            v.at(i, j) = w;
            v.at(j, i) = -w;
        };
        put(0, 1, tq);
        put(1, 2, gq(1));
        put(3, 4, gq(1));
        put(5, 6, gq(1));
        put(7, 8, gq(1));
        return v;
    }
    throw std::invalid_argument("model_family_vt: no family for '" + name + "'");
}

namespace {

bool has_vt_family(const std::string& name) {
    if (name == "sp(2)/su(2)-berger" || name == "su(5)/sp(2)+R" ||
        name == "spin9-vt-family")
        return true;
    if (name.rfind("su(", 0) == 0 && name.find("/su(") != std::string::npos) return true;
    if (name.rfind("u(", 0) == 0) return true;
    if (name.rfind("sp(", 0) == 0) return true;
    return false;
}

} // namespace

ConditionRReport condition_r_report(const std::string& name, const std::vector<Rational>& ts) {
    ConditionRReport rep;
    rep.space = name;
    rep.samples = ts;

    if (!has_vt_family(name)) {
        // no printed family: decide by sampled m-pairs
        MatrixAlgebra model = build_model(name);
        bool dep = random_m_pairs_dependent(model, 100, 20240809u);
        rep.fails_condition_r = !dep;
        return rep;
    }
    if (name == "spin9-vt-family") rep.family_unverified = true;

    CMatrix v0 = model_family_vt(name, Rational(0));
    for (const auto& t : ts) {
        if (t.is_zero()) continue;
        CMatrix vt = model_family_vt(name, t);
        if (!seq_dependent(v0, vt)) rep.independent_at.push_back(t);
    }
    rep.fails_condition_r = !rep.independent_at.empty();
    return rep;
}

} // namespace nhf
