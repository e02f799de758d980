#include "nhf/corank_engine.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nhf {

namespace {

Rational rational_inner(const ExactVector& a, const ExactVector& b) {
    QExt ip = inner(a, b);
    if (!ip.is_rational())
        throw std::logic_error("seed signature: irrational root inner product");
    return ip.rational_part();
}

// Pair fingerprints from the rational plane Gram. Values are interned against
// the sorted set of +-Gram entries, which only depends on the root system, so
// signatures are reproducible across calls.
struct SeedProfiler {
    const RootSystem& rs;
    std::size_t n;
    std::vector<std::vector<std::uint32_t>> gid;  // id of gram(i,j)
    std::vector<std::uint32_t> neg;               // id of the negated value
    std::vector<Rational> values;                 // id -> value

    explicit SeedProfiler(const RootSystem& r) : rs(r), n(r.plane_reps.size()) {
        std::vector<Rational> vals;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                vals.push_back(rs.gram(static_cast<int>(i), static_cast<int>(j)));
                vals.push_back(-rs.gram(static_cast<int>(i), static_cast<int>(j)));
            }
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        values = vals;
        auto id_of = [&](const Rational& x) {
            return static_cast<std::uint32_t>(
                std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
        };
        gid.assign(n, std::vector<std::uint32_t>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                gid[i][j] = id_of(rs.gram(static_cast<int>(i), static_cast<int>(j)));
        neg.resize(vals.size());
        for (std::size_t k = 0; k < vals.size(); ++k) neg[k] = id_of(-vals[k]);
    }

    std::string class_key(int p, int q, int s) const {
        Rational aa = values[gid[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)]];
        Rational bb = values[gid[static_cast<std::size_t>(q)][static_cast<std::size_t>(q)]];
        Rational ab = Rational(s) * values[gid[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]];
        Rational fc = Rational(4) * ab * ab / (aa * bb);
        std::string sign = ab.sign() < 0 ? "-" : (ab.sign() > 0 ? "+" : "");
        std::string l1 = aa.str(), l2 = bb.str();
        if (l2 < l1) std::swap(l1, l2);
        int fa = rs.factor_of_plane[static_cast<std::size_t>(p)];
        int fb = rs.factor_of_plane[static_cast<std::size_t>(q)];
        std::size_t perp = 0;
        for (std::size_t d = 0; d < n; ++d) {
            if (values[gid[d][static_cast<std::size_t>(p)]].is_zero() &&
                values[gid[d][static_cast<std::size_t>(q)]].is_zero())
                perp += 2;
        }
        std::ostringstream os;
        os << "q" << sign << fc.str() << ";l" << l1 << "," << l2 << ";"
           << (fa == fb ? "same" : "cross") << ";p" << perp;
        return os.str();
    }

    // profile of the pair (rep_p, s * rep_q): multiset over signed roots d of
    // the unordered pair of triples (|d|^2, (d,.), |.|^2)
    std::string signature(int p, int q, int s, const std::string& klass) const {
        std::uint64_t aa = gid[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)];
        std::uint64_t bb = gid[static_cast<std::size_t>(q)][static_cast<std::size_t>(q)];
        std::map<std::uint64_t, int> counts;
        for (std::size_t d = 0; d < n; ++d) {
            std::uint64_t dd = gid[d][d];
            std::uint32_t da = gid[d][static_cast<std::size_t>(p)];
            std::uint32_t db = gid[d][static_cast<std::size_t>(q)];
            if (s < 0) db = neg[db];
            for (int flip : {0, 1}) {
                std::uint64_t xa = flip ? neg[da] : da;
                std::uint64_t xb = flip ? neg[db] : db;
                std::uint64_t t1 = (dd << 20) | (xa << 10) | aa;
                std::uint64_t t2 = (dd << 20) | (xb << 10) | bb;
                if (t2 < t1) std::swap(t1, t2);
                ++counts[(t1 << 32) | t2];
            }
        }
        std::ostringstream os;
        os << klass << "#" << std::hex;
        for (const auto& [k, c] : counts) os << k << "*" << c << ";";
        return os.str();
    }
};

} // namespace

std::string seed_class_key(const RootSystem& rs, const ExactVector& a, const ExactVector& b) {
    Rational aa = rational_inner(a, a), bb = rational_inner(b, b), ab = rational_inner(a, b);
    Rational fc = Rational(4) * ab * ab / (aa * bb);
    std::string sign = ab.sign() < 0 ? "-" : (ab.sign() > 0 ? "+" : "");
    std::string l1 = aa.str(), l2 = bb.str();
    if (l2 < l1) std::swap(l1, l2);
    int fa = rs.factor_of_plane[static_cast<std::size_t>(rs.plane_index(a))];
    int fb = rs.factor_of_plane[static_cast<std::size_t>(rs.plane_index(b))];
    std::size_t perp = 0;
    for (const auto& r : rs.roots)
        if (inner(r, a).is_zero() && inner(r, b).is_zero()) ++perp;
    std::ostringstream os;
    os << "q" << sign << fc.str() << ";l" << l1 << "," << l2 << ";"
       << (fa == fb ? "same" : "cross") << ";p" << perp;
    return os.str();
}

std::string seed_signature(const RootSystem& rs, const ExactVector& a, const ExactVector& b) {
    SeedProfiler prof(rs);
    int p = rs.plane_index(a);
    int q = rs.plane_index(b);
    if (p < 0 || q < 0) throw std::invalid_argument("seed_signature: inputs must be roots");
    int s = plane_canonical(b) == b ? 1 : -1;
    if (plane_canonical(a) != a) s = -s;  // global negation invariance
    return prof.signature(p, q, s, prof.class_key(p, q, s));
}

std::vector<CorankSeed> enumerate_seeds(const RootSystem& rs) {
    bool reducible = rs.factors.size() > 1;
    SeedProfiler prof(rs);

    struct Cand {
        std::size_t supp;
        int p, q, s;
    };
    std::vector<Cand> cands;
    for (std::size_t p = 0; p < rs.plane_reps.size(); ++p)
        for (std::size_t q = p + 1; q < rs.plane_reps.size(); ++q) {
            int fp = rs.factor_of_plane[p], fq = rs.factor_of_plane[q];
            if (reducible && fp == fq) continue;
            std::size_t supp = 0;
            for (std::size_t i = 0; i < rs.ambient_dim; ++i)
                if (!rs.plane_reps[p][i].is_zero() || !rs.plane_reps[q][i].is_zero()) ++supp;
            for (int s : {1, -1})
                cands.push_back({supp, static_cast<int>(p), static_cast<int>(q), s});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        if (x.supp != y.supp) return x.supp < y.supp;
        if (x.p != y.p) return x.p < y.p;
        if (x.q != y.q) return x.q < y.q;
        return x.s > y.s;
    });

    std::vector<CorankSeed> seeds;
    std::set<std::string> seen;
    for (const auto& c : cands) {
        std::string klass = prof.class_key(c.p, c.q, c.s);
        std::string sig = prof.signature(c.p, c.q, c.s, klass);
        if (!seen.insert(sig).second) continue;
        CorankSeed seed;
        int fa = rs.factor_of_plane[static_cast<std::size_t>(c.p)];
        int fb = rs.factor_of_plane[static_cast<std::size_t>(c.q)];
        seed.kind = (fa == fb) ? SeedKind::CaseIII : SeedKind::CaseII;
        seed.alpha = rs.plane_reps[static_cast<std::size_t>(c.p)];
        seed.beta = c.s > 0 ? rs.plane_reps[static_cast<std::size_t>(c.q)]
                            : -rs.plane_reps[static_cast<std::size_t>(c.q)];
        seed.z = seed.alpha - seed.beta;
        seed.klass = std::move(klass);
        seed.signature = std::move(sig);
        seeds.push_back(std::move(seed));
    }
    std::sort(seeds.begin(), seeds.end(),
              [](const CorankSeed& x, const CorankSeed& y) { return x.klass < y.klass; });

    // Case I seeds from equal-rank survivors whose subsystem leaves a central
    // torus direction; zero center corank is rejected here. The E-series has
    // no equal-rank pairs at all, so it contributes no Case I seeds.
    if (rs.factors.size() == 1 && rs.factors[0].type != TypeLabel::E) {
        EqualRankReport er = classify_equal_rank(rs);
        std::set<std::string> k_seen;
        for (const auto& res : er.results) {
            if (!res.verdict.pass()) continue;
            if (res.candidate.h_type.torus_corank < 1) continue;
            if (!k_seen.insert(res.candidate.signature).second) continue;
            CorankSeed seed;
            seed.kind = SeedKind::CaseI;
            seed.k_planes = res.candidate.h_planes;
            seed.k_type = res.candidate.h_type;
            seed.klass = "caseI;k=" + res.candidate.h_type.str();
            seed.signature = "caseI#" + res.candidate.signature;
            seeds.push_back(std::move(seed));
        }
    }

    for (std::size_t i = 0; i < seeds.size(); ++i) {
        std::ostringstream os;
        os << rs.name() << ":c" << i;
        seeds[i].id = os.str();
    }
    return seeds;
}

} // namespace nhf
