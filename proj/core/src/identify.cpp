#include "nhf/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nhf {

std::string TypeDecomp::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors) {
        if (!first) os << "+";
        os << f.str();
        first = false;
    }
    for (int i = 0; i < torus_corank; ++i) {
        if (!first) os << "+";
        os << "R";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<Factor> canonical_factors(const std::vector<Factor>& fs) {
    std::vector<Factor> out;
    for (const auto& f : fs) {
        Factor g = f;
        if ((g.type == TypeLabel::B || g.type == TypeLabel::C) && g.rank == 1)
            g = {TypeLabel::A, 1};
        if (g.type == TypeLabel::C && g.rank == 2) g = {TypeLabel::B, 2};
        if (g.type == TypeLabel::D && g.rank == 2) {
            out.push_back({TypeLabel::A, 1});
            out.push_back({TypeLabel::A, 1});
            continue;
        }
        if (g.type == TypeLabel::D && g.rank == 3) g = {TypeLabel::A, 3};
        out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t exact_rank(const std::vector<ExactVector>& vs) {
    if (vs.empty()) return 0;
    std::vector<ExactVector> rows = vs;
    std::size_t dim = rows[0].dim();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        QExt inv = rows[rank][col].inverse();
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            QExt f = rows[r][col] * inv;
            for (std::size_t c = col; c < dim; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

namespace {

Factor classify_component(const std::vector<ExactVector>& comp) {
    std::size_t r = exact_rank(comp);
    std::size_t N = comp.size();

    // length classes
    std::vector<QExt> lens;
    for (const auto& v : comp) {
        QExt l = norm_sq(v);
        bool seen = false;
        for (const auto& x : lens) seen = seen || x == l;
        if (!seen) lens.push_back(l);
    }
    std::sort(lens.begin(), lens.end());

    auto fail = [&](const char* why) -> Factor {
        throw std::invalid_argument(std::string("identify_type: ") + why);
    };

    if (lens.size() == 1) {
        if (N == r * (r + 1)) return {TypeLabel::A, static_cast<int>(r)};
        if (r >= 4 && N == 2 * r * (r - 1)) return {TypeLabel::D, static_cast<int>(r)};
        if (r == 6 && N == 72) return {TypeLabel::E, 6};
        if (r == 7 && N == 126) return {TypeLabel::E, 7};
        if (r == 8 && N == 240) return {TypeLabel::E, 8};
        return fail("unrecognized simply-laced component");
    }
    if (lens.size() == 2) {
        QExt ratio = lens[1] / lens[0];
        std::size_t n_short = 0;
        for (const auto& v : comp)
            if (norm_sq(v) == lens[0]) ++n_short;
        std::size_t n_long = N - n_short;
        if (ratio == QExt(2)) {
            if (r == 2 && N == 8) return {TypeLabel::B, 2};
            if (r == 4 && N == 48 && n_short == 24) return {TypeLabel::F, 4};
            if (N == 2 * r * r && n_short == 2 * r) return {TypeLabel::B, static_cast<int>(r)};
            if (N == 2 * r * r && n_long == 2 * r) return {TypeLabel::C, static_cast<int>(r)};
            return fail("unrecognized two-length component (ratio 2)");
        }
        if (ratio == QExt(3)) {
            if (r == 2 && N == 12) return {TypeLabel::G, 2};
            return fail("unrecognized two-length component (ratio 3)");
        }
        return fail("length ratio outside the crystallographic menu");
    }
    return fail("more than two root lengths in one component");
}

} // namespace

TypeDecomp identify_type(const std::vector<ExactVector>& symmetric_roots,
                         std::size_t ambient_rank) {
    std::vector<ExactVector> sorted = symmetric_roots;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    auto contains = [&](const ExactVector& v) {
        return std::binary_search(sorted.begin(), sorted.end(), v);
    };
    for (const auto& v : sorted) {
        if (v.is_zero()) throw std::invalid_argument("identify_type: zero vector in set");
        if (!contains(-v)) throw std::invalid_argument("identify_type: set not symmetric");
    }

    // planes
    std::vector<ExactVector> reps;
    for (const auto& v : sorted)
        if (plane_canonical(v) == v) reps.push_back(v);

    // crystallographic validation and reflection closure
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            if (!cartan_pair(reps[i], reps[j]).compatible)
                throw std::invalid_argument("identify_type: non-crystallographic pair");
            if (!contains(reflect_vector(reps[i], reps[j])))
                throw std::invalid_argument("identify_type: set not reflection-closed");
        }

    // connected components of the non-orthogonality graph
    std::vector<int> comp(reps.size(), -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < reps.size(); ++v) {
                if (comp[v] >= 0) continue;
                if (!inner(reps[u], reps[v]).is_zero()) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
            }
        }
        ++ncomp;
    }

    TypeDecomp out;
    std::size_t span_rank = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<ExactVector> croots;
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (comp[i] == c) {
                croots.push_back(reps[i]);
                croots.push_back(-reps[i]);
            }
        Factor f = classify_component(croots);
        span_rank += static_cast<std::size_t>(f.rank);
        out.factors.push_back(f);
    }
    if (span_rank > ambient_rank)
        throw std::invalid_argument("identify_type: rank exceeds ambient rank");
    out.torus_corank = static_cast<int>(ambient_rank - span_rank);
    out.factors = canonical_factors(out.factors);
    return out;
}

TypeDecomp identify_type(const RootSystem& rs, const std::vector<int>& planes) {
    std::vector<ExactVector> roots;
    for (int p : planes) {
        roots.push_back(rs.plane_reps[static_cast<std::size_t>(p)]);
        roots.push_back(-rs.plane_reps[static_cast<std::size_t>(p)]);
    }
    return identify_type(roots, rs.rank());
}

std::string subset_signature(const RootSystem& rs, const std::vector<int>& planes) {
    std::ostringstream os;
    os << "n" << planes.size() << ";";

    std::vector<std::string> lens;
    for (int p : planes) lens.push_back(rs.plane_len_sq(p).str());
    std::sort(lens.begin(), lens.end());
    os << "L{";
    for (const auto& s : lens) os << s << ",";
    os << "};P{";

    std::vector<std::string> pairs;
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            const Rational& ab = rs.gram(planes[i], planes[j]);
            const Rational& aa = rs.plane_len_sq(planes[i]);
            const Rational& bb = rs.plane_len_sq(planes[j]);
            Rational fc = Rational(4) * ab * ab / (aa * bb);
            std::string l1 = aa.str(), l2 = bb.str();
            if (l2 < l1) std::swap(l1, l2);
            pairs.push_back(fc.str() + ":" + l1 + ":" + l2);
        }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& s : pairs) os << s << ",";
    os << "};T{" << identify_type(rs, planes).str() << "}";
    return os.str();
}

} // namespace nhf
