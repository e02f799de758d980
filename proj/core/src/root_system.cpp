#include "nhf/root_system.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nhf {

std::string type_name(TypeLabel t) {
    switch (t) {
        case TypeLabel::A: return "A";
        case TypeLabel::B: return "B";
        case TypeLabel::C: return "C";
        case TypeLabel::D: return "D";
        case TypeLabel::E: return "E";
        case TypeLabel::F: return "F";
        case TypeLabel::G: return "G";
    }
    return "?";
}

std::size_t RootSystem::rank() const {
    std::size_t r = 0;
    for (const auto& f : factors) r += static_cast<std::size_t>(f.rank);
    return r;
}

int RootSystem::index_of_root(const ExactVector& v) const {
    auto it = std::lower_bound(roots.begin(), roots.end(), v);
    if (it != roots.end() && *it == v) return static_cast<int>(it - roots.begin());
    return -1;
}

int RootSystem::plane_index(const ExactVector& v) const {
    ExactVector c = plane_canonical(v);
    auto it = std::lower_bound(plane_reps.begin(), plane_reps.end(), c);
    if (it != plane_reps.end() && *it == c) return static_cast<int>(it - plane_reps.begin());
    return -1;
}

std::string RootSystem::name() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "+";
        os << factors[i].str();
    }
    return os.str();
}

namespace {

ExactVector basis_vec(std::size_t dim, std::size_t i, QExt c) {
    ExactVector v(dim);
    v[i] = std::move(c);
    return v;
}

void add_pm(std::vector<ExactVector>& out, const ExactVector& v) {
    out.push_back(v);
    out.push_back(-v);
}

} // namespace

void RootSystem::finish() {
    std::vector<std::pair<ExactVector, int>> tagged;
    tagged.reserve(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
        tagged.emplace_back(roots[i], factor_of_root.empty() ? 0 : factor_of_root[i]);
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    roots.clear();
    factor_of_root.clear();
    for (auto& [v, f] : tagged) {
        roots.push_back(v);
        factor_of_root.push_back(f);
    }

    plane_reps.clear();
    for (const auto& r : roots) {
        ExactVector c = plane_canonical(r);
        if (c == r) plane_reps.push_back(c);
    }
    std::sort(plane_reps.begin(), plane_reps.end());
    plane_of_root.assign(roots.size(), -1);
    factor_of_plane.assign(plane_reps.size(), 0);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        ExactVector c = plane_canonical(roots[i]);
        auto it = std::lower_bound(plane_reps.begin(), plane_reps.end(), c);
        int pi = static_cast<int>(it - plane_reps.begin());
        plane_of_root[i] = pi;
        factor_of_plane[pi] = factor_of_root[i];
    }

    gram_.assign(plane_reps.size(), std::vector<Rational>(plane_reps.size()));
    for (std::size_t i = 0; i < plane_reps.size(); ++i) {
        for (std::size_t j = i; j < plane_reps.size(); ++j) {
            QExt ip = inner(plane_reps[i], plane_reps[j]);
            if (!ip.is_rational())
                throw std::logic_error("root presentation: irrational root inner product");
            gram_[i][j] = ip.rational_part();
            gram_[j][i] = gram_[i][j];
        }
    }
}

RootSystem RootSystem::build(TypeLabel type, int n) {
    RootSystem rs;
    rs.factors = {Factor{type, n}};
    QExt one(1), two(2), h = QExt::half();
    QExt r3 = QExt::sqrt3(), r2 = QExt::sqrt2();
    auto& R = rs.roots;

    switch (type) {
        case TypeLabel::A: {
            if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
            rs.ambient_dim = static_cast<std::size_t>(n) + 1;
            for (std::size_t i = 0; i < rs.ambient_dim; ++i)
                for (std::size_t j = i + 1; j < rs.ambient_dim; ++j) {
                    ExactVector v(rs.ambient_dim);
                    v[i] = one;
                    v[j] = -one;
                    add_pm(R, v);
                }
            break;
        }
        case TypeLabel::B: {
            if (n < 1) throw std::invalid_argument("B_n needs n >= 1");
            rs.ambient_dim = static_cast<std::size_t>(n);
            for (std::size_t i = 0; i < rs.ambient_dim; ++i)
                add_pm(R, basis_vec(rs.ambient_dim, i, one));
            for (std::size_t i = 0; i < rs.ambient_dim; ++i)
                for (std::size_t j = i + 1; j < rs.ambient_dim; ++j)
                    for (int s : {1, -1}) {
                        ExactVector v(rs.ambient_dim);
                        v[i] = one;
                        v[j] = QExt(s);
                        add_pm(R, v);
                    }
            break;
        }
        case TypeLabel::C: {
            if (n < 1) throw std::invalid_argument("C_n needs n >= 1");
            rs.ambient_dim = static_cast<std::size_t>(n);
            for (std::size_t i = 0; i < rs.ambient_dim; ++i)
                add_pm(R, basis_vec(rs.ambient_dim, i, two));
            for (std::size_t i = 0; i < rs.ambient_dim; ++i)
                for (std::size_t j = i + 1; j < rs.ambient_dim; ++j)
                    for (int s : {1, -1}) {
                        ExactVector v(rs.ambient_dim);
                        v[i] = one;
                        v[j] = QExt(s);
                        add_pm(R, v);
                    }
            break;
        }
        case TypeLabel::D: {
            if (n < 2) throw std::invalid_argument("D_n needs n >= 2");
            rs.ambient_dim = static_cast<std::size_t>(n);
            for (std::size_t i = 0; i < rs.ambient_dim; ++i)
                for (std::size_t j = i + 1; j < rs.ambient_dim; ++j)
                    for (int s : {1, -1}) {
                        ExactVector v(rs.ambient_dim);
                        v[i] = one;
                        v[j] = QExt(s);
                        add_pm(R, v);
                    }
            break;
        }
        case TypeLabel::G: {
            if (n != 2) throw std::invalid_argument("G_2 has rank 2");
            rs.ambient_dim = 2;
            QExt r3h = r3 * h, th = QExt(Rational::of(3, 2));
            add_pm(R, ExactVector({r3, QExt(0)}));
            add_pm(R, ExactVector({QExt(0), one}));
            for (int s : {1, -1}) {
                add_pm(R, ExactVector({r3h, QExt(s) * th}));
                add_pm(R, ExactVector({r3h, QExt(s) * h}));
            }
            break;
        }
        case TypeLabel::F: {
            if (n != 4) throw std::invalid_argument("F_4 has rank 4");
            rs.ambient_dim = 4;
            for (std::size_t i = 0; i < 4; ++i) add_pm(R, basis_vec(4, i, one));
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j)
                    for (int s : {1, -1}) {
                        ExactVector v(4);
                        v[i] = one;
                        v[j] = QExt(s);
                        add_pm(R, v);
                    }
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    for (int s4 : {1, -1}) {
                        ExactVector v(4);
                        v[0] = h;
                        v[1] = QExt(s2) * h;
                        v[2] = QExt(s3) * h;
                        v[3] = QExt(s4) * h;
                        add_pm(R, v);
                    }
            break;
        }
        case TypeLabel::E: {
            if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
            rs.ambient_dim = static_cast<std::size_t>(n);
            std::size_t m = (n == 6) ? 5 : (n == 7 ? 6 : 8);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    for (int s : {1, -1}) {
                        ExactVector v(rs.ambient_dim);
                        v[i] = one;
                        v[j] = QExt(s);
                        add_pm(R, v);
                    }
            if (n == 6) {
                // halves: (s1..s5)/2 + (sqrt3/2) t e6, #plus odd iff t = +1
                for (int mask = 0; mask < 32; ++mask) {
                    int plus = __builtin_popcount(static_cast<unsigned>(mask));
                    int t = (plus % 2 == 1) ? 1 : -1;
                    ExactVector v(6);
                    for (std::size_t i = 0; i < 5; ++i)
                        v[i] = (mask >> i) & 1 ? h : -h;
                    v[5] = QExt(t) * r3 * h;
                    R.push_back(v);
                }
            } else if (n == 7) {
                add_pm(R, basis_vec(7, 6, r2));
                // halves: (s1..s6)/2 +- (sqrt2/2) e7 with even #plus
                for (int mask = 0; mask < 64; ++mask) {
                    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
                    for (int t : {1, -1}) {
                        ExactVector v(7);
                        for (std::size_t i = 0; i < 6; ++i)
                            v[i] = (mask >> i) & 1 ? h : -h;
                        v[6] = QExt(t) * r2 * h;
                        R.push_back(v);
                    }
                }
            } else {
                for (int mask = 0; mask < 256; ++mask) {
                    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
                    ExactVector v(8);
                    for (std::size_t i = 0; i < 8; ++i)
                        v[i] = (mask >> i) & 1 ? h : -h;
                    R.push_back(v);
                }
            }
            break;
        }
    }
    rs.factor_of_root.assign(rs.roots.size(), 0);
    rs.finish();
    return rs;
}

RootSystem RootSystem::direct_sum(const RootSystem& a, const RootSystem& b) {
    RootSystem rs;
    rs.factors = a.factors;
    rs.factors.insert(rs.factors.end(), b.factors.begin(), b.factors.end());
    rs.ambient_dim = a.ambient_dim + b.ambient_dim;
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
        ExactVector v(rs.ambient_dim);
        for (std::size_t k = 0; k < a.ambient_dim; ++k) v[k] = a.roots[i][k];
        rs.roots.push_back(v);
        rs.factor_of_root.push_back(a.factor_of_root[i]);
    }
    int shift = static_cast<int>(a.factors.size());
    for (std::size_t i = 0; i < b.roots.size(); ++i) {
        ExactVector v(rs.ambient_dim);
        for (std::size_t k = 0; k < b.ambient_dim; ++k) v[a.ambient_dim + k] = b.roots[i][k];
        rs.roots.push_back(v);
        rs.factor_of_root.push_back(b.factor_of_root[i] + shift);
    }
    rs.finish();
    return rs;
}

SumDiff sum_diff_status(const RootSystem& rs, const ExactVector& a, const ExactVector& b) {
    if (!rs.is_root(a) || !rs.is_root(b))
        throw std::invalid_argument("sum_diff_status: inputs must be roots");
    bool s = rs.is_root(a + b);
    bool d = rs.is_root(a - b);
    if (s && d) return SumDiff::both;
    if (s) return SumDiff::sum_only;
    if (d) return SumDiff::diff_only;
    return SumDiff::neither;
}

AngleClass angle_class(const ExactVector& a, const ExactVector& b) {
    QExt aa = norm_sq(a), bb = norm_sq(b);
    if (aa.is_zero() || bb.is_zero()) throw std::invalid_argument("angle_class: zero vector");
    QExt ab = inner(a, b);
    QExt four_cos = QExt(4) * ab * ab / (aa * bb);
    QExt ratio = aa / bb;
    if (!four_cos.is_rational() || !ratio.is_rational())
        throw std::logic_error("angle_class: expected rational invariants");
    return AngleClass{four_cos.rational_part(), ratio.rational_part()};
}

ExactVector reflect(const RootSystem& rs, const ExactVector& alpha, const ExactVector& v) {
    if (!rs.is_root(alpha)) throw std::invalid_argument("reflect: alpha must be a root");
    return reflect_vector(alpha, v);
}

std::vector<int> close_planes(const RootSystem& rs, std::vector<int> planes) {
    std::vector<char> in(rs.plane_reps.size(), 0);
    for (int p : planes) in[static_cast<std::size_t>(p)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cur;
        for (std::size_t p = 0; p < in.size(); ++p)
            if (in[p]) cur.push_back(static_cast<int>(p));
        for (std::size_t x = 0; x < cur.size(); ++x) {
            for (std::size_t y = x + 1; y < cur.size(); ++y) {
                const ExactVector& a = rs.plane_reps[static_cast<std::size_t>(cur[x])];
                const ExactVector& b = rs.plane_reps[static_cast<std::size_t>(cur[y])];
                for (const ExactVector& s : {a + b, a - b}) {
                    int pi = rs.plane_index(s);
                    if (pi >= 0 && !in[static_cast<std::size_t>(pi)]) {
                        in[static_cast<std::size_t>(pi)] = 1;
                        changed = true;
                    }
                }
            }
        }
    }
    std::vector<int> out;
    for (std::size_t p = 0; p < in.size(); ++p)
        if (in[p]) out.push_back(static_cast<int>(p));
    return out;
}

bool planes_closed(const RootSystem& rs, const std::vector<int>& planes) {
    std::vector<char> in(rs.plane_reps.size(), 0);
    for (int p : planes) in[static_cast<std::size_t>(p)] = 1;
    for (std::size_t x = 0; x < planes.size(); ++x)
        for (std::size_t y = x + 1; y < planes.size(); ++y) {
            const ExactVector& a = rs.plane_reps[static_cast<std::size_t>(planes[x])];
            const ExactVector& b = rs.plane_reps[static_cast<std::size_t>(planes[y])];
            for (const ExactVector& s : {a + b, a - b}) {
                int pi = rs.plane_index(s);
                if (pi >= 0 && !in[static_cast<std::size_t>(pi)]) return false;
            }
        }
    return true;
}

} // namespace nhf
