#include "nhf/corank_engine.hpp"

#include "linalg_qext.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nhf {

namespace {

// Saturation driver. Each rule method performs at most one batch of
// applications and reports whether the state changed; the first contradiction
// wins. Rules only ever move labels U -> {H,M} and grow h_roots/eliminated,
// so the loop terminates.
class Engine {
public:
    Engine(CaseState& st) : s(st), rs(*st.rs) {
        std::vector<ExactVector> troots(rs.roots.begin(), rs.roots.end());
        tbasis_ = detail::row_space_basis(troots);
    }

    CaseVerdict run(const SaturateOptions& opt) {
        std::vector<int> order = opt.rule_order;
        if (order.empty()) order = {0, 1, 2, 3, 4, 5, 6, 7, 8};
        bool changed = true;
        while (changed && !done) {
            changed = false;
            for (int r : order) {
                if (done) break;
                bool step = false;
                switch (r) {
                    case 0: step = rule_orth_torus_root(); break;
                    case 1: step = rule_axis_plane(); break;
                    case 2: step = rule_crystal_elim(); break;
                    case 3: step = rule_acute_pair(); break;
                    case 4: step = rule_bracket_transport(); break;
                    case 5: step = rule_reduction(); break;
                    case 6: step = rule_flat_split(); break;
                    case 7: step = rule_orth_m_plane(); break;
                    case 8: step = rule_carrier_and_proportional(); break;
                }
                if (step) {
                    changed = true;
                    break;  // restart from the highest-priority rule
                }
            }
        }
        if (!done) finish_saturated();
        CaseVerdict v = *done;
        v.trace = s.trace;
        return v;
    }

private:
    CaseState& s;
    const RootSystem& rs;
    std::optional<CaseVerdict> done;
    std::vector<ExactVector> tbasis_;            // basis of the Cartan (root span)
    std::set<std::pair<int, int>> flat_checked_; // monotone: safe to skip
    std::size_t rev_ = 0;                        // bumped on every state change
    std::size_t reduction_rev_ = static_cast<std::size_t>(-1);
    std::set<std::pair<int, int>> acute_near_miss_;  // span hypothesis unmet

    // -- helpers ------------------------------------------------------------

    void contradiction(const std::string& rule, const std::string& witness) {
        CaseVerdict v;
        v.status = CaseVerdict::Status::Contradiction;
        v.rule = rule;
        v.witness = witness;
        done = v;
        s.trace.push_back({rule, "contradiction: " + witness});
    }

    const ExactVector& rep(int p) const {
        return rs.plane_reps[static_cast<std::size_t>(p)];
    }

    bool mark_m(int p, const std::string& rule, const std::string& why) {
        auto& l = s.label[static_cast<std::size_t>(p)];
        if (l == PlaneLabel::M) return false;
        if (l == PlaneLabel::H) {
            contradiction(rule, "plane " + rep(p).str() + " forced both into h and m");
            return true;
        }
        l = PlaneLabel::M;
        ++rev_;
        s.trace.push_back({rule, "plane " + rep(p).str() + " in m (" + why + ")"});
        return true;
    }

    bool mark_h_plane(int p, const std::string& rule, const std::string& why) {
        auto& l = s.label[static_cast<std::size_t>(p)];
        if (l == PlaneLabel::H) return false;
        if (l == PlaneLabel::M) {
            contradiction(rule, "plane " + rep(p).str() + " forced both into m and h");
            return true;
        }
        l = PlaneLabel::H;
        ++rev_;
        s.trace.push_back({rule, "plane " + rep(p).str() + " in h (" + why + ")"});
        return true;
    }

    // Register lambda as a root of h. Returns true when the state changed.
    bool add_h_root(ExactVector lambda, bool diagonal, const std::string& rule,
                    const std::string& why) {
        lambda = plane_canonical(lambda);
        if (s.eliminated.count(lambda)) {
            contradiction(rule, "projection " + lambda.str() +
                                    " both eliminated and forced as a root of h");
            return true;
        }
        auto it = s.h_roots.find(lambda);
        if (it != s.h_roots.end()) {
            if (diagonal && !it->second.diagonal) {
                it->second.diagonal = true;
                return true;
            }
            return false;
        }
        // consistency against the established root system of h
        for (const auto& [mu, info] : s.h_roots) {
            if (proportional(lambda, mu) && lambda != mu && lambda != -mu) {
                contradiction("proportional", lambda.str() + " and " + mu.str() +
                                                  " both roots of h");
                return true;
            }
            if (!cartan_pair(lambda, mu).compatible) {
                contradiction("crystal_elim", "forced h-root " + lambda.str() +
                                                  " incompatible with " + mu.str());
                return true;
            }
        }
        HRootInfo info;
        auto cit = s.carrier_of.find(lambda);
        if (cit != s.carrier_of.end()) info.carrier = cit->second;
        info.diagonal = diagonal;
        s.h_roots.emplace(lambda, std::move(info));
        ++rev_;
        s.trace.push_back({rule, "h-root " + lambda.str() + " (" + why + ")"});
        // a single-carrier h-root pins its plane inside h
        const auto& carrier = s.h_roots[lambda].carrier;
        if (carrier.size() == 1) mark_h_plane(carrier[0], rule, "single carrier of " + lambda.str());
        return true;
    }

    bool eliminate(const ExactVector& lambda_canon, const std::string& rule,
                   const std::string& why) {
        if (s.eliminated.count(lambda_canon)) return false;
        if (s.h_roots.count(lambda_canon)) {
            contradiction(rule, "established h-root " + lambda_canon.str() + " eliminated");
            return true;
        }
        s.eliminated.insert(lambda_canon);
        ++rev_;
        s.trace.push_back({rule, "projection " + lambda_canon.str() + " not a root of h (" + why + ")"});
        auto cit = s.carrier_of.find(lambda_canon);
        if (cit != s.carrier_of.end())
            for (int p : cit->second) {
                if (mark_m(p, rule, "carrier of eliminated " + lambda_canon.str()) && done)
                    return true;
            }
        return true;
    }

    bool plane_commutes(int p, int q) const {
        const ExactVector& a = rep(p);
        const ExactVector& b = rep(q);
        return !rs.is_root(a + b) && !rs.is_root(a - b);
    }

    // Can lambda still be a root of h?
    bool projection_possible(const ExactVector& lambda) const {
        if (lambda.is_zero()) return false;
        ExactVector c = plane_canonical(lambda);
        auto cit = s.carrier_of.find(c);
        if (cit == s.carrier_of.end()) return false;  // not a projection of any root
        if (s.eliminated.count(c)) return false;
        bool live = false;
        for (int p : cit->second)
            if (s.label[static_cast<std::size_t>(p)] != PlaneLabel::M) live = true;
        if (!live) return false;  // its whole carrier already lies in m
        for (const auto& [mu, info] : s.h_roots)
            if (!cartan_pair(c, mu).compatible) return false;
        return true;
    }

    // -- rules --------------------------------------------------------------

    // Roots orthogonal to z are roots of h; m-planes orthogonal to z are
    // handled by rule_orth_m_plane.
    bool rule_orth_torus_root() {
        for (std::size_t p = 0; p < s.label.size(); ++p) {
            const ExactVector& r = rep(static_cast<int>(p));
            if (!inner(r, s.seed.z).is_zero()) continue;
            if (s.label[p] == PlaneLabel::M) continue;  // contradiction via orth_m_plane
            if (s.h_roots.count(plane_canonical(r))) continue;
            if (add_h_root(r, false, "orth_torus_root", r.str() + " orthogonal to z"))
                return true;
        }
        return false;
    }

    // Planes parallel to z lie in m.
    bool rule_axis_plane() {
        for (std::size_t p = 0; p < s.label.size(); ++p) {
            if (s.label[p] != PlaneLabel::U) continue;
            if (proportional(rep(static_cast<int>(p)), s.seed.z))
                if (mark_m(static_cast<int>(p), "axis_plane", "parallel to z") || done)
                    return true;
        }
        return false;
    }

    // Crystallographic elimination of undecided projections.
    bool rule_crystal_elim() {
        for (const auto& [lambda, carrier] : s.carrier_of) {
            if (s.h_roots.count(lambda) || s.eliminated.count(lambda)) continue;
            bool all_m = true;
            for (int p : carrier)
                if (s.label[static_cast<std::size_t>(p)] != PlaneLabel::M) all_m = false;
            if (all_m) continue;  // nothing left to decide
            for (const auto& [mu, info] : s.h_roots) {
                if (!cartan_pair(lambda, mu).compatible) {
                    if (eliminate(lambda, "crystal_elim",
                                  "incompatible with h-root " + mu.str()) ||
                        done)
                        return true;
                }
                if (done) return true;
            }
        }
        return false;
    }

    // pi/3-2pi/3 m-plane pairs with z in their span: one of the two candidate
    // projections must be a root of h; both dead is a contradiction.
    bool rule_acute_pair() {
        for (std::size_t p = 0; p < s.label.size(); ++p) {
            if (s.label[p] != PlaneLabel::M) continue;
            for (std::size_t q = p + 1; q < s.label.size(); ++q) {
                if (s.label[q] != PlaneLabel::M) continue;
                Rational fc = Rational(4) * rs.gram(static_cast<int>(p), static_cast<int>(q)) *
                              rs.gram(static_cast<int>(p), static_cast<int>(q)) /
                              (rs.plane_len_sq(static_cast<int>(p)) *
                               rs.plane_len_sq(static_cast<int>(q)));
                if (fc != Rational(1)) continue;
                int fp = rs.factor_of_plane[p];
                if (fp == rs.factor_of_plane[q] &&
                    rs.factors[static_cast<std::size_t>(fp)].type == TypeLabel::G)
                    continue;
                const ExactVector& a = rep(static_cast<int>(p));
                const ExactVector& b = rep(static_cast<int>(q));
                if (!detail::in_span({a, b}, s.seed.z)) {
                    acute_near_miss_.insert({static_cast<int>(p), static_cast<int>(q)});
                    continue;
                }
                ExactVector cs = s.pr(a + b);
                ExactVector cd = s.pr(a - b);
                if (!projection_possible(cs) && !projection_possible(cd)) {
                    contradiction("acute_pair",
                                  "m-roots " + a.str() + ", " + b.str() +
                                      " admit no h-root among pr(a+b), pr(a-b)");
                    return true;
                }
            }
        }
        return false;
    }

    // ad(v)-transport along a plane fully inside h.
    bool rule_bracket_transport() {
        std::vector<int> h_planes;
        for (std::size_t p = 0; p < s.label.size(); ++p)
            if (s.label[p] == PlaneLabel::H) h_planes.push_back(static_cast<int>(p));

        for (int hp : h_planes) {
            // transport of m-planes and h-planes
            for (std::size_t q = 0; q < s.label.size(); ++q) {
                if (static_cast<int>(q) == hp) continue;
                PlaneLabel lq = s.label[q];
                if (lq == PlaneLabel::U) continue;
                int t = exactly_one_target(hp, static_cast<int>(q));
                if (t < 0) continue;
                if (lq == PlaneLabel::M) {
                    if (s.label[static_cast<std::size_t>(t)] == PlaneLabel::U) {
                        if (mark_m(t, "bracket_transport",
                                   "ad image of m-plane " + rep(static_cast<int>(q)).str() +
                                       " along h-plane " + rep(hp).str()) ||
                            done)
                            return true;
                    }
                } else {
                    // both planes in h: the bracket plane lies in h
                    if (s.label[static_cast<std::size_t>(t)] == PlaneLabel::U) {
                        if (absorb_h_bracket_plane(t) || done) return true;
                    }
                }
            }
            // transport of diagonal h-roots carrier-by-carrier
            for (const auto& [lambda, info] : s.h_roots) {
                if (info.carrier.size() < 2) continue;
                std::vector<int> targets;
                bool ok = true;
                for (int c : info.carrier) {
                    int t = exactly_one_target(hp, c);
                    if (t < 0) {
                        ok = false;
                        break;
                    }
                    targets.push_back(t);
                }
                if (!ok) continue;
                ExactVector lp = plane_canonical(s.pr(rep(targets[0])));
                bool common = !lp.is_zero();
                for (int t : targets)
                    if (plane_canonical(s.pr(rep(t))) != lp) common = false;
                if (!common) continue;
                if (s.h_roots.count(lp)) {
                    auto& tgt = s.h_roots[lp];
                    if (info.diagonal && !tgt.diagonal) {
                        tgt.diagonal = true;
                        s.trace.push_back({"bracket_transport",
                                           "h-root " + lp.str() + " marked diagonal"});
                        return true;
                    }
                    continue;
                }
                if (add_h_root(lp, info.diagonal, "bracket_transport",
                               "ad image of h-root " + lambda.str() + " along " +
                                   rep(hp).str()) ||
                    done)
                    return true;
            }
        }
        return false;
    }

    // target plane of [plane hp, plane q] when exactly one of sum/diff is a root
    int exactly_one_target(int hp, int q) const {
        const ExactVector& a = rep(hp);
        const ExactVector& b = rep(q);
        int ps = rs.plane_index(a + b);
        int pd = rs.plane_index(a - b);
        if ((ps >= 0) == (pd >= 0)) return -1;
        return ps >= 0 ? ps : pd;
    }

    // A bracket of two h-planes is a plane of h; its projection is a root of h
    // and the remaining carrier planes of that projection lie in m.
    bool absorb_h_bracket_plane(int t) {
        if (mark_h_plane(t, "bracket_transport", "bracket of two h-planes")) {
            if (done) return true;
        }
        ExactVector lp = plane_canonical(s.pr(rep(t)));
        bool ch = add_h_root(lp, false, "bracket_transport",
                             "g-plane " + rep(t).str() + " inside h");
        if (done) return true;
        auto cit = s.carrier_of.find(lp);
        if (cit != s.carrier_of.end())
            for (int c : cit->second) {
                if (c == t) continue;
                if (mark_m(c, "bracket_transport",
                           "complement of the h-plane carrier of " + lp.str()) ||
                    done)
                    return true;
                ch = true;
            }
        return ch;
    }

    // Commuting m-plane pair: the span of the two planes together with the
    // cut-down torus S1 is an intersection of Cartan subalgebras; if it
    // splits along h + m it is a flat splitting subalgebra.
    bool rule_flat_split() {
        for (std::size_t p = 0; p < s.label.size(); ++p) {
            if (s.label[p] != PlaneLabel::M) continue;
            for (std::size_t q = p + 1; q < s.label.size(); ++q) {
                if (s.label[q] != PlaneLabel::M) continue;
                if (flat_checked_.count({static_cast<int>(p), static_cast<int>(q)})) continue;
                flat_checked_.insert({static_cast<int>(p), static_cast<int>(q)});
                if (!plane_commutes(static_cast<int>(p), static_cast<int>(q))) continue;
                std::vector<ExactVector> constraints{rep(static_cast<int>(p)),
                                                     rep(static_cast<int>(q))};
                for (std::size_t d = 0; d < s.label.size(); ++d) {
                    if (d == p || d == q) continue;
                    if (plane_commutes(static_cast<int>(d), static_cast<int>(p)) &&
                        plane_commutes(static_cast<int>(d), static_cast<int>(q)))
                        constraints.push_back(rep(static_cast<int>(d)));
                }
                std::vector<ExactVector> S1 = detail::kernel_within(tbasis_, constraints);
                bool z_in = detail::in_span(S1, s.seed.z);
                bool z_perp = true;
                for (const auto& w : S1)
                    if (!inner(w, s.seed.z).is_zero()) z_perp = false;
                if (z_in || z_perp) {
                    // certificate: every cut-down direction is orthogonal to
                    // both planes (so the Cartan family is genuine), and S1
                    // itself is orthogonal to them (abelian span)
                    for (std::size_t ci = 2; ci < constraints.size(); ++ci)
                        if (!inner(constraints[ci], constraints[0]).is_zero() ||
                            !inner(constraints[ci], constraints[1]).is_zero())
                            throw std::logic_error(
                                "flat_split certificate: non-orthogonal commutant");
                    for (const auto& w : S1)
                        if (!inner(w, rep(static_cast<int>(p))).is_zero() ||
                            !inner(w, rep(static_cast<int>(q))).is_zero())
                            throw std::logic_error(
                                "flat_split certificate: S1 not orthogonal to the pair");
                    std::ostringstream os;
                    os << "commuting m-planes " << rep(static_cast<int>(p)).str() << ", "
                       << rep(static_cast<int>(q)).str() << "; dim S1 = " << S1.size()
                       << (z_in ? "; z inside S1" : "; z orthogonal to S1");
                    contradiction("flat_split", os.str());
                    return true;
                }
            }
        }
        return false;
    }

    // m-plane orthogonal to z: its plane plus z-extended torus splits flat.
    bool rule_orth_m_plane() {
        for (std::size_t p = 0; p < s.label.size(); ++p) {
            if (s.label[p] != PlaneLabel::M) continue;
            if (inner(rep(static_cast<int>(p)), s.seed.z).is_zero()) {
                contradiction("orth_m_plane",
                              "m-plane " + rep(static_cast<int>(p)).str() + " orthogonal to z");
                return true;
            }
        }
        return false;
    }

    // carrier collapse of the seed root and proportional h-roots
    bool rule_carrier_and_proportional() {
        if (s.seed.kind != SeedKind::CaseI) {
            auto it = s.h_roots.find(s.alpha_prime);
            if (it != s.h_roots.end()) {
                int live = 0;
                for (int p : it->second.carrier)
                    if (s.label[static_cast<std::size_t>(p)] != PlaneLabel::M) ++live;
                if (live <= 1) {
                    contradiction("carrier_collapse",
                                  "h-plane of " + s.alpha_prime.str() +
                                      " reduced to a single g-plane");
                    return true;
                }
            }
        }
        std::vector<ExactVector> hs;
        for (const auto& [lambda, info] : s.h_roots) hs.push_back(lambda);
        for (std::size_t i = 0; i < hs.size(); ++i)
            for (std::size_t j = i + 1; j < hs.size(); ++j)
                if (proportional(hs[i], hs[j])) {
                    contradiction("proportional",
                                  hs[i].str() + " and " + hs[j].str() + " both roots of h");
                    return true;
                }
        return false;
    }

    // -- saturated endgame ---------------------------------------------------

    void finish_saturated() {
        if (!acute_near_miss_.empty())
            s.trace.push_back({"acute_pair",
                               "skipped " + std::to_string(acute_near_miss_.size()) +
                                   " near-miss pair(s): z outside the span hypothesis"});
        CaseVerdict v;
        v.status = CaseVerdict::Status::Saturated;

        // Derived type of h from its established roots; the derived set is a
        // subset of the root system of h, so its reflection closure still is.
        std::vector<ExactVector> hroots;
        for (const auto& [lambda, info] : s.h_roots) {
            hroots.push_back(lambda);
            hroots.push_back(-lambda);
        }
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<ExactVector> cur = hroots;
            for (const auto& a : cur)
                for (const auto& b : cur) {
                    ExactVector r = reflect_vector(a, b);
                    if (std::find(hroots.begin(), hroots.end(), r) == hroots.end()) {
                        hroots.push_back(r);
                        grew = true;
                    }
                }
        }
        v.derived_h_type = identify_type(hroots, rs.rank() - 1);

        if (s.seed.kind != SeedKind::CaseI && rs.factors.size() == 1) reduction(v);
        if (s.seed.kind == SeedKind::CaseI) {
            v.k_proper = true;
            v.k_type = s.seed.k_type;
        }
        done = v;
    }

    // Subalgebra reduction: k is generated by h and t. When every projection
    // is decided, the planes of k are squeezed between the closure of the
    // definite h-planes and the closure of all non-m planes; a proper k must
    // itself head an admissible equal-rank pair.
    struct ReductionInfo {
        bool applies = false;   // preconditions hold and k is proper
        bool pinned = false;    // lower closure equals upper closure
        bool admissible = false;
        TypeDecomp k_type;      // type of the upper bound (exact when pinned)
    };

    ReductionInfo compute_reduction() {
        ReductionInfo out;
        if (s.seed.kind == SeedKind::CaseI || rs.factors.size() != 1) return out;
        for (std::size_t p = 0; p < s.label.size(); ++p) {
            if (s.label[p] != PlaneLabel::U) continue;
            ExactVector lp = plane_canonical(s.pr(rep(static_cast<int>(p))));
            if (!s.h_roots.count(lp)) return out;  // undecided projection
        }
        std::vector<int> upper_gen;
        for (std::size_t p = 0; p < s.label.size(); ++p)
            if (s.label[p] != PlaneLabel::M) upper_gen.push_back(static_cast<int>(p));
        std::vector<int> upper = close_planes(rs, upper_gen);
        if (upper.size() == rs.plane_reps.size()) return out;  // k may be all of g

        std::vector<int> lower_gen;
        for (std::size_t p = 0; p < s.label.size(); ++p)
            if (s.label[p] == PlaneLabel::H) lower_gen.push_back(static_cast<int>(p));
        for (const auto& [lambda, info] : s.h_roots) {
            if (!info.diagonal) continue;
            std::vector<int> live;
            for (int p : info.carrier)
                if (s.label[static_cast<std::size_t>(p)] != PlaneLabel::M) live.push_back(p);
            if (live.size() == 2)
                for (int p : live) lower_gen.push_back(p);
        }
        std::vector<int> lower = close_planes(rs, lower_gen);

        out.applies = true;
        out.pinned = (lower == upper);
        out.k_type = identify_type(rs, upper);
        auto survivors = equal_rank_survivor_types(rs.factors[0].type, rs.factors[0].rank);
        if (out.pinned) {
            for (const auto& t : survivors) out.admissible = out.admissible || t == out.k_type;
        } else {
            out.admissible = !survivors.empty();
        }
        return out;
    }

    bool rule_reduction() {
        if (reduction_rev_ == rev_) return false;
        reduction_rev_ = rev_;
        ReductionInfo info = compute_reduction();
        if (!info.applies || info.admissible) return false;
        std::string why = info.pinned
                              ? ("k of type " + info.k_type.str() + " is proper and not admissible")
                              : ("k proper, contained in " + info.k_type.str() +
                                 ", and g admits no equal-rank pair");
        contradiction("reduction", why);
        if (done) {
            done->k_proper = true;
            done->k_type = info.k_type;
        }
        return true;
    }

    void reduction(CaseVerdict& v) {
        ReductionInfo info = compute_reduction();
        if (!info.applies) return;
        v.k_proper = true;
        v.k_type = info.k_type;
        s.trace.push_back({"reduction", std::string("proper k of type ") + info.k_type.str() +
                                            (info.pinned ? "" : " (upper bound)")});
    }
};

} // namespace

CaseState init_case(const RootSystem& rs, const CorankSeed& seed) {
    CaseState st;
    st.rs = &rs;
    st.seed = seed;
    st.label.assign(rs.plane_reps.size(), PlaneLabel::U);

    if (seed.kind == SeedKind::CaseI) {
        // z: central direction of k inside the span of the roots
        std::vector<ExactVector> troots(rs.roots.begin(), rs.roots.end());
        std::vector<ExactVector> tbasis = detail::row_space_basis(troots);
        std::vector<ExactVector> constraints;
        for (int p : seed.k_planes)
            constraints.push_back(rs.plane_reps[static_cast<std::size_t>(p)]);
        std::vector<ExactVector> center = detail::kernel_within(tbasis, constraints);
        if (center.empty())
            throw std::invalid_argument("init_case: Case I subsystem has no central direction");
        st.seed.z = plane_canonical(center[0]);
    } else {
        if (seed.alpha == seed.beta || seed.alpha == -seed.beta)
            throw std::invalid_argument("init_case: seed pair must satisfy a != +-b");
        st.seed.z = seed.alpha - seed.beta;
        ExactVector ap = st.pr(seed.alpha);
        ExactVector bp = st.pr(seed.beta);
        if (!(ap == bp)) throw std::logic_error("init_case: pr(alpha) != pr(beta)");
        if (ap.is_zero()) throw std::invalid_argument("init_case: pr(alpha) = 0");
        st.alpha_prime = plane_canonical(ap);
    }

    // group planes by canonical projection
    for (std::size_t p = 0; p < rs.plane_reps.size(); ++p) {
        ExactVector lp = st.pr(rs.plane_reps[p]);
        if (lp.is_zero()) continue;
        st.carrier_of[plane_canonical(lp)].push_back(static_cast<int>(p));
    }

    if (seed.kind == SeedKind::CaseI) {
        std::set<int> in(seed.k_planes.begin(), seed.k_planes.end());
        for (std::size_t p = 0; p < rs.plane_reps.size(); ++p) {
            if (in.count(static_cast<int>(p))) {
                st.label[p] = PlaneLabel::H;
                ExactVector r = rs.plane_reps[p];
                HRootInfo info;
                info.carrier = {static_cast<int>(p)};
                st.h_roots.emplace(plane_canonical(r), std::move(info));
            } else {
                st.label[p] = PlaneLabel::M;
            }
        }
        st.trace.push_back({"init", "Case I: k-planes in h, complement in m"});
        return st;
    }

    HRootInfo info;
    info.carrier = st.carrier_of[st.alpha_prime];
    info.diagonal = true;  // the case assumption: not a single g-plane
    st.h_roots.emplace(st.alpha_prime, std::move(info));
    std::ostringstream os;
    os << "seed (" << seed.alpha.str() << ", " << seed.beta.str() << "), z = "
       << st.seed.z.str() << ", seed h-root " << st.alpha_prime.str();
    st.trace.push_back({"init", os.str()});
    return st;
}

CaseVerdict saturate(CaseState& st, const SaturateOptions& opt) {
    const RootSystem& rs = *st.rs;
    const CorankSeed& seed = st.seed;

    // Case III seed pair at angle pi/3 or 2pi/3 outside G2: inadmissible.
    if (seed.kind == SeedKind::CaseIII) {
        AngleClass ac = angle_class(seed.alpha, seed.beta);
        int f = rs.factor_of_plane[static_cast<std::size_t>(rs.plane_index(seed.alpha))];
        if (ac.four_cos_sq == Rational(1) &&
            rs.factors[static_cast<std::size_t>(f)].type != TypeLabel::G) {
            CaseVerdict v;
            v.status = CaseVerdict::Status::Contradiction;
            v.rule = "seed_angle";
            v.witness = "Case III seed pair at angle pi/3 or 2pi/3";
            st.trace.push_back({"seed_angle", v.witness});
            v.trace = st.trace;
            return v;
        }
    }

    // Case II: planes of the seed factors not commuting with the seed planes
    // cannot carry roots of h.
    if (seed.kind == SeedKind::CaseII) {
        for (const ExactVector* a : {&seed.alpha, &seed.beta}) {
            int pa = rs.plane_index(*a);
            int fa = rs.factor_of_plane[static_cast<std::size_t>(pa)];
            for (std::size_t q = 0; q < rs.plane_reps.size(); ++q) {
                if (rs.factor_of_plane[q] != fa || static_cast<int>(q) == pa) continue;
                bool carrier = false;
                for (int c : st.h_roots[st.alpha_prime].carrier) carrier |= (c == static_cast<int>(q));
                if (carrier) continue;
                const ExactVector& b = rs.plane_reps[q];
                if (rs.is_root(*a + b) || rs.is_root(*a - b)) {
                    st.label[q] = PlaneLabel::M;
                    st.trace.push_back({"factor_commute",
                                        "plane " + b.str() + " does not commute with the seed plane"});
                }
            }
        }
    }

    Engine eng(st);
    return eng.run(opt);
}

CaseTable run_corank_one(const RootSystem& rs, int rank_cap) {
    if (static_cast<int>(rs.rank()) > rank_cap)
        throw std::invalid_argument("run_corank_one: rank cap exceeded");
    CaseTable table;
    table.g_name = rs.name();
    for (const auto& seed : enumerate_seeds(rs)) {
        CaseState st = init_case(rs, seed);
        CaseVerdict v = saturate(st);
        table.rows.push_back({st.seed, std::move(v)});
    }
    return table;
}

CaseTable run_corank_one(TypeLabel type, int rank, int rank_cap) {
    RootSystem rs = RootSystem::build(type, rank);
    return run_corank_one(rs, rank_cap);
}

} // namespace nhf
