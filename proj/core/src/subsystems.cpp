#include "nhf/root_system.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

namespace nhf {

namespace {

// Positive roots of a plane subset are the representatives themselves (the
// canonical sign convention is positivity for the lexicographic functional).
// A positive root is simple iff it is not the sum of two positive roots of
// the subset.
std::vector<int> simple_planes(const RootSystem& rs, const std::vector<int>& planes) {
    std::set<int> in(planes.begin(), planes.end());
    std::vector<int> simples;
    for (int p : planes) {
        const ExactVector& r = rs.plane_reps[static_cast<std::size_t>(p)];
        bool decomposable = false;
        for (int q : planes) {
            if (decomposable) break;
            if (q == p) continue;
            const ExactVector& a = rs.plane_reps[static_cast<std::size_t>(q)];
            ExactVector b = r - a;
            int bi = rs.plane_index(b);
            if (bi < 0 || !in.count(bi)) continue;
            // b must itself be a positive root of the subset
            if (plane_canonical(b) == b) decomposable = true;
        }
        if (!decomposable) simples.push_back(p);
    }
    return simples;
}

// Connected components of a plane subset under non-orthogonality.
std::vector<std::vector<int>> plane_components(const RootSystem& rs,
                                               const std::vector<int>& planes) {
    std::vector<std::vector<int>> comps;
    std::map<int, int> comp_of;
    for (int p : planes) {
        if (comp_of.count(p)) continue;
        std::vector<int> stack{p}, comp;
        comp_of[p] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : planes) {
                if (comp_of.count(v)) continue;
                if (!rs.gram(u, v).is_zero()) {
                    comp_of[v] = static_cast<int>(comps.size());
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Highest root plane of an irreducible subset component: the unique positive
// root whose sum with every simple root of the component leaves the subset.
int highest_plane(const RootSystem& rs, const std::vector<int>& comp,
                  const std::vector<int>& comp_simples) {
    std::set<int> in(comp.begin(), comp.end());
    for (int p : comp) {
        const ExactVector& r = rs.plane_reps[static_cast<std::size_t>(p)];
        bool top = true;
        for (int s : comp_simples) {
            ExactVector cand = r + rs.plane_reps[static_cast<std::size_t>(s)];
            int ci = rs.plane_index(cand);
            if (ci >= 0 && in.count(ci)) {
                top = false;
                break;
            }
        }
        if (top) return p;
    }
    throw std::logic_error("highest_plane: no maximal root found");
}

} // namespace

std::vector<ClosedSubsystem> closed_subsystems(const RootSystem& rs, int rank_cap,
                                               double budget_seconds) {
    if (static_cast<int>(rs.rank()) > rank_cap)
        throw std::invalid_argument("closed_subsystems: rank cap exceeded");
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration<double>(budget_seconds > 0 ? budget_seconds : 1e9);

    std::map<std::string, ClosedSubsystem> classes;
    std::set<std::string> visited;

    std::vector<std::vector<int>> work;
    {
        std::vector<int> all(rs.plane_reps.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        work.push_back(std::move(all));
    }

    while (!work.empty()) {
        if (std::chrono::steady_clock::now() > deadline)
            throw std::runtime_error("closed_subsystems: time budget exceeded");
        std::vector<int> S = std::move(work.back());
        work.pop_back();
        std::sort(S.begin(), S.end());
        std::string sig = subset_signature(rs, S);
        if (!visited.insert(sig).second) continue;
        classes.emplace(sig, ClosedSubsystem{S, identify_type(rs, S), sig});
        if (S.empty()) continue;

        std::vector<int> simples = simple_planes(rs, S);
        std::set<int> simple_set(simples.begin(), simples.end());

        // Levi children: drop one simple root, regenerate.
        for (int drop : simples) {
            std::vector<int> gen;
            for (int s : simples)
                if (s != drop) gen.push_back(s);
            work.push_back(close_planes(rs, gen));
        }

        // Extended-diagram children, one irreducible component at a time.
        for (const auto& comp : plane_components(rs, S)) {
            std::vector<int> comp_simples;
            for (int s : simples)
                if (std::binary_search(comp.begin(), comp.end(), s)) comp_simples.push_back(s);
            if (comp_simples.empty()) continue;
            int theta = highest_plane(rs, comp, comp_simples);
            std::set<int> comp_set(comp.begin(), comp.end());
            for (int drop : comp_simples) {
                std::vector<int> gen;
                for (int s : simples)
                    if (s != drop) gen.push_back(s);
                gen.push_back(theta);
                std::vector<int> child = close_planes(rs, gen);
                if (child.size() == S.size()) continue;
                work.push_back(std::move(child));
            }
        }
    }

    std::vector<ClosedSubsystem> out;
    for (auto& [sig, cs] : classes) out.push_back(std::move(cs));
    std::sort(out.begin(), out.end(), [](const ClosedSubsystem& a, const ClosedSubsystem& b) {
        if (a.planes.size() != b.planes.size()) return a.planes.size() > b.planes.size();
        return a.signature < b.signature;
    });
    return out;
}

std::vector<ClosedSubsystem> closed_subsystems_brute(const RootSystem& rs) {
    std::size_t n = rs.plane_reps.size();
    if (n > 20) throw std::invalid_argument("closed_subsystems_brute: too many planes");

    // req[i][j]: planes forced into any closed set containing planes i and j
    std::vector<std::vector<std::uint32_t>> req(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::uint32_t m = 0;
            const ExactVector& a = rs.plane_reps[i];
            const ExactVector& b = rs.plane_reps[j];
            for (const ExactVector& s : {a + b, a - b}) {
                int pi = rs.plane_index(s);
                if (pi >= 0) m |= (1u << pi);
            }
            req[i][j] = m;
        }

    std::map<std::string, ClosedSubsystem> classes;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                if (!(mask & (1u << j))) continue;
                if ((req[i][j] & mask) != req[i][j]) ok = false;
            }
        }
        if (!ok) continue;
        std::vector<int> planes;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) planes.push_back(static_cast<int>(i));
        std::string sig = subset_signature(rs, planes);
        classes.emplace(sig, ClosedSubsystem{planes, identify_type(rs, planes), sig});
    }

    std::vector<ClosedSubsystem> out;
    for (auto& [sig, cs] : classes) out.push_back(std::move(cs));
    std::sort(out.begin(), out.end(), [](const ClosedSubsystem& a, const ClosedSubsystem& b) {
        if (a.planes.size() != b.planes.size()) return a.planes.size() > b.planes.size();
        return a.signature < b.signature;
    });
    return out;
}

} // namespace nhf
