#include "zeropath/windmill.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zeropath {

namespace {

// Positions in arm i of the vertices shared with cycle i. Validation
// guarantees they are contiguous; lo/hi bound the shared arc.
std::pair<size_t, size_t> shared_arc_span(const Windmill& wm, int i) {
    const Path& p = wm.arms[i];
    std::set<int> cv(wm.cycles[i].begin(), wm.cycles[i].end());
    size_t lo = p.v.size(), hi = 0;
    for (size_t t = 0; t < p.v.size(); ++t)
        if (cv.count(p.v[t])) {
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
    return {lo, hi};
}

std::set<Edge> cycle_edges(const std::vector<int>& cyc) {
    std::set<Edge> out;
    for (size_t t = 1; t < cyc.size(); ++t) out.insert(make_edge(cyc[t - 1], cyc[t]));
    return out;
}

void check_cycle(const Graph& g, const std::vector<int>& cyc) {
    if (cyc.size() < 4 || cyc.front() != cyc.back())
        throw std::invalid_argument("windmill cycle must be closed with >= 3 edges");
    std::set<int> seen;
    for (size_t t = 0; t + 1 < cyc.size(); ++t)
        if (!seen.insert(cyc[t]).second)
            throw std::invalid_argument("windmill cycle repeats a vertex");
    for (size_t t = 1; t < cyc.size(); ++t)
        if (!g.has_edge(cyc[t - 1], cyc[t]))
            throw std::invalid_argument("windmill cycle uses a missing edge");
    if ((cyc.size() - 1) % 2 == 0)
        throw std::invalid_argument("windmill cycle must be odd");
}

}  // namespace

void validate_windmill(const Graph& g, const Windmill& wm) {
    for (int i = 0; i < 3; ++i) {
        const Path& p = wm.arms[i];
        if (!is_simple_path(g, p) || p.length() < 1)
            throw std::invalid_argument("windmill arm is not a simple path");
        if (p.front() != wm.hub)
            throw std::invalid_argument("windmill arm must start at the hub");
        check_cycle(g, wm.cycles[i]);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            VertexSet pi = path_vertices(wm.arms[i]);
            for (int v : wm.arms[j].v)
                if (pi.count(v) && v != wm.hub)
                    throw std::invalid_argument("windmill arms may share only the hub");
        }
    for (int i = 0; i < 3; ++i) {
        std::set<int> ci(wm.cycles[i].begin(), wm.cycles[i].end());
        for (int j = 0; j < 3; ++j) {
            if (j != i)
                for (int v : wm.arms[j].v)
                    if (ci.count(v))
                        throw std::invalid_argument("windmill cycle meets a foreign arm");
            if (j > i)
                for (int v : wm.cycles[j])
                    if (ci.count(v))
                        throw std::invalid_argument("windmill cycles must be disjoint");
        }
    }
    for (int i = 0; i < 3; ++i) {
        const Path& p = wm.arms[i];
        std::set<int> cv(wm.cycles[i].begin(), wm.cycles[i].end());
        std::vector<size_t> idx;
        for (size_t t = 0; t < p.v.size(); ++t)
            if (cv.count(p.v[t])) idx.push_back(t);
        if (idx.size() < 2)
            throw std::invalid_argument("cycle and arm must share at least one edge");
        if (idx.back() - idx.front() + 1 != idx.size())
            throw std::invalid_argument("shared vertices must be contiguous on the arm");
        std::set<Edge> ce = cycle_edges(wm.cycles[i]);
        for (size_t t = idx.front(); t < idx.back(); ++t)
            if (!ce.count(make_edge(p.v[t], p.v[t + 1])))
                throw std::invalid_argument("shared arc must run along the cycle");
    }
}

void validate_windmill(const Graph& g, const VertexSet& a, const Windmill& wm) {
    validate_windmill(g, wm);
    VertexSet body;
    for (int i = 0; i < 3; ++i) {
        if (!a.count(wm.arms[i].back()))
            throw std::invalid_argument("windmill tip must be an anchor vertex");
        for (size_t t = 0; t + 1 < wm.arms[i].v.size(); ++t) body.insert(wm.arms[i].v[t]);
        body.insert(wm.cycles[i].begin(), wm.cycles[i].end());
    }
    // A tip may sit on its own cycle (shared arc ending at the tip).
    for (int i = 0; i < 3; ++i) body.erase(wm.arms[i].back());
    for (int v : body)
        if (a.count(v))
            throw std::invalid_argument("only windmill tips may be anchor vertices");
}

Path windmill_arm_route(const Graph& g, const Windmill& wm, int i, bool complement) {
    if (i < 0 || i > 2) throw std::invalid_argument("arm index out of range");
    if (!complement) return wm.arms[i];
    const Path& p = wm.arms[i];
    auto [lo, hi] = shared_arc_span(wm, i);
    int u = p.v[lo], v = p.v[hi];
    std::set<Edge> shared;
    for (size_t t = lo; t < hi; ++t) shared.insert(make_edge(p.v[t], p.v[t + 1]));

    std::vector<int> cyc(wm.cycles[i].begin(), wm.cycles[i].end() - 1);
    int L = static_cast<int>(cyc.size());
    int pu = static_cast<int>(std::find(cyc.begin(), cyc.end(), u) - cyc.begin());
    auto walk = [&](int dir) {
        std::vector<int> out{u};
        int pos = pu;
        while (out.back() != v) {
            pos = ((pos + dir) % L + L) % L;
            out.push_back(cyc[pos]);
        }
        return out;
    };
    for (int dir : {1, -1}) {
        std::vector<int> arc = walk(dir);
        bool clean = true;
        for (size_t t = 1; t < arc.size() && clean; ++t)
            if (shared.count(make_edge(arc[t - 1], arc[t]))) clean = false;
        if (!clean) continue;
        Path out{{p.v.begin(), p.v.begin() + lo + 1}};
        out.v.insert(out.v.end(), arc.begin() + 1, arc.end());
        out.v.insert(out.v.end(), p.v.begin() + hi + 1, p.v.end());
        return out;
    }
    throw std::logic_error("cycle has no complementary arc");
}

Path extract_zero_path_from_windmill(const Graph& g, const Windmill& wm) {
    validate_windmill(g, wm);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int ci = 0; ci < 2; ++ci)
                for (int cj = 0; cj < 2; ++cj) {
                    Path ri = windmill_arm_route(g, wm, i, ci == 1);
                    Path rj = windmill_arm_route(g, wm, j, cj == 1);
                    if ((ri.length() + rj.length()) % 4 != 0) continue;
                    Path out = ri.reversed();
                    out.v.insert(out.v.end(), rj.v.begin() + 1, rj.v.end());
                    if (!is_simple_path(g, out))
                        throw std::logic_error("combined windmill routes are not simple");
                    return out;
                }
    throw std::logic_error("no route combination has length divisible by four");
}

}  // namespace zeropath
