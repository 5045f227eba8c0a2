#include "zeropath/tangle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "zeropath/blocks.hpp"
#include "zeropath/modpath.hpp"

namespace zeropath {

namespace {

constexpr long long kWorkBudget = 4000000;

void emit_boundary_splits(const Graph& g, const VertexSet& boundary,
                          std::vector<Separation>& out, long long& work) {
    std::vector<VertexSet> comps = components(g.minus(boundary));
    int c = static_cast<int>(comps.size());
    if (c > 22) throw EnumerationOverflow("too many components per boundary");
    work += 1LL << (c > 0 ? c - 1 : 0);
    if (work > kWorkBudget) throw EnumerationOverflow("separation enumeration budget exceeded");
    // Each subset of components joins the left side. Splits that put
    // comps[0] on the left are skipped so every unordered pair appears
    // exactly once; pairs never repeat across boundaries because the
    // emitted pair has boundary exactly `boundary`.
    for (std::uint32_t pick = 0; pick < (1u << c); ++pick) {
        if (c > 0 && (pick & 1u)) continue;  // orientation dedup
        Separation s;
        s.left = boundary;
        s.right = boundary;
        for (int i = 0; i < c; ++i) {
            if (pick & (1u << i))
                s.left.insert(comps[i].begin(), comps[i].end());
            else
                s.right.insert(comps[i].begin(), comps[i].end());
        }
        out.push_back(std::move(s));
    }
}

void boundaries(const Graph& g, const std::vector<int>& verts, int k, size_t from,
                VertexSet& cur, std::vector<Separation>& out, long long& work) {
    if (static_cast<int>(cur.size()) == k) {
        emit_boundary_splits(g, cur, out, work);
        return;
    }
    for (size_t i = from; i < verts.size(); ++i) {
        if (verts.size() - i < static_cast<size_t>(k) - cur.size()) break;
        cur.insert(verts[i]);
        boundaries(g, verts, k, i + 1, cur, out, work);
        cur.erase(verts[i]);
    }
}

bool side_has_horizontal(const Wall& w, const VertexSet& side) {
    for (const Path& h : w.horizontal_paths()) {
        bool all = true;
        for (int v : h.v)
            if (!side.count(v)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

}  // namespace

std::vector<Separation> enumerate_separations(const Graph& g, int max_order) {
    if (g.num_vertices() > 64)
        throw EnumerationOverflow("separation enumeration limited to 64 vertices");
    if (max_order < 0) return {};
    std::vector<int> verts = g.vertices();
    std::vector<Separation> out;
    long long work = 0;
    for (int k = 0; k <= max_order && k <= g.num_vertices(); ++k) {
        work += 1;
        VertexSet cur;
        boundaries(g, verts, k, 0, cur, out, work);
    }
    return out;
}

bool wall_tangle_contains(const Wall& w, const Separation& s) {
    bool right = side_has_horizontal(w, s.right);
    bool left = side_has_horizontal(w, s.left);
    if (s.order() < w.size() && right == left)
        throw std::logic_error("separation does not orient against the wall");
    return right && !left;
}

TangleOracle wall_tangle(const Wall& w) {
    TangleOracle t;
    t.order = w.size();
    t.contains = [w](const Separation& s) { return wall_tangle_contains(w, s); };
    return t;
}

TangleOracle clique_tangle(const VertexSet& clique) {
    if (clique.empty()) throw std::invalid_argument("clique tangle needs vertices");
    TangleOracle t;
    t.order = (2 * static_cast<int>(clique.size()) + 2) / 3;
    t.contains = [clique](const Separation& s) {
        auto inside = [&](const VertexSet& side) {
            return std::includes(side.begin(), side.end(), clique.begin(), clique.end());
        };
        return inside(s.right) && !inside(s.left);
    };
    return t;
}

TangleCheck check_tangle_axioms(const Graph& g, const TangleOracle& t) {
    TangleCheck res;
    std::vector<Separation> seps = enumerate_separations(g, t.order - 1);
    const std::vector<int> vs = g.vertices();
    const VertexSet all(vs.begin(), vs.end());

    std::vector<VertexSet> smalls;
    for (const Separation& s : seps) {
        Separation flipped{s.right, s.left};
        bool fwd = t.contains(s);
        bool bwd = t.contains(flipped);
        if (fwd == bwd) {
            res.ok = false;
            res.axiom = "orientation";
            res.witness = {s};
            return res;
        }
        const VertexSet& small = fwd ? s.left : s.right;
        if (small == all) {
            res.ok = false;
            res.axiom = "proper";
            res.witness = {fwd ? s : flipped};
            return res;
        }
        smalls.push_back(small);
    }

    // Union axiom over inclusion-maximal small sides: any covering
    // triple extends to a maximal one.
    std::sort(smalls.begin(), smalls.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    std::vector<VertexSet> maximal;
    for (const VertexSet& s : smalls) {
        bool dominated = false;
        for (const VertexSet& m : maximal)
            if (std::includes(m.begin(), m.end(), s.begin(), s.end())) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(s);
    }

    std::map<int, int> vid;
    for (int v : g.vertices()) vid[v] = static_cast<int>(vid.size());
    int nv = static_cast<int>(vid.size());
    int ne = g.num_edges();
    int words = (nv + ne + 63) / 64;
    auto mask_of = [&](const VertexSet& side) {
        std::vector<std::uint64_t> m(words, 0);
        for (int v : side) {
            int i = vid.at(v);
            m[i / 64] |= 1ull << (i % 64);
        }
        int ei = 0;
        for (const Edge& e : g.edges()) {
            if (side.count(e.first) && side.count(e.second)) {
                int i = nv + ei;
                m[i / 64] |= 1ull << (i % 64);
            }
            ++ei;
        }
        return m;
    };
    std::vector<std::uint64_t> full(words, 0);
    for (int i = 0; i < nv + ne; ++i) full[i / 64] |= 1ull << (i % 64);

    std::vector<std::vector<std::uint64_t>> masks;
    for (const VertexSet& m : maximal) masks.push_back(mask_of(m));
    auto covers = [&](size_t i, size_t j, size_t k) {
        for (int wd = 0; wd < words; ++wd)
            if ((masks[i][wd] | masks[j][wd] | masks[k][wd]) != full[wd]) return false;
        return true;
    };
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = i; j < masks.size(); ++j)
            for (size_t k = j; k < masks.size(); ++k)
                if (covers(i, j, k)) {
                    res.ok = false;
                    res.axiom = "union";
                    res.witness = {Separation{maximal[i], {}},
                                   Separation{maximal[j], {}},
                                   Separation{maximal[k], {}}};
                    return res;
                }
    return res;
}

VertexSet large_block(const Graph& g, const TangleOracle& t, const VertexSet& x) {
    Graph h = g.minus(x);
    if (h.num_vertices() == 0) throw std::invalid_argument("nothing left outside x");
    std::vector<Separation> seps = enumerate_separations(g, t.order - 1);
    std::vector<VertexSet> smalls;
    for (const Separation& s : seps) {
        if (t.contains(s))
            smalls.push_back(s.left);
        else
            smalls.push_back(s.right);
    }
    std::vector<VertexSet> winners;
    for (const Block& b : blocks_and_cutvertices(h)) {
        VertexSet need = b.vertices;
        need.insert(x.begin(), x.end());
        bool avoided = false;
        for (const VertexSet& small : smalls)
            if (std::includes(small.begin(), small.end(), need.begin(), need.end())) {
                avoided = true;
                break;
            }
        if (!avoided) winners.push_back(b.vertices);
    }
    if (winners.size() != 1)
        throw std::logic_error("tangle does not point at a unique block");
    return winners.front();
}

bool subwall_tangle_truncation_check(const Graph& g, const Wall& w, const Wall& sub) {
    if (sub.size() > w.size())
        throw std::invalid_argument("subwall larger than its host");
    for (const Separation& s : enumerate_separations(g, sub.size() - 1))
        if (wall_tangle_contains(w, s) != wall_tangle_contains(sub, s))
            return false;
    return true;
}

}  // namespace zeropath
