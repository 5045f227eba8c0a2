#include "zeropath/surgery.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "zeropath/menger.hpp"

namespace zeropath {

namespace {

std::set<Edge> path_edges(const Path& p) {
    std::set<Edge> out;
    for (size_t i = 0; i + 1 < p.v.size(); ++i)
        out.insert(make_edge(p.v[i], p.v[i + 1]));
    return out;
}

int edges_outside(const Path& p, const std::set<Edge>& inside) {
    int n = 0;
    for (size_t i = 0; i + 1 < p.v.size(); ++i)
        if (!inside.count(make_edge(p.v[i], p.v[i + 1]))) ++n;
    return n;
}

void check_family(const Graph& h, const std::vector<Path>& fam, const char* what) {
    VertexSet used;
    for (const Path& p : fam) {
        if (p.length() < 1 || !is_simple_path(h, p))
            throw std::invalid_argument(std::string(what) + " contains an invalid path");
        for (int v : p.v)
            if (!used.insert(v).second)
                throw std::invalid_argument(std::string(what) + " paths are not disjoint");
    }
}

void check_wall_in_graph(const Graph& g, const Wall& w) {
    for (const auto& [ce, verts] : w.edge_paths())
        for (size_t i = 0; i + 1 < verts.size(); ++i)
            if (!g.has_edge(verts[i], verts[i + 1]))
                throw std::invalid_argument("wall is not a subgraph of the host");
}

// Strict nicely-linking family: each path leaves its terminal, stays off the
// wall, and stops the moment it reaches its own nail.
void check_nicely_linking(const Graph& g, const Wall& w, const std::vector<Path>& fam) {
    VertexSet wall = w.vertices();
    std::set<int> nails_used;
    VertexSet used;
    for (const Path& p : fam) {
        if (p.length() < 1 || !is_simple_path(g, p))
            throw std::invalid_argument("linking path invalid");
        auto ni = w.nail_index(p.back());
        if (!ni) throw std::invalid_argument("linking path must end at a nail");
        if (!nails_used.insert(*ni).second)
            throw std::invalid_argument("linking paths share a nail");
        for (size_t i = 0; i + 1 < p.v.size(); ++i)
            if (wall.count(p.v[i]))
                throw std::invalid_argument("linking path meets the wall before its nail");
        for (int v : p.v)
            if (!used.insert(v).second)
                throw std::invalid_argument("linking paths are not disjoint");
    }
}

}  // namespace

RerouteResult reroute_two_families(const Graph& h, const std::vector<Path>& qs,
                                   const std::vector<Path>& rs) {
    if (qs.size() < 2 || qs.size() % 2 != 0)
        throw std::invalid_argument("need an even number of q-paths");
    const int t = static_cast<int>(qs.size()) / 2;
    if (static_cast<int>(rs.size()) != t)
        throw std::invalid_argument("need half as many r-paths as q-paths");
    check_family(h, qs, "q");
    check_family(h, rs, "r");

    std::set<Edge> q_edges;
    for (const Path& q : qs) {
        auto e = path_edges(q);
        q_edges.insert(e.begin(), e.end());
    }

    std::vector<Path> s = rs;
    // Each move either removes an off-q-union edge from the s-family or, when
    // it cannot, settles one more contested q-endpoint for good; the pair
    // (off-union edges, contested endpoints) drops lexicographically, so the
    // cap is never the thing that stops the loop.
    const int cap = (h.num_edges() + 2) * (2 * t + 2);
    for (int iter = 0;; ++iter) {
        if (iter > cap) throw std::logic_error("reroute loop stalled");
        std::map<int, int> on_s;
        std::set<int> s_ends;
        for (int si = 0; si < static_cast<int>(s.size()); ++si) {
            for (int v : s[si].v) on_s[v] = si;
            s_ends.insert(s[si].back());
        }

        int chosen = -1;
        for (int qi = 0; qi < static_cast<int>(qs.size()); ++qi) {
            if (s_ends.count(qs[qi].back())) continue;
            bool touched = std::any_of(qs[qi].v.begin(), qs[qi].v.end(),
                                       [&](int v) { return on_s.count(v); });
            if (touched) {
                chosen = qi;
                break;
            }
        }
        if (chosen < 0) break;

        const Path& q = qs[chosen];
        size_t yi = q.v.size();
        while (yi-- > 0)
            if (on_s.count(q.v[yi])) break;
        int si = on_s.at(q.v[yi]);

        std::vector<int> nv;
        for (int v : s[si].v) {
            nv.push_back(v);
            if (v == q.v[yi]) break;
        }
        for (size_t j = yi + 1; j < q.v.size(); ++j) nv.push_back(q.v[j]);
        if (nv.size() < 2) throw std::logic_error("reroute degenerated a path");
        s[si] = Path{nv};
    }

    VertexSet s_verts;
    for (const Path& p : s) s_verts.insert(p.v.begin(), p.v.end());
    RerouteResult out;
    for (const Path& q : qs) {
        if (static_cast<int>(out.kept.size()) == t) break;
        bool touched = std::any_of(q.v.begin(), q.v.end(),
                                   [&](int v) { return s_verts.count(v) > 0; });
        if (!touched) out.kept.push_back(q);
    }
    if (static_cast<int>(out.kept.size()) < t)
        throw std::logic_error("fewer than t untouched q-paths after rerouting");
    out.rerouted = std::move(s);
    check_family(h, out.rerouted, "rerouted");
    return out;
}

LinkSelection select_link_and_linkage(const Graph& g, const Wall& w,
                                      const std::vector<Path>& ps,
                                      const std::vector<Path>& ls, int t) {
    if (t < 2) throw std::invalid_argument("need t >= 2");
    if (static_cast<int>(ps.size()) != 3 * t)
        throw std::invalid_argument("need exactly 3t linking paths");
    if (static_cast<int>(ls.size()) != 6 * t)
        throw std::invalid_argument("need exactly 6t linkage paths");
    check_wall_in_graph(g, w);
    check_nicely_linking(g, w, ps);
    validate_linkage(g, w, Linkage{ls});
    {
        // Shared end nails between the families would let a reroute drag a
        // foreign nail into a path interior.
        std::set<int> link_nails;
        for (const Path& p : ps) link_nails.insert(p.back());
        for (const Path& l : ls)
            if (link_nails.count(l.front()) || link_nails.count(l.back()))
                throw std::invalid_argument("linking and linkage paths share a nail");
    }

    RerouteResult rr = reroute_two_families(g, ls, ps);
    check_nicely_linking(g, w, rr.rerouted);

    std::vector<int> cyc = w.outer_cycle();
    std::map<int, int> cyc_pos;
    for (size_t i = 0; i + 1 < cyc.size(); ++i) cyc_pos[cyc[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> by_pos;  // (cycle position of end nail, index)
    for (int i = 0; i < static_cast<int>(rr.rerouted.size()); ++i)
        by_pos.push_back({cyc_pos.at(rr.rerouted[i].back()), i});
    std::sort(by_pos.begin(), by_pos.end());

    int best = -1, best_size = -1;
    std::vector<std::vector<int>> excluded(3);
    for (int arc = 0; arc < 3; ++arc) {
        int lo = by_pos[arc * t].first;
        int hi = by_pos[arc * t + t - 1].first;
        for (int li = 0; li < static_cast<int>(rr.kept.size()); ++li) {
            int pf = cyc_pos.at(rr.kept[li].front());
            int pb = cyc_pos.at(rr.kept[li].back());
            bool inside = (pf >= lo && pf <= hi) || (pb >= lo && pb <= hi);
            if (!inside) excluded[arc].push_back(li);
        }
        if (static_cast<int>(excluded[arc].size()) > best_size) {
            best = arc;
            best_size = static_cast<int>(excluded[arc].size());
        }
    }
    if (best_size < t)
        throw std::logic_error("no outer-cycle arc leaves t linkage paths aside");

    LinkSelection out{
        {}, {}, make_edge(cyc[by_pos[best * t].first - 1], cyc[by_pos[best * t].first])};
    for (int j = 0; j < t; ++j) out.a_paths.push_back(rr.rerouted[by_pos[best * t + j].second]);
    std::sort(excluded[best].begin(), excluded[best].end(), [&](int x, int y) {
        int mx = std::min(cyc_pos.at(rr.kept[x].front()), cyc_pos.at(rr.kept[x].back()));
        int my = std::min(cyc_pos.at(rr.kept[y].front()), cyc_pos.at(rr.kept[y].back()));
        return mx < my;
    });
    for (int j = 0; j < t; ++j) out.linkage.push_back(rr.kept[excluded[best][j]]);

    // Precedence check along the cut-open cycle.
    int start = by_pos[best * t].first;
    int len = static_cast<int>(cyc.size()) - 1;
    auto order = [&](int pos) { return (pos - start + len) % len; };
    int last_a = 0;
    for (const Path& p : out.a_paths) last_a = std::max(last_a, order(cyc_pos.at(p.back())));
    for (const Path& l : out.linkage)
        if (order(cyc_pos.at(l.front())) <= last_a || order(cyc_pos.at(l.back())) <= last_a)
            throw std::logic_error("selection violates endpoint precedence");
    return out;
}

std::vector<Windmill> windmills_from_odd_wall(const Graph& g, const VertexSet& a,
                                              const Wall& w,
                                              const std::vector<Path>& linking,
                                              int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (static_cast<int>(linking.size()) != 3 * k)
        throw std::invalid_argument("need exactly 3k linking paths");
    if (w.size() < 2) throw std::invalid_argument("wall too small");
    check_wall_in_graph(g, w);
    for (const auto& cyc : w.brick_cycles())
        if ((cyc.size() - 1) % 2 == 0)
            throw std::invalid_argument("wall has an even brick");
    for (int v : w.vertices())
        if (a.count(v)) throw std::invalid_argument("wall meets the terminal set");
    check_nicely_linking(g, w, linking);
    for (const Path& p : linking) {
        if (!a.count(p.front()))
            throw std::invalid_argument("linking path must start in the terminal set");
        for (size_t i = 1; i < p.v.size(); ++i)
            if (a.count(p.v[i]))
                throw std::invalid_argument("linking path revisits the terminal set");
    }

    // Column index of the end brick per path, sorted; gaps of at least two
    // keep the bricks vertex-disjoint.
    std::vector<std::pair<int, const Path*>> cols;
    for (const Path& p : linking) cols.push_back({*w.nail_index(p.back()) + 1, &p});
    std::sort(cols.begin(), cols.end());
    for (size_t i = 1; i < cols.size(); ++i)
        if (cols[i].first - cols[i - 1].first < 2)
            throw std::invalid_argument("end bricks are not disjoint");

    std::vector<Windmill> out;
    for (int gi = 0; gi < k; ++gi) {
        std::array<int, 3> b;
        std::array<const Path*, 3> link;
        for (int i = 0; i < 3; ++i) {
            b[i] = cols[3 * gi + i].first;
            link[i] = cols[3 * gi + i].second;
        }
        Windmill wm;
        wm.hub = w.vertex_at(Coord{3, 2 * b[1]});
        for (int i = 0; i < 3; ++i) {
            wm.cycles[i] = w.brick_cycle(1, b[i]);
            std::vector<Coord> coords;
            int step = b[i] >= b[1] ? 1 : -1;
            for (int c = 2 * b[1]; c != 2 * b[i] + step; c += step)
                coords.push_back(Coord{3, c});
            coords.push_back(Coord{2, 2 * b[i]});
            coords.push_back(Coord{2, 2 * b[i] - 1});
            coords.push_back(Coord{1, 2 * b[i] - 1});
            coords.push_back(Coord{1, 2 * b[i]});
            std::vector<int> arm = w.path_along(coords).v;
            for (size_t j = link[i]->v.size() - 1; j-- > 0;) arm.push_back(link[i]->v[j]);
            wm.arms[i] = Path{arm};
        }
        validate_windmill(g, a, wm);
        out.push_back(wm);
    }
    VertexSet used;
    for (const Windmill& wm : out) {
        VertexSet mine;
        for (const Path& arm : wm.arms) mine.insert(arm.v.begin(), arm.v.end());
        for (const auto& cyc : wm.cycles) mine.insert(cyc.begin(), cyc.end());
        for (int v : mine)
            if (!used.insert(v).second)
                throw std::logic_error("windmills are not disjoint");
    }
    return out;
}

WallLink link_a_to_subwall(const Graph& g, const VertexSet& a, const Wall& w,
                           int t, int r) {
    if (t < 1 || r < t) throw std::invalid_argument("need r >= t >= 1");
    const int n = w.size();
    if (n < 4 * t * r) throw std::invalid_argument("wall too small");
    check_wall_in_graph(g, w);
    for (int v : w.vertices())
        if (a.count(v)) throw std::invalid_argument("wall meets the terminal set");

    Wall w0 = extract_subwall(w, t + 1, t + 1, n - 2 * t);
    VertexSet branch = w0.branch_vertices();
    MengerResult mr = menger_paths(g, a, branch);
    const int need = 3 * t * t;

    if (static_cast<int>(mr.paths.size()) < need) {
        const VertexSet& x = mr.separator;
        // Pigeonhole over disjoint tiles first, then any window at all.
        std::vector<std::pair<int, int>> windows = subwall_windows(w0, r);
        std::stable_sort(windows.begin(), windows.end(), [&](auto u, auto v) {
            auto tile = [&](std::pair<int, int> win) {
                return (win.first - 1) % (r + 1) == 0 && (win.second - 1) % (r + 1) == 0;
            };
            return tile(u) > tile(v);
        });
        for (auto [r0, k0] : windows) {
            Wall w1 = extract_subwall(w0, r0, k0, r);
            VertexSet verts = w1.vertices();
            bool clean = std::none_of(verts.begin(), verts.end(),
                                      [&](int v) { return x.count(v) > 0; });
            if (!clean) continue;
            VertexSet sources;
            for (int v : a)
                if (!x.count(v)) sources.insert(v);
            if (!sources.empty()) {
                VertexSet reach = reachable_from(g.minus(x), sources);
                for (int v : verts)
                    if (reach.count(v))
                        throw std::logic_error("separator fails to shield the subwall");
            }
            return WallLink{w1, false, {}, x};
        }
        throw std::logic_error("no subwall avoids the separator");
    }

    // Pull the paths onto the wall: any ride along a subdivided edge that can
    // exit at a free branch vertex earlier does so.
    std::vector<Path> qs(mr.paths.begin(), mr.paths.begin() + need);
    std::set<Edge> wall_edges = w0.to_graph().edges();
    struct EdgeRide {
        const std::vector<int>* verts;
        size_t idx;
    };
    std::map<int, EdgeRide> interior;
    for (const auto& [ce, verts] : w0.edge_paths())
        for (size_t i = 1; i + 1 < verts.size(); ++i)
            interior[verts[i]] = EdgeRide{&verts, i};

    bool improved = true;
    while (improved) {
        improved = false;
        for (int qi = 0; qi < static_cast<int>(qs.size()) && !improved; ++qi) {
            Path& q = qs[qi];
            VertexSet others;
            for (int qj = 0; qj < static_cast<int>(qs.size()); ++qj)
                if (qj != qi) others.insert(qs[qj].v.begin(), qs[qj].v.end());
            for (size_t pos = 1; pos + 1 < q.v.size() && !improved; ++pos) {
                auto it = interior.find(q.v[pos]);
                if (it == interior.end()) continue;
                const std::vector<int>& ride = *it->second.verts;
                for (int side = 0; side < 2 && !improved; ++side) {
                    std::vector<int> cand(q.v.begin(), q.v.begin() + pos + 1);
                    if (side == 0)
                        for (size_t j = it->second.idx; j-- > 0;) cand.push_back(ride[j]);
                    else
                        for (size_t j = it->second.idx + 1; j < ride.size(); ++j)
                            cand.push_back(ride[j]);
                    std::set<int> seen(cand.begin(), cand.end());
                    if (seen.size() != cand.size()) continue;
                    if (std::any_of(cand.begin(), cand.end(),
                                    [&](int v) { return others.count(v) > 0; }))
                        continue;
                    Path trial{cand};
                    int d_out = edges_outside(trial, wall_edges) - edges_outside(q, wall_edges);
                    int d_len = trial.length() - q.length();
                    if (d_out < 0 || (d_out == 0 && d_len < 0)) {
                        q = trial;
                        improved = true;
                    }
                }
            }
        }
    }

    VertexSet q_verts, q_ends;
    for (const Path& q : qs) {
        q_verts.insert(q.v.begin(), q.v.end());
        q_ends.insert(q.back());
    }

    std::vector<std::pair<int, int>> windows = subwall_windows(w0, r);
    auto tier = [&](std::pair<int, int> win) {
        Wall w1 = extract_subwall(w0, win.first, win.second, r);
        VertexSet verts = w1.vertices();
        if (std::none_of(verts.begin(), verts.end(),
                         [&](int v) { return q_verts.count(v) > 0; }))
            return 0;
        if (std::none_of(verts.begin(), verts.end(),
                         [&](int v) { return q_ends.count(v) > 0; }))
            return 1;
        return 2;
    };
    std::stable_sort(windows.begin(), windows.end(),
                     [&](auto u, auto v) { return tier(u) < tier(v); });

    for (auto [r0, k0] : windows) {
        Wall w1 = extract_subwall(w0, r0, k0, r);
        VertexSet blocked = w1.vertices();
        const std::vector<int> nail_list = w1.nails();
        VertexSet nails(nail_list.begin(), nail_list.end());
        for (int v : nails) blocked.erase(v);
        MengerResult link = menger_paths(g.minus(blocked), a, nails);
        if (static_cast<int>(link.paths.size()) >= t) {
            std::vector<Path> chosen(link.paths.begin(), link.paths.begin() + t);
            return WallLink{w1, true, chosen, {}};
        }
    }
    throw std::logic_error("no subwall admits a nice linking");
}

namespace {

// Wall-only connector from nail c to nail d (columns, c < d): one step left
// on the top row, down the vertical path to `row`, across, and back up.  Any
// two of these stay disjoint when the (c, d) intervals are nested and the
// inner pair takes the smaller row.
std::vector<Coord> weave_coords(int c, int d, int row) {
    std::vector<Coord> coords{Coord{1, 2 * c}, Coord{1, 2 * c - 1}};
    auto col_of = [](int k, int rr) { return rr % 2 == 1 ? 2 * k - 1 : 2 * k; };
    for (int rr = 2; rr <= row; ++rr) {
        coords.push_back(Coord{rr, col_of(c, rr - 1)});
        if (rr < row) coords.push_back(Coord{rr, col_of(c, rr)});
    }
    for (int col = col_of(c, row - 1) + 1; col < col_of(d, row - 1); ++col)
        coords.push_back(Coord{row, col});
    for (int rr = row; rr >= 2; --rr) {
        coords.push_back(Coord{rr, col_of(d, rr - 1)});
        if (rr > 2) coords.push_back(Coord{rr - 1, col_of(d, rr - 1)});
    }
    coords.push_back(Coord{1, 2 * d - 1});
    coords.push_back(Coord{1, 2 * d});
    return coords;
}

std::vector<int> oriented(const Path& p, int from) {
    if (p.front() == from) return p.v;
    if (p.back() == from) return p.reversed().v;
    throw std::logic_error("path endpoint mismatch");
}

}  // namespace

std::vector<Path> assemble_zero_paths(const Graph& g, const Wall& w4,
                                      const Path& q, const std::vector<Path>& ls,
                                      const std::vector<Path>& ps, int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (static_cast<int>(ls.size()) != 2 * k || static_cast<int>(ps.size()) != 2 * k)
        throw std::invalid_argument("need exactly 2k linkage and 2k linking paths");
    for (const auto& [ce, verts] : w4.edge_paths())
        if ((verts.size() - 1) % 4 != 0)
            throw std::invalid_argument("wall subdivision lengths must be 0 mod 4");
    check_wall_in_graph(g, w4);
    if (q.v != w4.top_row().v) throw std::invalid_argument("q is not the top row");

    check_nicely_linking(g, w4, ps);
    validate_linkage(g, w4, Linkage{ls});
    {
        VertexSet pv;
        for (const Path& p : ps) pv.insert(p.v.begin(), p.v.end());
        for (const Path& l : ls)
            for (int v : l.v)
                if (pv.count(v))
                    throw std::invalid_argument("linkage and linking paths overlap");
    }
    const int rho = ps[0].length() % 4;
    for (const Path& p : ps)
        if (p.length() % 4 != rho)
            throw std::invalid_argument("linking paths differ modulo four");
    const int lam = ls[0].length() % 4;
    if (lam % 2 == 0) throw std::invalid_argument("linkage paths must be odd");
    for (const Path& l : ls)
        if (l.length() % 4 != lam)
            throw std::invalid_argument("linkage paths differ modulo four");

    std::map<int, int> pos;
    for (size_t i = 0; i < q.v.size(); ++i) pos[q.v[i]] = static_cast<int>(i);

    std::vector<const Path*> link(2 * k);
    {
        std::vector<std::pair<int, const Path*>> order;
        for (const Path& p : ps) order.push_back({pos.at(p.back()), &p});
        std::sort(order.begin(), order.end());
        int frontier = order.back().first;
        for (const Path& l : ls)
            if (pos.at(l.front()) <= frontier || pos.at(l.back()) <= frontier)
                throw std::invalid_argument("endpoint precedence violated");
        for (int i = 0; i < 2 * k; ++i) link[i] = order[i].second;
    }

    auto q_segment = [&](int u, int v) {
        int iu = pos.at(u), iv = pos.at(v);
        std::vector<int> seg;
        int step = iu <= iv ? 1 : -1;
        for (int i = iu; i != iv + step; i += step) seg.push_back(q.v[i]);
        return seg;
    };

    std::vector<Path> out;
    if (rho % 2 == 0) {
        for (int j = 0; j < k; ++j) {
            std::vector<int> verts = link[2 * j]->v;
            auto seg = q_segment(link[2 * j]->back(), link[2 * j + 1]->back());
            verts.insert(verts.end(), seg.begin() + 1, seg.end());
            const auto& back = link[2 * j + 1]->v;
            for (size_t i = back.size() - 1; i-- > 0;) verts.push_back(back[i]);
            out.push_back(Path{verts});
        }
    } else {
        // Pair each linking path with a linkage entry point so the intervals
        // nest, then connect them through distinct rows of the wall.
        struct Entry {
            const Path* l;
            int a, b;
        };
        std::vector<Entry> ent;
        for (const Path& l : ls) {
            int pf = pos.at(l.front()), pb = pos.at(l.back());
            ent.push_back({&l, std::min(pf, pb), std::max(pf, pb)});
        }
        std::sort(ent.begin(), ent.end(), [](const Entry& x, const Entry& y) {
            return x.a < y.a;
        });
        LinkageType type = classify_linkage(w4, Linkage{ls});
        if (type == LinkageType::Mixed)
            throw std::invalid_argument("linkage must be pure");
        if (type == LinkageType::InSeries)
            for (size_t i = 1; i < ent.size(); i += 2) std::swap(ent[i].a, ent[i].b);
        // ent[i].a ascending; relabel so the entry columns descend against the
        // ascending linking columns.
        std::reverse(ent.begin(), ent.end());

        for (int j = 0; j < k; ++j) {
            int lo = std::min(ent[2 * j].b, ent[2 * j + 1].b);
            int hi = std::max(ent[2 * j].b, ent[2 * j + 1].b);
            for (const Entry& e : ent)
                for (int p : {e.a, e.b})
                    if (p > lo && p < hi)
                        throw std::invalid_argument("exit intervals are not disjoint");
            for (int i = 0; i < 2 * k; ++i) {
                int p = pos.at(link[i]->back());
                if (p > lo && p < hi)
                    throw std::invalid_argument("linking nail inside an exit interval");
            }
        }

        if (w4.size() < 2 * k + 1)
            throw std::invalid_argument("wall too small for the weave");
        std::vector<std::vector<int>> extended(2 * k);
        for (int i = 0; i < 2 * k; ++i) {
            int c = *w4.nail_index(link[i]->back()) + 1;
            int d = *w4.nail_index(q.v[ent[i].a]) + 1;
            if (c >= d) throw std::logic_error("weave interval collapsed");
            Path ext = w4.path_along(weave_coords(c, d, 2 + (2 * k - 1 - i)));
            extended[i] = link[i]->v;
            extended[i].insert(extended[i].end(), ext.v.begin() + 1, ext.v.end());
        }
        for (int j = 0; j < k; ++j) {
            std::vector<int> verts = extended[2 * j];
            auto l1 = oriented(*ent[2 * j].l, q.v[ent[2 * j].a]);
            verts.insert(verts.end(), l1.begin() + 1, l1.end());
            auto seg = q_segment(q.v[ent[2 * j].b], q.v[ent[2 * j + 1].b]);
            verts.insert(verts.end(), seg.begin() + 1, seg.end());
            auto l2 = oriented(*ent[2 * j + 1].l, q.v[ent[2 * j + 1].b]);
            verts.insert(verts.end(), l2.begin() + 1, l2.end());
            const auto& back = extended[2 * j + 1];
            for (size_t i = back.size() - 1; i-- > 0;) verts.push_back(back[i]);
            out.push_back(Path{verts});
        }
    }

    VertexSet used;
    for (const Path& p : out) {
        if (!is_simple_path(g, p)) throw std::logic_error("assembled path is not simple");
        if (p.length() % 4 != 0)
            throw std::logic_error("assembled path length is not 0 mod 4");
        for (int v : p.v)
            if (!used.insert(v).second)
                throw std::logic_error("assembled paths are not disjoint");
    }
    return out;
}

}  // namespace zeropath
