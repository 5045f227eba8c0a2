#include "zeropath/wall.hpp"

#include <algorithm>
#include <stdexcept>

namespace zeropath {

namespace {

// Column span of horizontal path r in an n-wall. Row 1 loses its last
// column, the bottom row loses one end depending on the parity of n.
std::pair<int, int> row_span(int n, int r) {
    if (r == 1) return {1, 2 * n + 1};
    if (r == n + 1) {
        if (n % 2 == 0) return {2, 2 * n + 2};
        return {1, 2 * n + 1};
    }
    return {1, 2 * n + 2};
}

}  // namespace

CoordEdge make_coord_edge(Coord a, Coord b) {
    if (a == b) throw std::invalid_argument("coordinate edge needs two distinct ends");
    if (b < a) std::swap(a, b);
    return {a, b};
}

bool WallTemplate::has_coord(Coord c) const {
    return std::binary_search(coords.begin(), coords.end(), c);
}

bool WallTemplate::has_edge(Coord a, Coord b) const {
    CoordEdge e = make_coord_edge(a, b);
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<Coord> WallTemplate::nail_coords() const {
    std::vector<Coord> out;
    for (int j = 1; j <= n; ++j) out.push_back({1, 2 * j});
    return out;
}

std::vector<Coord> WallTemplate::horizontal_coords(int r) const {
    if (r < 1 || r > n + 1) throw std::invalid_argument("row out of range");
    auto [lo, hi] = row_span(n, r);
    std::vector<Coord> out;
    for (int c = lo; c <= hi; ++c) out.push_back({r, c});
    return out;
}

std::vector<Coord> WallTemplate::vertical_coords(int k) const {
    if (k < 1 || k > n + 1) throw std::invalid_argument("vertical index out of range");
    // Column occupied while leaving row r downward: odd rows use 2k-1,
    // even rows use 2k, so consecutive verticals always exist.
    auto col = [&](int r) { return r % 2 == 1 ? 2 * k - 1 : 2 * k; };
    std::vector<Coord> out;
    out.push_back({1, col(1)});
    for (int r = 2; r <= n + 1; ++r) {
        out.push_back({r, col(r - 1)});
        if (r <= n) out.push_back({r, col(r)});
    }
    return out;
}

std::vector<Coord> WallTemplate::brick_coords(int i, int b) const {
    if (i < 1 || i > n || b < 1 || b > n)
        throw std::invalid_argument("brick index out of range");
    int left = (i % 2 == 1) ? 2 * b - 1 : 2 * b;
    return {{i, left},     {i, left + 1},     {i, left + 2},
            {i + 1, left + 2}, {i + 1, left + 1}, {i + 1, left}};
}

std::vector<Coord> WallTemplate::outer_cycle_coords() const {
    std::vector<Coord> out = horizontal_coords(1);
    auto append_tail = [&](const std::vector<Coord>& seq) {
        if (seq.front() == out.back()) {
            out.insert(out.end(), seq.begin() + 1, seq.end());
            return;
        }
        throw std::logic_error("outer cycle pieces do not meet");
    };
    append_tail(vertical_coords(n + 1));
    std::vector<Coord> bottom = horizontal_coords(n + 1);
    std::reverse(bottom.begin(), bottom.end());
    append_tail(bottom);
    std::vector<Coord> first = vertical_coords(1);
    std::reverse(first.begin(), first.end());
    append_tail(first);
    return out;
}

WallTemplate build_wall_template(int n) {
    if (n < 2) throw std::invalid_argument("wall size must be >= 2");
    WallTemplate t;
    t.n = n;
    for (int r = 1; r <= n + 1; ++r) {
        auto [lo, hi] = row_span(n, r);
        for (int c = lo; c <= hi; ++c) t.coords.push_back({r, c});
        for (int c = lo; c < hi; ++c)
            t.edges.push_back(make_coord_edge({r, c}, {r, c + 1}));
    }
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= 2 * n + 2; ++c)
            if (c % 2 == r % 2 &&
                std::binary_search(t.coords.begin(), t.coords.end(), Coord{r, c}) &&
                std::binary_search(t.coords.begin(), t.coords.end(), Coord{r + 1, c}))
                t.edges.push_back(make_coord_edge({r, c}, {r + 1, c}));
    std::sort(t.coords.begin(), t.coords.end());
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

int SubdivisionRule::length_of(const CoordEdge& e) const {
    auto it = overrides.find(e);
    int len = it == overrides.end() ? default_length : it->second;
    if (len < 1) throw std::invalid_argument("edge length must be >= 1");
    return len;
}

Wall::Wall(WallTemplate tmpl, std::map<Coord, int> position,
           std::map<CoordEdge, std::vector<int>> edge_paths)
    : tmpl_(std::move(tmpl)),
      position_(std::move(position)),
      edge_paths_(std::move(edge_paths)) {
    if (position_.size() != tmpl_.coords.size())
        throw std::invalid_argument("wall position map does not cover the template");
    VertexSet branch;
    for (const Coord& c : tmpl_.coords) {
        auto it = position_.find(c);
        if (it == position_.end())
            throw std::invalid_argument("wall position map misses a template coordinate");
        if (!branch.insert(it->second).second)
            throw std::invalid_argument("wall position map repeats a vertex");
    }
    if (edge_paths_.size() != tmpl_.edges.size())
        throw std::invalid_argument("wall edge paths do not cover the template");
    VertexSet interior;
    for (const CoordEdge& e : tmpl_.edges) {
        auto it = edge_paths_.find(e);
        if (it == edge_paths_.end())
            throw std::invalid_argument("wall edge paths miss a template edge");
        const std::vector<int>& p = it->second;
        if (p.size() < 2 || p.front() != position_.at(e.first) ||
            p.back() != position_.at(e.second))
            throw std::invalid_argument("wall edge path does not join its branch vertices");
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            if (branch.count(p[i]))
                throw std::invalid_argument("wall edge path runs through a branch vertex");
            if (!interior.insert(p[i]).second)
                throw std::invalid_argument("wall edge paths overlap");
        }
    }
}

int Wall::vertex_at(Coord c) const {
    auto it = position_.find(c);
    if (it == position_.end()) throw std::invalid_argument("no wall vertex at coordinate");
    return it->second;
}

bool Wall::has_position(Coord c) const { return position_.count(c) > 0; }

Path Wall::edge_path(Coord a, Coord b) const {
    CoordEdge e = make_coord_edge(a, b);
    auto it = edge_paths_.find(e);
    if (it == edge_paths_.end()) throw std::invalid_argument("no wall edge at coordinates");
    Path p{it->second};
    if (a == e.first) return p;
    return p.reversed();
}

VertexSet Wall::vertices() const {
    VertexSet out;
    for (const auto& [c, v] : position_) out.insert(v);
    for (const auto& [e, p] : edge_paths_) out.insert(p.begin(), p.end());
    return out;
}

VertexSet Wall::branch_vertices() const {
    VertexSet out;
    for (const auto& [c, v] : position_) out.insert(v);
    return out;
}

std::vector<int> Wall::nails() const {
    std::vector<int> out;
    for (const Coord& c : tmpl_.nail_coords()) out.push_back(vertex_at(c));
    return out;
}

std::optional<int> Wall::nail_index(int v) const {
    std::vector<int> ns = nails();
    for (size_t i = 0; i < ns.size(); ++i)
        if (ns[i] == v) return static_cast<int>(i);
    return std::nullopt;
}

Path Wall::path_along(const std::vector<Coord>& coords) const {
    if (coords.empty()) return Path{};
    Path out{{vertex_at(coords.front())}};
    for (size_t i = 1; i < coords.size(); ++i) {
        Path piece = edge_path(coords[i - 1], coords[i]);
        out.v.insert(out.v.end(), piece.v.begin() + 1, piece.v.end());
    }
    return out;
}

Path Wall::horizontal_path(int r) const { return path_along(tmpl_.horizontal_coords(r)); }

Path Wall::vertical_path(int k) const { return path_along(tmpl_.vertical_coords(k)); }

std::vector<Path> Wall::horizontal_paths() const {
    std::vector<Path> out;
    for (int r = 1; r <= tmpl_.n + 1; ++r) out.push_back(horizontal_path(r));
    return out;
}

std::vector<Path> Wall::vertical_paths() const {
    std::vector<Path> out;
    for (int k = 1; k <= tmpl_.n + 1; ++k) out.push_back(vertical_path(k));
    return out;
}

std::vector<int> Wall::brick_cycle(int i, int b) const {
    std::vector<Coord> coords = tmpl_.brick_coords(i, b);
    coords.push_back(coords.front());
    return path_along(coords).v;
}

std::vector<std::vector<int>> Wall::brick_cycles() const {
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= tmpl_.n; ++i)
        for (int b = 1; b <= tmpl_.n; ++b) out.push_back(brick_cycle(i, b));
    return out;
}

std::vector<int> Wall::outer_cycle() const {
    return path_along(tmpl_.outer_cycle_coords()).v;
}

Graph Wall::to_graph() const {
    Graph g;
    for (const auto& [c, v] : position_) g.add_vertex(v);
    for (const auto& [e, p] : edge_paths_)
        for (size_t i = 1; i < p.size(); ++i) g.add_edge(p[i - 1], p[i]);
    return g;
}

Wall build_elementary_wall(int n) {
    WallTemplate t = build_wall_template(n);
    std::map<Coord, int> position;
    int next = 0;
    for (const Coord& c : t.coords) position[c] = next++;
    std::map<CoordEdge, std::vector<int>> paths;
    for (const CoordEdge& e : t.edges)
        paths[e] = {position.at(e.first), position.at(e.second)};
    return Wall(std::move(t), std::move(position), std::move(paths));
}

Wall subdivide_wall(const Wall& w, const SubdivisionRule& rule) {
    const VertexSet verts = w.vertices();
    int next = verts.empty() ? 0 : *verts.rbegin() + 1;
    std::map<CoordEdge, std::vector<int>> paths;
    for (const CoordEdge& e : w.tmpl().edges) {
        int len = rule.length_of(e);
        std::vector<int> p;
        p.push_back(w.vertex_at(e.first));
        for (int i = 1; i < len; ++i) p.push_back(next++);
        p.push_back(w.vertex_at(e.second));
        paths[e] = std::move(p);
    }
    return Wall(w.tmpl(), w.positions(), std::move(paths));
}

namespace {

int window_origin_col(int r0, int k0) { return r0 % 2 == 0 ? 2 * k0 : 2 * k0 - 1; }

bool window_valid(const Wall& w, const WallTemplate& sub, int r0, int k0) {
    if (r0 < 1 || k0 < 1) return false;
    int c0 = window_origin_col(r0, k0);
    auto host = [&](Coord c) { return Coord{r0 + c.row - 1, c0 + c.col - 1}; };
    for (const Coord& c : sub.coords)
        if (!w.tmpl().has_coord(host(c))) return false;
    for (const CoordEdge& e : sub.edges)
        if (!w.tmpl().has_edge(host(e.first), host(e.second))) return false;
    return true;
}

}  // namespace

Wall extract_subwall(const Wall& w, int r0, int k0, int m) {
    WallTemplate sub = build_wall_template(m);
    if (!window_valid(w, sub, r0, k0))
        throw std::invalid_argument("subwall window does not fit the wall");
    int c0 = window_origin_col(r0, k0);
    auto host = [&](Coord c) { return Coord{r0 + c.row - 1, c0 + c.col - 1}; };
    std::map<Coord, int> position;
    for (const Coord& c : sub.coords) position[c] = w.vertex_at(host(c));
    std::map<CoordEdge, std::vector<int>> paths;
    for (const CoordEdge& e : sub.edges)
        paths[e] = w.edge_path(host(e.first), host(e.second)).v;
    return Wall(std::move(sub), std::move(position), std::move(paths));
}

std::vector<std::pair<int, int>> subwall_windows(const Wall& w, int m) {
    if (m < 2 || m > w.size()) return {};
    WallTemplate sub = build_wall_template(m);
    std::vector<std::pair<int, int>> out;
    for (int r0 = 1; r0 <= w.size() + 1; ++r0)
        for (int k0 = 1; k0 <= w.size() + 1; ++k0)
            if (window_valid(w, sub, r0, k0)) out.emplace_back(r0, k0);
    return out;
}

bool k_contained(const Wall& w, const Wall& sub, int k) {
    if (k < 0) throw std::invalid_argument("containment margin must be >= 0");
    // Recover the window of sub inside w from its top-left branch vertex.
    Coord origin;
    bool found = false;
    int top_left = sub.vertex_at(Coord{1, 1});
    for (const auto& [c, v] : w.positions())
        if (v == top_left) {
            origin = c;
            found = true;
            break;
        }
    if (!found) throw std::invalid_argument("sub is not an aligned subwall");
    int r0 = origin.row;
    int c0 = origin.col;
    if (r0 % 2 != c0 % 2)
        throw std::invalid_argument("sub is not an aligned subwall");
    int k0 = r0 % 2 == 0 ? c0 / 2 : (c0 + 1) / 2;
    for (const auto& [c, v] : sub.positions()) {
        Coord h{r0 + c.row - 1, c0 + c.col - 1};
        if (!w.has_position(h) || w.vertex_at(h) != v)
            throw std::invalid_argument("sub is not an aligned subwall");
    }
    int m = sub.size();
    int n = w.size();
    return r0 >= k + 1 && r0 + m <= n + 1 - k && k0 >= k + 1 && k0 + m <= n + 1 - k;
}

std::string to_string(LinkageType t) {
    switch (t) {
        case LinkageType::InSeries: return "in-series";
        case LinkageType::Crossing: return "crossing";
        case LinkageType::Nested: return "nested";
        case LinkageType::Mixed: return "mixed";
    }
    throw std::logic_error("unknown linkage type");
}

void validate_linkage(const Graph& g, const Wall& w, const Linkage& l) {
    const VertexSet wall = w.vertices();
    VertexSet used;
    for (const Path& p : l.paths) {
        if (!is_simple_path(g, p) || p.length() < 1)
            throw std::invalid_argument("linkage path is not a simple path");
        if (!w.nail_index(p.front()) || !w.nail_index(p.back()) ||
            p.front() == p.back())
            throw std::invalid_argument("linkage path must join two distinct nails");
        for (size_t i = 1; i + 1 < p.v.size(); ++i)
            if (wall.count(p.v[i]))
                throw std::invalid_argument("linkage path interior meets the wall");
        for (int v : p.v)
            if (!used.insert(v).second)
                throw std::invalid_argument("linkage paths are not disjoint");
    }
}

LinkageType classify_linkage(const Wall& w, const Linkage& l) {
    std::vector<std::pair<int, int>> spans;
    for (const Path& p : l.paths) {
        auto a = w.nail_index(p.front());
        auto b = w.nail_index(p.back());
        if (!a || !b) throw std::invalid_argument("linkage path endpoint is not a nail");
        spans.emplace_back(std::min(*a, *b), std::max(*a, *b));
    }
    bool series = true, crossing = true, nested = true;
    for (size_t i = 0; i < spans.size(); ++i)
        for (size_t j = i + 1; j < spans.size(); ++j) {
            auto [a1, b1] = spans[i];
            auto [a2, b2] = spans[j];
            bool ser = b1 < a2 || b2 < a1;
            bool nst = (a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2);
            bool crs = !ser && !nst;
            series = series && ser;
            nested = nested && nst;
            crossing = crossing && crs;
        }
    if (spans.size() < 2) return LinkageType::InSeries;
    if (series) return LinkageType::InSeries;
    if (crossing) return LinkageType::Crossing;
    if (nested) return LinkageType::Nested;
    return LinkageType::Mixed;
}

bool is_odd_linkage(const Graph& g, const Wall& w, const Linkage& l) {
    validate_linkage(g, w, l);
    Graph base = w.to_graph();
    if (!is_bipartite(base)) throw std::invalid_argument("wall is not bipartite");
    for (const Path& p : l.paths) {
        Graph h = base;
        for (size_t i = 1; i < p.v.size(); ++i) h.add_edge(p.v[i - 1], p.v[i]);
        if (is_bipartite(h)) return false;
    }
    return true;
}

}  // namespace zeropath
