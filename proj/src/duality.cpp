#include "zeropath/duality.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace zeropath {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(size_t nbits) { return Bits((nbits + 63) / 64, 0); }
void set_bit(Bits& b, size_t i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }
void clear_bit(Bits& b, size_t i) { b[i / 64] &= ~(std::uint64_t(1) << (i % 64)); }
bool test_bit(const Bits& b, size_t i) { return (b[i / 64] >> (i % 64)) & 1; }
bool intersects(const Bits& a, const Bits& b) {
  for (size_t w = 0; w < a.size(); ++w)
    if (a[w] & b[w]) return true;
  return false;
}
bool is_zero(const Bits& b) {
  for (auto w : b)
    if (w) return false;
  return true;
}
bool subset_of(const Bits& a, const Bits& b) {  // a ⊆ b
  for (size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}
int lowest_bit(const Bits& b) {
  for (size_t w = 0; w < b.size(); ++w)
    if (b[w]) return static_cast<int>(w * 64 + __builtin_ctzll(b[w]));
  return -1;
}
int popcount(const Bits& b) {
  int c = 0;
  for (auto w : b) c += __builtin_popcountll(w);
  return c;
}
Bits and_not(const Bits& a, const Bits& b) {  // a ∖ b
  Bits r = a;
  for (size_t w = 0; w < r.size(); ++w) r[w] &= ~b[w];
  return r;
}
void bits_merge(Bits& a, const Bits& b) {
  for (size_t w = 0; w < a.size(); ++w) a[w] |= b[w];
}

template <typename F>
void for_each_bit(const Bits& b, F f) {
  for (size_t w = 0; w < b.size(); ++w) {
    std::uint64_t word = b[w];
    while (word) {
      f(w * 64 + __builtin_ctzll(word));
      word &= word - 1;
    }
  }
}

// Vertex-index bitsets for a path family over a shared vertex numbering.
struct FamilyBits {
  std::map<int, int> vindex;
  std::vector<Bits> path_bits;  // per path: vertices it uses
  size_t nvert = 0;

  FamilyBits(const Graph& g, const std::vector<Path>& fam) {
    for (int v : g.vertices()) vindex.emplace(v, static_cast<int>(vindex.size()));
    nvert = vindex.size();
    path_bits.reserve(fam.size());
    for (const auto& p : fam) {
      Bits b = make_bits(nvert);
      for (int v : p.v) set_bit(b, vindex.at(v));
      path_bits.push_back(std::move(b));
    }
  }
};

std::pair<int, std::vector<Path>> max_packing_impl(const Graph& g,
                                                   const std::vector<Path>& fam) {
  if (fam.empty()) return {0, {}};
  size_t k = fam.size();
  if (k > 30000)
    throw std::runtime_error("qualifying family too large for exact packing (" +
                             std::to_string(k) + " paths)");

  FamilyBits fb(g, fam);
  // conflict[i] = paths sharing a vertex with path i, i included
  std::vector<Bits> conflict(k, make_bits(k));
  for (size_t i = 0; i < k; ++i) {
    set_bit(conflict[i], i);
    for (size_t j = i + 1; j < k; ++j) {
      if (intersects(fb.path_bits[i], fb.path_bits[j])) {
        set_bit(conflict[i], j);
        set_bit(conflict[j], i);
      }
    }
  }

  // Greedy clique cover of the candidate set; its size bounds the packing.
  auto clique_cover_ub = [&](const Bits& cand) {
    std::vector<Bits> common;  // per clique: AND of members' conflict rows
    for_each_bit(cand, [&](size_t i) {
      for (auto& c : common) {
        if (test_bit(c, i)) {
          for (size_t w = 0; w < c.size(); ++w) c[w] &= conflict[i][w];
          return;
        }
      }
      common.push_back(conflict[i]);
    });
    return static_cast<int>(common.size());
  };

  int best = -1;
  std::vector<int> best_idx, cur;
  // Include-first DFS over enumeration order: the first optimum reached is the
  // lexicographically least index sequence among optima.
  std::function<void(const Bits&)> rec = [&](const Bits& cand) {
    int i = lowest_bit(cand);
    if (i < 0) {
      if (static_cast<int>(cur.size()) > best) {
        best = static_cast<int>(cur.size());
        best_idx = cur;
      }
      return;
    }
    if (static_cast<int>(cur.size()) + clique_cover_ub(cand) <= best) return;
    cur.push_back(i);
    rec(and_not(cand, conflict[i]));
    cur.pop_back();
    Bits without = cand;
    clear_bit(without, static_cast<size_t>(i));
    rec(without);
  };
  Bits all = make_bits(k);
  for (size_t i = 0; i < k; ++i) set_bit(all, i);
  rec(all);

  std::vector<Path> witness;
  witness.reserve(best_idx.size());
  for (int i : best_idx) witness.push_back(fam[i]);
  return {best, witness};
}

// Decision search shared by both hitting-set stages.
struct HittingSearch {
  const std::vector<Bits>& hit;        // candidate -> paths it covers
  const std::vector<Bits>& path_bits;  // path -> vertex bits (for the LB)
  const std::vector<std::vector<int>>& on_path;  // path -> candidate indices
  size_t nvert;

  // Pairwise vertex-disjoint uncovered paths each need a distinct hitter.
  int greedy_disjoint_lb(const Bits& uncovered) const {
    Bits marked = make_bits(nvert);
    int lb = 0;
    for_each_bit(uncovered, [&](size_t i) {
      if (!intersects(path_bits[i], marked)) {
        ++lb;
        bits_merge(marked, path_bits[i]);
      }
    });
    return lb;
  }

  // Smallest uncovered path by number of allowed candidates; -1 if none.
  int pick_path(const Bits& uncovered, const std::vector<char>& allowed) const {
    int bestp = -1, bestc = -1;
    for (size_t w = 0; w < uncovered.size() && bestc != 1; ++w) {
      std::uint64_t word = uncovered[w];
      while (word) {
        size_t i = w * 64 + __builtin_ctzll(word);
        word &= word - 1;
        int c = 0;
        for (int v : on_path[i])
          if (allowed[v]) ++c;
        if (bestp < 0 || c < bestc) {
          bestp = static_cast<int>(i);
          bestc = c;
        }
        if (bestc <= 1) break;
      }
    }
    return bestp;
  }

  bool cover(const Bits& uncovered, int budget,
             const std::vector<char>& allowed) const {
    if (is_zero(uncovered)) return true;
    if (budget <= 0) return false;
    if (greedy_disjoint_lb(uncovered) > budget) return false;
    int p = pick_path(uncovered, allowed);
    for (int v : on_path[p]) {
      if (!allowed[v]) continue;
      if (cover(and_not(uncovered, hit[v]), budget - 1, allowed)) return true;
    }
    return false;
  }

  // Optimizing variant for the size stage.
  void solve(const Bits& uncovered, int depth, const std::vector<char>& allowed,
             int& best) const {
    if (is_zero(uncovered)) {
      best = std::min(best, depth);
      return;
    }
    if (depth + greedy_disjoint_lb(uncovered) >= best) return;
    int p = pick_path(uncovered, allowed);
    for (int v : on_path[p]) {
      if (!allowed[v]) continue;
      solve(and_not(uncovered, hit[v]), depth + 1, allowed, best);
    }
  }
};

// allowed[u] = false for candidates dominated by another allowed candidate.
// Sound for existence/size questions only, never for lexicographic selection.
std::vector<char> dominate(const std::vector<Bits>& hit,
                           const std::vector<char>& usable) {
  size_t n = hit.size();
  std::vector<char> allowed = usable;
  for (size_t u = 0; u < n; ++u) {
    if (!allowed[u]) continue;
    for (size_t v = 0; v < n; ++v) {
      if (u == v || !usable[v] || !allowed[v]) continue;
      if (subset_of(hit[u], hit[v]) && (hit[u] != hit[v] || v < u)) {
        allowed[u] = 0;
        break;
      }
    }
  }
  return allowed;
}

std::pair<int, VertexSet> min_hitting_set_impl(const Graph& g, const VertexSet& a,
                                               const ResidueSpec& spec,
                                               const std::vector<Path>& fam) {
  if (fam.empty()) return {0, {}};
  size_t k = fam.size();

  FamilyBits fb(g, fam);
  std::vector<int> cands;
  {
    VertexSet used;
    for (const auto& p : fam) used.insert(p.v.begin(), p.v.end());
    cands.assign(used.begin(), used.end());
  }
  std::map<int, int> cidx;
  for (size_t i = 0; i < cands.size(); ++i) cidx[cands[i]] = static_cast<int>(i);

  std::vector<Bits> hit(cands.size(), make_bits(k));
  std::vector<std::vector<int>> on_path(k);
  for (size_t i = 0; i < k; ++i) {
    for (int v : fam[i].v) {
      int ci = cidx.at(v);
      set_bit(hit[ci], i);
      on_path[i].push_back(ci);
    }
    std::sort(on_path[i].begin(), on_path[i].end());
  }

  HittingSearch hs{hit, fb.path_bits, on_path, fb.nvert};
  Bits all_paths = make_bits(k);
  for (size_t i = 0; i < k; ++i) set_bit(all_paths, i);

  // Size stage under domination, seeded with a greedy cover.
  std::vector<char> allowed = dominate(hit, std::vector<char>(cands.size(), 1));
  int best = 0;
  {
    Bits uncovered = all_paths;
    while (!is_zero(uncovered)) {
      int bestv = -1, bestc = -1;
      for (size_t u = 0; u < cands.size(); ++u) {
        if (!allowed[u]) continue;
        Bits inter = hit[u];
        for (size_t w = 0; w < inter.size(); ++w) inter[w] &= uncovered[w];
        int c = popcount(inter);
        if (c > bestc) {
          bestc = c;
          bestv = static_cast<int>(u);
        }
      }
      uncovered = and_not(uncovered, hit[bestv]);
      ++best;
    }
  }
  hs.solve(all_paths, 0, allowed, best);
  int tau = best;

  // Lexicographic witness by prefix fixing over the full candidate list.
  VertexSet chosen;
  std::vector<char> open(cands.size(), 1);  // neither banned nor chosen
  Bits uncovered = all_paths;
  int budget = tau;
  for (size_t u = 0; u < cands.size() && budget > 0; ++u) {
    Bits rest = and_not(uncovered, hit[u]);
    bool take;
    if (is_zero(rest)) {
      // u completes the cover; budget must be down to its last slot, else a
      // cover smaller than tau would exist.
      if (budget != 1)
        throw std::logic_error("hitting-set lex stage found a sub-minimum cover");
      take = true;
    } else {
      std::vector<char> opts = open;
      opts[u] = 0;
      take = hs.cover(rest, budget - 1, dominate(hit, opts));
    }
    if (take) {
      chosen.insert(cands[u]);
      uncovered = std::move(rest);
      --budget;
    }
    open[u] = 0;
  }
  if (budget != 0 || !is_zero(uncovered))
    throw std::logic_error("hitting-set witness reconstruction failed");
  if (find_zero_a_path(g.minus(chosen), a, spec).has_value())
    throw std::logic_error("hitting-set witness fails independent re-check");
  return {tau, chosen};
}

}  // namespace

std::pair<int, std::vector<Path>> max_packing(const Graph& g, const VertexSet& a,
                                              const ResidueSpec& spec,
                                              long long cap) {
  return max_packing_impl(g, enumerate_a_paths(g, a, spec, cap));
}

std::pair<int, VertexSet> min_hitting_set(const Graph& g, const VertexSet& a,
                                          const ResidueSpec& spec,
                                          long long cap) {
  return min_hitting_set_impl(g, a, spec, enumerate_a_paths(g, a, spec, cap));
}

DualityReport duality_report(const Graph& g, const VertexSet& a,
                             const ResidueSpec& spec, long long cap) {
  std::vector<Path> fam = enumerate_a_paths(g, a, spec, cap);
  DualityReport r;
  auto [nu, pack] = max_packing_impl(g, fam);
  auto [tau, cover] = min_hitting_set_impl(g, a, spec, fam);
  r.packing_number = nu;
  r.packing_witness = std::move(pack);
  r.covering_number = tau;
  r.covering_witness = std::move(cover);
  r.path_family_size = static_cast<long long>(fam.size());
  r.exact = true;
  if (r.packing_number > r.covering_number)
    throw std::logic_error("weak duality violated");
  return r;
}

SeparationClass classify_separation(const Graph& g, const VertexSet& a,
                                    const ResidueSpec& spec, const Separation& s) {
  Graph rest = g.minus(a);
  if (!is_valid_separation(rest, s))
    throw std::invalid_argument("not a separation of g - a");
  VertexSet left = a, right = a;
  left.insert(s.left.begin(), s.left.end());
  right.insert(s.right.begin(), s.right.end());
  bool l = find_zero_a_path(g.induced(left), a, spec).has_value();
  bool r = find_zero_a_path(g.induced(right), a, spec).has_value();
  if (l && r) return SeparationClass::Both;
  if (l) return SeparationClass::LeftOnly;
  if (r) return SeparationClass::RightOnly;
  return SeparationClass::Neither;
}

}  // namespace zeropath
