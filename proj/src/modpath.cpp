#include "zeropath/modpath.hpp"

#include <algorithm>
#include <functional>

namespace zeropath {

bool is_a_path(const Graph& g, const VertexSet& a, const Path& p) {
  if (!is_simple_path(g, p)) return false;
  if (p.v.size() < 2) return false;
  if (!a.count(p.front()) || !a.count(p.back())) return false;
  for (size_t i = 1; i + 1 < p.v.size(); ++i)
    if (a.count(p.v[i])) return false;
  return true;
}

namespace {

// DFS from each A-vertex in ascending order, extending through non-A vertices
// with ascending neighbors. A path is completed when it reaches an A-vertex
// larger than its start, which makes each reversal class appear exactly once.
// emit returns false to stop the whole enumeration early.
void walk_a_paths(const Graph& g, const VertexSet& a,
                  const std::function<bool(const Path&)>& emit) {
  std::vector<int> stack;
  VertexSet on_path;
  bool stop = false;

  std::function<void(int)> extend = [&](int start) {
    int cur = stack.back();
    for (int nxt : g.neighbors(cur)) {
      if (stop) return;
      if (on_path.count(nxt)) continue;
      if (a.count(nxt)) {
        if (nxt > start) {
          Path p;
          p.v = stack;
          p.v.push_back(nxt);
          if (!emit(p)) {
            stop = true;
            return;
          }
        }
        continue;
      }
      stack.push_back(nxt);
      on_path.insert(nxt);
      extend(start);
      on_path.erase(nxt);
      stack.pop_back();
    }
  };

  for (int s : a) {
    if (stop) return;
    if (!g.has_vertex(s)) continue;
    stack.assign(1, s);
    on_path = {s};
    extend(s);
  }
}

}  // namespace

std::vector<Path> enumerate_a_paths(const Graph& g, const VertexSet& a,
                                    const ResidueSpec& spec, long long cap) {
  std::vector<Path> out;
  long long completed = 0;
  bool overflowed = false;
  walk_a_paths(g, a, [&](const Path& p) {
    ++completed;
    if (cap > 0 && completed > cap) {
      overflowed = true;
      return false;
    }
    if (spec.accepts(p.length())) out.push_back(p);
    return true;
  });
  if (overflowed)
    throw EnumerationOverflow("A-path enumeration exceeded cap of " +
                              std::to_string(cap));
  return out;
}

std::optional<Path> find_zero_a_path(const Graph& g, const VertexSet& a,
                                     const ResidueSpec& spec) {
  std::optional<Path> found;
  walk_a_paths(g, a, [&](const Path& p) {
    if (spec.accepts(p.length())) {
      found = p;
      return false;
    }
    return true;
  });
  return found;
}

std::vector<Path> gamma_nonzero_a_paths(const Graph& g, const VertexSet& a,
                                        long long cap) {
  if (!g.labelled()) throw std::invalid_argument("graph carries no labels");
  std::vector<Path> out;
  long long completed = 0;
  bool overflowed = false;
  walk_a_paths(g, a, [&](const Path& p) {
    ++completed;
    if (cap > 0 && completed > cap) {
      overflowed = true;
      return false;
    }
    if (path_weight(g, p) != 0) out.push_back(p);
    return true;
  });
  if (overflowed)
    throw EnumerationOverflow("A-path enumeration exceeded cap of " +
                              std::to_string(cap));
  return out;
}

}  // namespace zeropath
