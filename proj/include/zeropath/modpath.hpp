#pragma once

#include <optional>
#include <vector>

#include "zeropath/graph.hpp"

namespace zeropath {

// Length class "≡ residue (mod modulus)". modulus 1 is the all-residues spec
// (every A-path qualifies); the default is the zero class mod 4.
struct ResidueSpec {
  int modulus = 4;
  int residue = 0;

  ResidueSpec() = default;
  ResidueSpec(int m, int d) : modulus(m), residue(d) {
    if (m < 1) throw std::invalid_argument("modulus must be >= 1");
    if (d < 0 || d >= m) throw std::invalid_argument("residue out of range");
  }

  static ResidueSpec any() { return ResidueSpec(1, 0); }
  bool all_residues() const { return modulus == 1; }
  bool accepts(int length) const { return length >= 0 && length % modulus == residue; }
};

// Enumeration hit its path cap; results would be partial.
class EnumerationOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// True iff p is a simple path of g whose endpoints are two distinct vertices
// of a and whose interior avoids a. A single edge inside a qualifies.
bool is_a_path(const Graph& g, const VertexSet& a, const Path& p);

// All simple A-paths with length ≡ spec, one per reversal class (lower
// endpoint first), in deterministic DFS order. The cap counts completed
// A-paths of every residue; exceeding it throws EnumerationOverflow.
// cap <= 0 disables the cap.
std::vector<Path> enumerate_a_paths(const Graph& g, const VertexSet& a,
                                    const ResidueSpec& spec,
                                    long long cap = 1000000);

// First qualifying A-path in the enumeration order, without a cap.
std::optional<Path> find_zero_a_path(const Graph& g, const VertexSet& a,
                                     const ResidueSpec& spec);

// All A-paths of non-zero weight under the graph's edge labelling.
std::vector<Path> gamma_nonzero_a_paths(const Graph& g, const VertexSet& a,
                                        long long cap = 1000000);

}  // namespace zeropath
