#pragma once

// Exhaustive search for BM-special Triple O'Nans.
//
// Canonical frame: the line through T is [1,0,0] and its diagonal point is
// V = (0,0,1). The translations act regularly on the q^3 affine points, so
// every BM-special configuration is the image of exactly q^3 canonical ones
// counted over all choices of diagonal point: total = q^3 * canonical.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "unital_lab/onan.hpp"
#include "unital_lab/unital.hpp"

namespace unital_lab {

struct SearchReport {
  std::uint32_t q = 0;
  bool a_square = false;
  Fq2 a, b;
  std::uint64_t tuples = 0;         // ordered (x, k, j, s, t) passing the equations
  std::uint64_t configurations = 0; // distinct six-line sets
  std::uint64_t total = 0;          // q^3 * configurations
  double wall_ms = 0;
  unsigned threads = 1;
  // enumeration bounds
  std::uint64_t x_values = 0;
  std::uint64_t kj_pairs = 0;   // ordered (k, j) over all x
  std::uint64_t st_pairs = 0;   // ordered (s, t) per (k, j)
  std::uint64_t tested = 0;     // (x, k, j, s, t) reaching the M/N test
};

struct SearchResult {
  SearchReport report;
  /// One representative per configuration (the first tuple in loop order),
  /// sorted by configuration id.
  std::vector<TripleOnanParams> params;
  std::vector<TripleOnanConfig> configs;
};

/// Rejects the classical unital (InvalidParameters). Throws InvariantViolation
/// if the tuple count is not exactly four times the configuration count.
SearchResult canonical_search(const Unital& u, unsigned threads = 1);

struct InvarianceVerdict {
  bool equal = false;
  std::uint64_t common = 0;
  std::vector<std::pair<UnitalParams, std::uint64_t>> counts;
};
/// All pairs must be valid, non-classical and share the character of a
/// (InvalidParameters otherwise).
InvarianceVerdict count_invariance_check(const std::vector<std::pair<Fq2, Fq2>>& ab, unsigned threads = 1);

struct OracleResult {
  std::set<ConfigId> configs;
  std::uint64_t quadrangles_checked = 0;
  bool sliced = false;
};
/// Brute force over the point set: a pair {X, Y} of unital points on a line
/// through T, a pair {P, Q} of other unital points, then V, M, N membership.
/// With slice_special_line only the line [1,0,0] is used for {X, Y}.
/// Throws ResourceCap when more than cap quadrangles would be checked.
OracleResult direct_enumeration_oracle(const Unital& u, std::uint64_t cap, bool slice_special_line = false);

/// Images of the canonical configurations under all q^3 translations
/// (or only the q maps phi_t when restricted to the special line).
std::set<ConfigId> translate_configs(const Unital& u, const std::vector<TripleOnanConfig>& configs,
                                     bool only_phi = false);

/// Image of a configuration under a collineation fixing U.
TripleOnanConfig map_config(const Collineation& g, const TripleOnanConfig& c);

}  // namespace unital_lab
