#pragma once

// Invariant suite over one (co)minuscule quotient W / W_P: every check runs
// the library against an independent brute-force oracle and tallies the
// outcome per element.

#include <minuscule/divisors.hpp>

#include <string>
#include <vector>

namespace minuscule {

struct CheckTally {
  std::string name;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::vector<std::string> witnesses;  // first few failures
};

struct SuiteOptions {
  OracleBounds bounds;
  CoverOptions cover;
  /// Shape equivalence walks all of W; skipped above this group order.
  std::size_t max_group = 10'000;
  /// Bruhat comparison is quadratic in the quotient size.
  std::size_t max_quotient = 200;
  std::size_t max_witnesses = 5;
};

struct SuiteReport {
  std::string system;
  int omega = 0;
  Variant variant = Variant::Minuscule;
  int elements = 0;
  std::vector<CheckTally> checks;
  bool ok() const;
};

SuiteReport run_invariant_suite(const RootSystem& rs, int omega, Variant variant, const SuiteOptions& options = {});

/// leq[a][b] != 0 iff elements[a] <= elements[b] in the reflexive-transitive
/// closure of peak removals. Words must be the canonical words of the
/// quotient.
std::vector<std::vector<char>> quiver_bruhat_order(const RootSystem& rs, const std::vector<Word>& elements, int omega,
                                                   Variant variant);

}  // namespace minuscule
