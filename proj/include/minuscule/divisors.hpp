#pragma once

// Divisor classes on the Bott-Samelson and intermediate varieties, kept as
// exact coordinate vectors.
//
//   xi basis   : one class per quiver vertex (dimension r)
//   dhat basis : one class per peak (dimension s); effective cone = orthant
//
// L_i = sum_{k >= i} lambda^k_i xi_k with
//   lambda^k_i = [b_k = b_i] + sum_{k < j <= i, b_j = b_i} <gamma_k^vee, gamma_j>,
// and the nef cone of a decomposition is spanned by the dhat coordinates
// (lambda^p_m)_p of L_m for the minimal vertices m of its parts.

#include <minuscule/decomp.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace minuscule {

enum class Basis { Xi, DHat };

struct DivisorClass {
  Basis basis = Basis::DHat;
  /// Vertex numbers (xi) or peak numbers (dhat) labelling the coordinates.
  std::vector<int> labels;
  QVector coords;

  bool effective() const { return (coords.array() >= Rational(0)).all(); }
};

struct ConeDescription {
  Basis basis = Basis::DHat;
  std::vector<int> peaks;
  /// One generator per column.
  QMatrix generators;
  /// Vertex whose line bundle gives each column; empty for the orthant.
  std::vector<int> generator_vertices;
  bool simplicial = true;
};

std::vector<QVector> gamma_roots(const RootSystem& rs, const Word& word);

/// (i-1, j-1) entry: <gamma_i^vee, gamma_j>.
IMatrix gamma_pairings(const RootSystem& rs, const Word& word);

/// (k-1, i-1) entry: lambda^k_i for k above i, zero elsewhere.
IMatrix lambda_matrix(const RootSystem& rs, const MinusculeQuiver& q);

/// lambda^k_i for exactly the vertices k above i (including i).
std::map<int, int> lambda_coeffs(const RootSystem& rs, const MinusculeQuiver& q, int i);
/// Same, with the order taken from the word's own quiver.
std::map<int, int> lambda_coeffs(const RootSystem& rs, const Word& word, int i);

/// L_i in the xi basis.
DivisorClass line_bundle_xi(const RootSystem& rs, const MinusculeQuiver& q, int i);

/// Pushforward of L_i to the dhat basis: (lambda^p_i)_{p in peaks}.
DivisorClass pushforward_to_dhat(const RootSystem& rs, const MinusculeQuiver& q, int i);

ConeDescription nef_cone(const RootSystem& rs, const PeakDecomposition& d);
ConeDescription effective_cone(const MinusculeQuiver& q);

/// Checks <gamma_i^vee, gamma_j> >= 0 and lambda^k_i >= 0 for a (co)minuscule
/// quiver; InvariantViolation names the first offending entry.
void check_line_bundle_positivity(const RootSystem& rs, const MinusculeQuiver& q);

struct PeelStep {
  int vertex = 0;
  Rational mu;
};

struct PeelResult {
  std::vector<int> ordering;
  std::vector<PeelStep> steps;
  PeakDecomposition decomposition;
};

/// Writes an effective dhat class as a nonnegative combination of the nef
/// generators of one decomposition. InputError on negative coordinates.
PeelResult peel(const RootSystem& rs, const MinusculeQuiver& q, const DivisorClass& divisor);

struct CoverReport {
  bool ok = true;
  int peaks = 0;
  /// Distinct nef cones, one per set of minimal vertices m_w.
  int cones = 0;
  int samples_peeled = 0;
  bool exact_checked = false;
  /// Sum over nef cones of the normalized volume of their slice by
  /// sum(x) = 1; equals 1 when the cones tile the orthant.
  Rational volume_sum;
  std::vector<std::string> failures;
};

struct CoverOptions {
  int samples = 1000;
  std::uint64_t seed = 0x5eed;
  int max_peaks = 8;
  int max_denominator = 1000;
};

CoverReport verify_mds_cover(const RootSystem& rs, const MinusculeQuiver& q, const CoverOptions& options = {});

}  // namespace minuscule
