#pragma once

// The quiver Q_w of a (co)minuscule reduced word.
//
// Vertices are the positions 1..r of the word; vertex i has color b_i. There
// is an arrow i -> j when the colors do not commute and i < j < s(i), with
// s(i) the next position of the same color. The partial order is reachability
// along arrows (i above j when a path i -> ... -> j exists), so peaks are the
// vertices without incoming arrows and vertex r is the unique minimal vertex.

#include <minuscule/weyl.hpp>

#include <utility>
#include <vector>

namespace minuscule {

using Arrow = std::pair<int, int>;

class MinusculeQuiver {
 public:
  MinusculeQuiver() = default;

  const std::string& system_name() const { return system_; }
  char type_letter() const { return system_.front(); }
  int rank() const { return static_cast<int>(pairings_.rows()); }
  int omega() const { return omega_; }
  Variant variant() const { return variant_; }
  const Word& word() const { return word_; }

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }
  int color(int v) const { return word_.at(v - 1); }
  /// Next / previous vertex of the same color, 0 when absent.
  int successor(int v) const { return successor_.at(v - 1); }
  int predecessor(int v) const { return predecessor_.at(v - 1); }

  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<int>& targets(int v) const { return out_.at(v - 1); }
  const std::vector<int>& sources(int v) const { return in_.at(v - 1); }
  bool has_arrow(int from, int to) const;

  /// upper >= lower in the quiver order (reflexive).
  bool above(int upper, int lower) const { return reach_.at(upper - 1).at(lower - 1) != 0; }

  /// Pairing <alpha_a^vee, alpha_b> used by the shape conditions; transposed
  /// Cartan entry for the cominuscule variant.
  int color_pairing(int a, int b) const { return pairings_(a - 1, b - 1); }

  /// Original vertex number of each vertex when this quiver was cut out of a
  /// larger one; identity otherwise.
  int origin(int v) const { return origin_.at(v - 1); }
  const std::vector<int>& origins() const { return origin_; }

  /// Builds the colored DAG of any word without checking reducedness or the
  /// minuscule property.
  static MinusculeQuiver from_word(const RootSystem& rs, const Word& word, int omega, Variant variant);
  /// Same, reusing the pairing table of `like` (used for sub-quivers and
  /// gluing, where the root system object is not at hand).
  static MinusculeQuiver from_word(const MinusculeQuiver& like, const Word& word, int omega);

 private:
  void finish();

  friend MinusculeQuiver remove_maximal_vertex(const MinusculeQuiver& q, int v);
  friend MinusculeQuiver induced_quiver(const MinusculeQuiver& q, const std::vector<int>& vertices);

  std::string system_ = "A1";
  int omega_ = 1;
  Variant variant_ = Variant::Minuscule;
  Word word_;
  IMatrix pairings_ = IMatrix::Zero(1, 1);
  std::vector<int> successor_, predecessor_, origin_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<std::vector<char>> reach_;
};

/// Checked construction: the word must be reduced and (co)minuscule for omega.
MinusculeQuiver build_quiver(const RootSystem& rs, const Word& word, int omega, Variant variant);

std::vector<int> peaks(const MinusculeQuiver& q);
std::vector<int> minimal_vertices(const MinusculeQuiver& q);

/// h(i) = 1 + length of the longest arrow path from i to vertex r; 0 for a
/// vertex with no path to r. Index v-1 holds h(v).
std::vector<int> heights(const MinusculeQuiver& q);

/// Shape conditions for (co)minuscule quivers: the last color is omega, and
/// every other vertex has either one target of pairing -1 (no successor) or
/// two targets of pairing -1 / one target of pairing -2 (with successor).
bool check_minuscule_shape(const MinusculeQuiver& q);
bool check_minuscule_shape(const RootSystem& rs, const Word& word, int omega, Variant variant);

/// Vertices h without predecessor such that gluing color b_h on top still
/// satisfies the shape conditions. Empty for type C minuscule quivers.
std::vector<int> holes(const MinusculeQuiver& q);

/// Quiver of the word with the peak v deleted; InputError if v is not a peak.
MinusculeQuiver remove_maximal_vertex(const MinusculeQuiver& q, int v);

/// Lexicographically smallest color sequence among the linear extensions of
/// the order (larger vertices first).
Word canonical_word(const MinusculeQuiver& q);

/// Sub-quiver on the given original vertices, rebuilt from the colors read in
/// ascending order. Its omega is the color of its last vertex.
MinusculeQuiver induced_quiver(const MinusculeQuiver& q, const std::vector<int>& vertices);

}  // namespace minuscule
