#pragma once

// Peak decompositions of Q_w and the classification of Q-factorializations
// and IH-small resolutions.
//
// An ordering (p_1, ..., p_s) of the peaks cuts the quiver iteratively: at
// step i the remaining quiver keeps the vertices lying below some other
// remaining peak, and the rest is the part of p_i. Each part has one peak and
// one minimal vertex; the parts determine the intermediate variety, so two
// orderings producing the same part sequence are the same decomposition.

#include <minuscule/quiver.hpp>

#include <vector>

namespace minuscule {

using VertexSet = std::vector<int>;  // sorted vertex numbers of the base quiver

struct PeakSplit {
  VertexSet part;
  VertexSet remainder;
};

struct PeakDecomposition {
  MinusculeQuiver base;
  std::vector<int> ordering;
  std::vector<VertexSet> parts;
  std::vector<Word> part_words;
  /// m_i of each part, in part order.
  std::vector<int> minimal_vertices;
  /// Holes of each part's own quiver, in base numbering.
  std::vector<VertexSet> part_holes;
  bool neat = false;
  bool smooth = false;
};

struct DecompositionClass {
  PeakDecomposition decomposition;  // built from the first ordering below
  std::vector<std::vector<int>> orderings;
  bool neat = false;  // some producing ordering is neat
  bool smooth = false;
  bool ih_small() const { return neat && smooth; }
};

struct ClassificationReport {
  MinusculeQuiver quiver;
  std::vector<DecompositionClass> decompositions;
  int qfact_count() const { return static_cast<int>(decompositions.size()); }
  int ih_small_count() const;
};

/// Split of the whole quiver at peak p.
PeakSplit split_at_peak(const MinusculeQuiver& q, int p);
/// Split of the sub-quiver spanned by `within` (a down-closed vertex set) at
/// its peak p.
PeakSplit split_at_peak(const MinusculeQuiver& q, const VertexSet& within, int p);

/// Peaks of the sub-quiver spanned by `within`.
VertexSet peaks_within(const MinusculeQuiver& q, const VertexSet& within);

PeakDecomposition decompose(const RootSystem& rs, const MinusculeQuiver& q, const std::vector<int>& ordering);

/// Peak heights nondecreasing along the ordering.
bool is_neat(const PeakDecomposition& d);
/// Every part's quiver is hole-free.
bool is_smooth(const PeakDecomposition& d);

/// All s! orderings, merged by part sequence and sorted by it.
std::vector<DecompositionClass> enumerate_decompositions(const RootSystem& rs, const MinusculeQuiver& q,
                                                         int max_peaks = 8);

ClassificationReport classify(const RootSystem& rs, const MinusculeQuiver& q, int max_peaks = 8);

}  // namespace minuscule
