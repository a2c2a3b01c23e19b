#include <minuscule/decomp.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace minuscule {

namespace {

VertexSet all_vertices(const MinusculeQuiver& q) {
  VertexSet out(q.size());
  std::iota(out.begin(), out.end(), 1);
  return out;
}

bool contains(const VertexSet& set, int v) { return std::binary_search(set.begin(), set.end(), v); }

std::string describe(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? "," : "") + std::to_string(values[k]);
  return out + ")";
}

}  // namespace

int ClassificationReport::ih_small_count() const {
  return static_cast<int>(
      std::count_if(decompositions.begin(), decompositions.end(), [](const auto& c) { return c.ih_small(); }));
}

VertexSet peaks_within(const MinusculeQuiver& q, const VertexSet& within) {
  VertexSet out;
  for (int v : within) {
    const auto& src = q.sources(v);
    if (std::none_of(src.begin(), src.end(), [&](int u) { return contains(within, u); })) out.push_back(v);
  }
  return out;
}

PeakSplit split_at_peak(const MinusculeQuiver& q, int p) { return split_at_peak(q, all_vertices(q), p); }

PeakSplit split_at_peak(const MinusculeQuiver& q, const VertexSet& within, int p) {
  const VertexSet tops = peaks_within(q, within);
  if (!contains(tops, p)) throw InputError("split_at_peak: vertex " + std::to_string(p) + " is not a peak");
  PeakSplit split;
  for (int i : within) {
    const bool below_other = std::any_of(tops.begin(), tops.end(), [&](int t) { return t != p && q.above(t, i); });
    (below_other ? split.remainder : split.part).push_back(i);
  }
  return split;
}

PeakDecomposition decompose(const RootSystem& rs, const MinusculeQuiver& q, const std::vector<int>& ordering) {
  if (rs.name() != q.system_name()) throw InputError("decompose: root system does not match the quiver");
  const VertexSet tops = peaks(q);
  std::vector<int> sorted_ordering = ordering;
  std::sort(sorted_ordering.begin(), sorted_ordering.end());
  if (sorted_ordering != tops) {
    throw InputError("decompose: ordering " + describe(ordering) + " is not a permutation of the peaks " +
                     describe(tops));
  }

  PeakDecomposition d;
  d.base = q;
  d.ordering = ordering;
  VertexSet remaining = all_vertices(q);
  for (int p : ordering) {
    PeakSplit split = split_at_peak(q, remaining, p);
    d.parts.push_back(std::move(split.part));
    remaining = std::move(split.remainder);
  }
  if (!remaining.empty()) throw InvariantViolation("decompose: vertices left after the last peak");

  const auto h = heights(q);
  int total_length = 0;
  Word product;
  for (const auto& part : d.parts) {
    const MinusculeQuiver sub = induced_quiver(q, part);
    const auto sub_peaks = peaks(sub);
    const auto sub_minima = minimal_vertices(sub);
    if (sub_peaks.size() != 1 || sub_minima.size() != 1) {
      throw InvariantViolation("decompose: part " + describe(part) + " has " + std::to_string(sub_peaks.size()) +
                               " peaks and " + std::to_string(sub_minima.size()) + " minimal vertices");
    }
    // The part's own quiver must coincide with the induced sub-quiver.
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        const int u = static_cast<int>(a) + 1;
        const int v = static_cast<int>(b) + 1;
        if (sub.has_arrow(u, v) != q.has_arrow(part[a], part[b])) {
          throw InvariantViolation("decompose: quiver of part " + describe(part) + " differs from the induced one");
        }
      }
    }
    if (!is_reduced(rs, sub.word())) {
      throw InvariantViolation("decompose: part word " + format_word(sub.word()) + " is not reduced");
    }
    total_length += length(rs, sub.word());
    product.insert(product.end(), sub.word().begin(), sub.word().end());

    d.part_words.push_back(sub.word());
    d.minimal_vertices.push_back(sub.origin(sub_minima.front()));
    VertexSet part_holes;
    for (int hole : holes(sub)) part_holes.push_back(sub.origin(hole));
    d.part_holes.push_back(std::move(part_holes));
  }
  if (total_length != length(rs, q.word()) || element_key(rs, product) != element_key(rs, q.word())) {
    throw InvariantViolation("decompose: part words do not multiply to w with additive lengths");
  }

  d.neat = true;
  for (std::size_t k = 0; k + 1 < ordering.size(); ++k) {
    if (h[ordering[k] - 1] > h[ordering[k + 1] - 1]) d.neat = false;
  }
  d.smooth = std::all_of(d.part_holes.begin(), d.part_holes.end(), [](const auto& set) { return set.empty(); });
  return d;
}

bool is_neat(const PeakDecomposition& d) {
  const auto h = heights(d.base);
  for (std::size_t k = 0; k + 1 < d.ordering.size(); ++k) {
    if (h[d.ordering[k] - 1] > h[d.ordering[k + 1] - 1]) return false;
  }
  return true;
}

bool is_smooth(const PeakDecomposition& d) {
  for (const auto& part : d.parts) {
    if (!holes(induced_quiver(d.base, part)).empty()) return false;
  }
  return true;
}

std::vector<DecompositionClass> enumerate_decompositions(const RootSystem& rs, const MinusculeQuiver& q,
                                                         int max_peaks) {
  std::vector<int> ordering = peaks(q);
  if (static_cast<int>(ordering.size()) > max_peaks) {
    throw ResourceError("enumerate_decompositions: " + std::to_string(ordering.size()) + " peaks exceed bound " +
                        std::to_string(max_peaks));
  }
  std::map<std::vector<VertexSet>, DecompositionClass> classes;
  do {
    PeakDecomposition d = decompose(rs, q, ordering);
    auto it = classes.find(d.parts);
    if (it == classes.end()) {
      DecompositionClass c;
      c.orderings.push_back(ordering);
      c.neat = d.neat;
      c.smooth = d.smooth;
      std::vector<VertexSet> key = d.parts;
      c.decomposition = std::move(d);
      classes.emplace(std::move(key), std::move(c));
    } else {
      auto& c = it->second;
      if (d.part_words != c.decomposition.part_words || d.minimal_vertices != c.decomposition.minimal_vertices ||
          d.smooth != c.smooth) {
        throw InvariantViolation("enumerate_decompositions: equal parts with different data");
      }
      c.orderings.push_back(ordering);
      c.neat = c.neat || d.neat;
    }
  } while (std::next_permutation(ordering.begin(), ordering.end()));

  std::vector<DecompositionClass> out;
  out.reserve(classes.size());
  for (auto& [key, c] : classes) out.push_back(std::move(c));
  return out;
}

ClassificationReport classify(const RootSystem& rs, const MinusculeQuiver& q, int max_peaks) {
  ClassificationReport report;
  report.quiver = q;
  report.decompositions = enumerate_decompositions(rs, q, max_peaks);
  return report;
}

}  // namespace minuscule
