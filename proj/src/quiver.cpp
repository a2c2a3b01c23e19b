#include <minuscule/quiver.hpp>

#include <algorithm>

namespace minuscule {

namespace {

IMatrix variant_pairings(const RootSystem& rs, Variant variant) {
  return variant == Variant::Minuscule ? IMatrix(rs.cartan()) : IMatrix(rs.cartan().transpose());
}

}  // namespace

MinusculeQuiver MinusculeQuiver::from_word(const RootSystem& rs, const Word& word, int omega, Variant variant) {
  validate_word(rs, word);
  MinusculeQuiver q;
  q.system_ = rs.name();
  q.omega_ = omega;
  q.variant_ = variant;
  q.word_ = word;
  q.pairings_ = variant_pairings(rs, variant);
  q.origin_.resize(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) q.origin_[k] = static_cast<int>(k) + 1;
  q.finish();
  return q;
}

MinusculeQuiver MinusculeQuiver::from_word(const MinusculeQuiver& like, const Word& word, int omega) {
  MinusculeQuiver q;
  q.system_ = like.system_;
  q.omega_ = omega;
  q.variant_ = like.variant_;
  q.word_ = word;
  q.pairings_ = like.pairings_;
  for (int letter : word) {
    if (letter < 1 || letter > q.rank()) throw InputError("letter out of range in quiver word");
  }
  q.origin_.resize(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) q.origin_[k] = static_cast<int>(k) + 1;
  q.finish();
  return q;
}

void MinusculeQuiver::finish() {
  const int r = size();
  successor_.assign(r, 0);
  predecessor_.assign(r, 0);
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      if (word_[j - 1] == word_[i - 1]) {
        successor_[i - 1] = j;
        predecessor_[j - 1] = i;
        break;
      }
    }
  }
  arrows_.clear();
  out_.assign(r, {});
  in_.assign(r, {});
  for (int i = 1; i <= r; ++i) {
    const int stop = successor_[i - 1] ? successor_[i - 1] : r + 1;
    for (int j = i + 1; j < stop; ++j) {
      if (pairings_(word_[i - 1] - 1, word_[j - 1] - 1) == 0) continue;
      arrows_.emplace_back(i, j);
      out_[i - 1].push_back(j);
      in_[j - 1].push_back(i);
    }
  }
  // Arrows only increase the index, so a reverse sweep closes reachability.
  reach_.assign(r, std::vector<char>(r, 0));
  for (int i = r; i >= 1; --i) {
    auto& row = reach_[i - 1];
    row[i - 1] = 1;
    for (int j : out_[i - 1]) {
      const auto& below = reach_[j - 1];
      for (int k = 0; k < r; ++k) row[k] |= below[k];
    }
  }
}

bool MinusculeQuiver::has_arrow(int from, int to) const {
  const auto& t = targets(from);
  return std::find(t.begin(), t.end(), to) != t.end();
}

MinusculeQuiver build_quiver(const RootSystem& rs, const Word& word, int omega, Variant variant) {
  validate_word(rs, word);
  if (!is_reduced(rs, word)) throw InputError("build_quiver: word " + format_word(word) + " is not reduced");
  if (!is_minuscule_element(rs, word, omega, variant)) {
    throw InputError("build_quiver: word " + format_word(word) + " is not " + to_string(variant) + " for omega_" +
                     std::to_string(omega) + " in " + rs.name());
  }
  MinusculeQuiver q = MinusculeQuiver::from_word(rs, word, omega, variant);
  if (!check_minuscule_shape(q)) {
    throw InvariantViolation("quiver of (co)minuscule word " + format_word(word) + " fails the shape conditions");
  }
  return q;
}

std::vector<int> peaks(const MinusculeQuiver& q) {
  std::vector<int> out;
  for (int v = 1; v <= q.size(); ++v) {
    if (q.sources(v).empty()) out.push_back(v);
  }
  return out;
}

std::vector<int> minimal_vertices(const MinusculeQuiver& q) {
  std::vector<int> out;
  for (int v = 1; v <= q.size(); ++v) {
    if (q.targets(v).empty()) out.push_back(v);
  }
  return out;
}

std::vector<int> heights(const MinusculeQuiver& q) {
  const int r = q.size();
  std::vector<int> h(r, 0);
  if (r == 0) return h;
  h[r - 1] = 1;
  for (int i = r - 1; i >= 1; --i) {
    for (int j : q.targets(i)) {
      if (h[j - 1] > 0) h[i - 1] = std::max(h[i - 1], h[j - 1] + 1);
    }
  }
  return h;
}

bool check_minuscule_shape(const MinusculeQuiver& q) {
  const int r = q.size();
  if (r == 0) return true;
  if (q.color(r) != q.omega()) return false;
  for (int i = 1; i < r; ++i) {
    const auto& t = q.targets(i);
    const int c = q.color(i);
    if (q.successor(i) == 0) {
      if (t.size() != 1 || q.color_pairing(c, q.color(t[0])) != -1) return false;
    } else {
      const bool two_simple = t.size() == 2 && q.color_pairing(c, q.color(t[0])) == -1 &&
                              q.color_pairing(c, q.color(t[1])) == -1;
      const bool one_double = t.size() == 1 && q.color_pairing(c, q.color(t[0])) == -2;
      if (!two_simple && !one_double) return false;
    }
  }
  return true;
}

bool check_minuscule_shape(const RootSystem& rs, const Word& word, int omega, Variant variant) {
  return check_minuscule_shape(MinusculeQuiver::from_word(rs, word, omega, variant));
}

std::vector<int> holes(const MinusculeQuiver& q) {
  std::vector<int> out;
  if (q.type_letter() == 'C' && q.variant() == Variant::Minuscule) return out;
  for (int h = 1; h <= q.size(); ++h) {
    if (q.predecessor(h) != 0) continue;
    Word glued{q.color(h)};
    glued.insert(glued.end(), q.word().begin(), q.word().end());
    if (check_minuscule_shape(MinusculeQuiver::from_word(q, glued, q.omega()))) out.push_back(h);
  }
  return out;
}

MinusculeQuiver remove_maximal_vertex(const MinusculeQuiver& q, int v) {
  const auto p = peaks(q);
  if (std::find(p.begin(), p.end(), v) == p.end()) {
    throw InputError("remove_maximal_vertex: vertex " + std::to_string(v) + " is not a peak");
  }
  std::vector<int> kept;
  for (int u = 1; u <= q.size(); ++u) {
    if (u != v) kept.push_back(u);
  }
  Word word;
  for (int u : kept) word.push_back(q.color(u));
  MinusculeQuiver out = MinusculeQuiver::from_word(q, word, q.omega());
  for (int k = 0; k < out.size(); ++k) out.origin_[k] = q.origin(kept[k]);
  if (!check_minuscule_shape(out)) {
    throw InvariantViolation("removing peak " + std::to_string(v) + " broke the shape conditions");
  }
  return out;
}

Word canonical_word(const MinusculeQuiver& q) {
  const int r = q.size();
  std::vector<int> pending(r);
  for (int v = 1; v <= r; ++v) pending[v - 1] = static_cast<int>(q.sources(v).size());
  std::vector<char> placed(r, 0);
  Word out;
  for (int step = 0; step < r; ++step) {
    int best = 0;
    for (int v = 1; v <= r; ++v) {
      if (placed[v - 1] || pending[v - 1] != 0) continue;
      if (best == 0 || q.color(v) < q.color(best)) best = v;
    }
    if (best == 0) throw InvariantViolation("quiver order has a cycle");
    placed[best - 1] = 1;
    out.push_back(q.color(best));
    for (int t : q.targets(best)) --pending[t - 1];
  }
  return out;
}

MinusculeQuiver induced_quiver(const MinusculeQuiver& q, const std::vector<int>& vertices) {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  Word word;
  for (int v : sorted) word.push_back(q.color(v));
  const int omega = word.empty() ? q.omega() : word.back();
  MinusculeQuiver out = MinusculeQuiver::from_word(q, word, omega);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    out.origin_[k] = q.origin(sorted[k]);
  }
  return out;
}

}  // namespace minuscule
