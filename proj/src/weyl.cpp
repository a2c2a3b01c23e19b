#include <minuscule/weyl.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace minuscule {

namespace {

QVector coroot(const RootSystem& rs, int i) {
  const QVector& a = rs.simple_root(i);
  return a * (Rational(2) / a.dot(a));
}

void require_reduced(const RootSystem& rs, const Word& word, const char* what) {
  if (!is_reduced(rs, word)) throw InputError(std::string(what) + ": word " + format_word(word) + " is not reduced");
}

}  // namespace

Word parse_word(const std::string& text) {
  Word word;
  if (text.find_first_not_of(" \t") == std::string::npos) return word;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("malformed word '" + text + "': empty letter");
    token = token.substr(first, last - first + 1);
    if (!std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }) || token.size() > 4) {
      throw InputError("malformed word '" + text + "': letter '" + token + "' is not a positive integer");
    }
    word.push_back(std::stoi(token));
  }
  return word;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(word[k]);
  }
  return out;
}

void validate_word(const RootSystem& rs, const Word& word) {
  for (int letter : word) {
    if (letter < 1 || letter > rs.rank()) {
      throw InputError("letter " + std::to_string(letter) + " out of range [1," + std::to_string(rs.rank()) + "] for " +
                       rs.name());
    }
  }
}

QMatrix element_matrix(const RootSystem& rs, const Word& word) {
  validate_word(rs, word);
  const Eigen::Index dim = rs.ambient_dimension();
  QMatrix m = QMatrix::Identity(dim, dim);
  // M s_i = M - (M alpha_i)(alpha_i^vee)^T
  for (int letter : word) {
    QVector image = m * rs.simple_root(letter);
    m -= image * coroot(rs, letter).transpose();
  }
  return m;
}

QVector act_on_vector(const RootSystem& rs, const Word& word, QVector v) {
  validate_word(rs, word);
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = simple_reflection(rs, *it, v);
  return v;
}

QVector element_key(const RootSystem& rs, const Word& word) { return act_on_vector(rs, word, rs.rho()); }

std::vector<QVector> prefix_roots(const RootSystem& rs, const Word& word) {
  validate_word(rs, word);
  const Eigen::Index dim = rs.ambient_dimension();
  QMatrix m = QMatrix::Identity(dim, dim);
  std::vector<QVector> gammas;
  gammas.reserve(word.size());
  for (int letter : word) {
    QVector gamma = m * rs.simple_root(letter);
    m -= gamma * coroot(rs, letter).transpose();
    gammas.push_back(std::move(gamma));
  }
  return gammas;
}

bool is_reduced(const RootSystem& rs, const Word& word) {
  for (const auto& gamma : prefix_roots(rs, word)) {
    if (!is_positive(rs, gamma)) return false;
  }
  return true;
}

int length(const RootSystem& rs, const Word& word) {
  // beta > 0 with w(beta) < 0  <=>  (beta, w^T rho) < 0
  const QVector probe = element_matrix(rs, word).transpose() * rs.rho();
  int count = 0;
  for (const auto& beta : rs.positive_roots()) {
    if (beta.dot(probe) < 0) ++count;
  }
  return count;
}

Word canonical_reduced_word(const RootSystem& rs, const Word& word) {
  // i is a left descent of w iff (alpha_i, w rho) < 0.
  QVector mu = element_key(rs, word);
  Word out;
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (rs.simple_root(i).dot(mu) < 0) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    out.push_back(descent);
    mu = simple_reflection(rs, descent, mu);
  }
  return out;
}

bool is_minuscule_element(const RootSystem& rs, const Word& word, int omega, Variant variant) {
  validate_word(rs, word);
  require_reduced(rs, word, "is_minuscule_element");
  const auto table = special_weights(rs, variant);
  if (std::find(table.begin(), table.end(), omega) == table.end()) {
    throw InputError("omega_" + std::to_string(omega) + " is not " + to_string(variant) + " for " + rs.name());
  }
  const QMatrix m = element_matrix(rs, word);
  const QVector& weight = rs.fundamental_weight(omega);
  for (int j = 1; j <= rs.rank(); ++j) {
    if (simple_coroot_pairing(rs, j, weight) != 0) continue;
    if (!is_positive(rs, m * rs.simple_root(j))) return false;
  }
  return true;
}

std::vector<Word> enumerate_minuscule(const RootSystem& rs, int omega, Variant variant) {
  const auto table = special_weights(rs, variant);
  if (std::find(table.begin(), table.end(), omega) == table.end()) {
    throw InputError("omega_" + std::to_string(omega) + " is not " + to_string(variant) + " for " + rs.name());
  }
  // Orbit points of omega correspond to minimal coset representatives;
  // BFS layers give representatives of minimal length.
  std::map<std::vector<Rational>, Word> seen;
  std::deque<std::pair<QVector, Word>> queue;
  const QVector& start = rs.fundamental_weight(omega);
  seen.emplace(key_of(start), Word{});
  queue.emplace_back(start, Word{});
  std::vector<Word> elements;
  while (!queue.empty()) {
    auto [mu, word] = std::move(queue.front());
    queue.pop_front();
    elements.push_back(word);
    for (int i = 1; i <= rs.rank(); ++i) {
      if (simple_coroot_pairing(rs, i, mu) <= 0) continue;
      QVector next = simple_reflection(rs, i, mu);
      if (seen.count(key_of(next))) continue;
      Word extended{i};
      extended.insert(extended.end(), word.begin(), word.end());
      seen.emplace(key_of(next), extended);
      queue.emplace_back(std::move(next), std::move(extended));
    }
  }
  for (auto& word : elements) word = canonical_reduced_word(rs, word);
  std::sort(elements.begin(), elements.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return elements;
}

int braid_order(const RootSystem& rs, int i, int j) {
  if (i == j) return 1;
  switch (rs.cartan_entry(i, j) * rs.cartan_entry(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw InvariantViolation("unexpected Cartan product");
  }
}

std::set<Word> all_reduced_words(const RootSystem& rs, const Word& word, const OracleBounds& bounds) {
  validate_word(rs, word);
  if (static_cast<int>(word.size()) > bounds.max_length) {
    throw ResourceError("all_reduced_words: length " + std::to_string(word.size()) + " exceeds bound " +
                        std::to_string(bounds.max_length));
  }
  if (rs.rank() > bounds.max_rank) throw ResourceError("all_reduced_words: rank exceeds bound");
  require_reduced(rs, word, "all_reduced_words");

  std::set<Word> seen{word};
  std::deque<Word> queue{word};
  while (!queue.empty()) {
    const Word current = std::move(queue.front());
    queue.pop_front();
    const int n = static_cast<int>(current.size());
    for (int start = 0; start + 1 < n; ++start) {
      const int a = current[start];
      const int b = current[start + 1];
      if (a == b) continue;
      const int m = braid_order(rs, a, b);
      if (start + m > n) continue;
      bool alternating = true;
      for (int k = 0; k < m; ++k) {
        if (current[start + k] != (k % 2 == 0 ? a : b)) {
          alternating = false;
          break;
        }
      }
      if (!alternating) continue;
      Word next = current;
      for (int k = 0; k < m; ++k) next[start + k] = (k % 2 == 0 ? b : a);
      if (seen.insert(next).second) {
        if (seen.size() > bounds.max_words) throw ResourceError("all_reduced_words: too many reduced words");
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

bool bruhat_leq(const RootSystem& rs, const Word& u, const Word& w, const OracleBounds& bounds) {
  validate_word(rs, u);
  validate_word(rs, w);
  if (static_cast<int>(w.size()) > bounds.max_length) {
    throw ResourceError("bruhat_leq: length " + std::to_string(w.size()) + " exceeds bound");
  }
  const int target_length = length(rs, u);
  const QVector target = element_key(rs, u);
  const int n = static_cast<int>(w.size());

  // Grow reduced subwords of w from the right: prepending letter a to x keeps
  // the word reduced iff (alpha_a, x rho) > 0.
  struct Search {
    const RootSystem& rs;
    const Word& w;
    const QVector& target;
    int target_length;
    bool run(int limit, int chosen, const QVector& mu) const {
      if (chosen == target_length) return mu == target;
      for (int pos = limit - 1; pos >= target_length - chosen - 1; --pos) {
        const int letter = w[pos];
        if (rs.simple_root(letter).dot(mu) <= 0) continue;
        if (run(pos, chosen + 1, simple_reflection(rs, letter, mu))) return true;
      }
      return false;
    }
  };
  if (target_length > n) return false;
  return Search{rs, w, target, target_length}.run(n, 0, rs.rho());
}

std::vector<Word> enumerate_group(const RootSystem& rs, std::size_t max_elements) {
  std::set<std::vector<Rational>> seen{key_of(rs.rho())};
  std::deque<std::pair<QVector, Word>> queue;
  queue.emplace_back(rs.rho(), Word{});
  std::vector<Word> elements;
  while (!queue.empty()) {
    auto [mu, word] = std::move(queue.front());
    queue.pop_front();
    elements.push_back(word);
    for (int i = 1; i <= rs.rank(); ++i) {
      if (rs.simple_root(i).dot(mu) <= 0) continue;
      QVector next = simple_reflection(rs, i, mu);
      if (!seen.insert(key_of(next)).second) continue;
      if (seen.size() > max_elements) throw ResourceError("enumerate_group: |W| exceeds bound");
      Word extended{i};
      extended.insert(extended.end(), word.begin(), word.end());
      queue.emplace_back(std::move(next), std::move(extended));
    }
  }
  return elements;
}

}  // namespace minuscule
