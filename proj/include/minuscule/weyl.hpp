#pragma once

// Weyl group words and the brute-force oracles built on them.
//
// Convention: a word (b_1, ..., b_r) denotes w = s_{b_1} s_{b_2} ... s_{b_r}
// acting on the left, so s_{b_r} is applied to a vector first. Letters are
// 1-based simple indices.

#include <minuscule/rootsys.hpp>

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace minuscule {

using Word = std::vector<int>;

struct OracleBounds {
  int max_length = 12;
  int max_rank = 8;
  std::size_t max_words = 2'000'000;
};

/// Comma-separated 1-based letters, e.g. "3,1,2,5,4,3". Empty string is the
/// identity.
Word parse_word(const std::string& text);
std::string format_word(const Word& word);

/// Throws InputError if a letter is outside [1, rank].
void validate_word(const RootSystem& rs, const Word& word);

/// Matrix of w in the ambient Euclidean coordinates.
QMatrix element_matrix(const RootSystem& rs, const Word& word);

/// w(v), applying the rightmost letter first.
QVector act_on_vector(const RootSystem& rs, const Word& word, QVector v);

/// w(rho); determines w uniquely since rho has trivial stabilizer.
QVector element_key(const RootSystem& rs, const Word& word);

/// gamma_i = s_{b_1} ... s_{b_{i-1}}(alpha_{b_i}) for i = 1..r. No
/// reducedness check.
std::vector<QVector> prefix_roots(const RootSystem& rs, const Word& word);

bool is_reduced(const RootSystem& rs, const Word& word);

/// l(w), counted as the number of positive roots sent to negative roots.
int length(const RootSystem& rs, const Word& word);

/// Lexicographically smallest reduced word of the element (greedy on left
/// descents).
Word canonical_reduced_word(const RootSystem& rs, const Word& word);

/// Minimal coset representative test for W / W_{P_omega}. InputError for a
/// non-reduced word or for omega outside the (co)minuscule table.
bool is_minuscule_element(const RootSystem& rs, const Word& word, int omega, Variant variant);

/// All (co)minuscule elements for omega as canonical words, sorted by length
/// then lexicographically.
std::vector<Word> enumerate_minuscule(const RootSystem& rs, int omega, Variant variant);

/// Order of s_i s_j from the Cartan matrix.
int braid_order(const RootSystem& rs, int i, int j);

/// Every reduced word of the element, by closure under braid moves.
std::set<Word> all_reduced_words(const RootSystem& rs, const Word& word, const OracleBounds& bounds = {});

/// u <= w in Bruhat order via the subword property over w's word.
bool bruhat_leq(const RootSystem& rs, const Word& u, const Word& w, const OracleBounds& bounds = {});

/// One reduced word per element of W (breadth-first, so words are of
/// minimal length). ResourceError above `max_elements`.
std::vector<Word> enumerate_group(const RootSystem& rs, std::size_t max_elements = 100'000);

}  // namespace minuscule
