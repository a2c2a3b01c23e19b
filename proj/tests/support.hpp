#pragma once

#include <minuscule/divisors.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

namespace test {

using namespace minuscule;

inline QVector vec(std::initializer_list<long> values) {
  QVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (long x : values) v(k++) = x;
  return v;
}

inline MinusculeQuiver c4_example(const RootSystem& rs) {
  return build_quiver(rs, {3, 4, 1, 2, 3, 4}, 4, Variant::Cominuscule);
}
inline MinusculeQuiver a5_example(const RootSystem& rs) {
  return build_quiver(rs, {3, 1, 2, 5, 4, 3}, 3, Variant::Minuscule);
}
inline MinusculeQuiver e6_example(const RootSystem& rs) {
  return build_quiver(rs, {5, 4, 2, 1, 3, 4, 5, 6}, 6, Variant::Minuscule);
}

// Permutation of {0..n} for a type A_n word, acting on positions:
// s_i swaps i-1 and i. The product is composed left to right.
inline std::vector<int> permutation_of(int n, const Word& word) {
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  for (int letter : word) std::swap(p[letter - 1], p[letter]);
  return p;
}

inline int inversions(const std::vector<int>& p) {
  int count = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) count += p[a] > p[b];
  }
  return count;
}

// Signed permutation model of B_n / C_n: w as an integer matrix on e_1..e_n,
// s_i (i < n) swaps coordinates i, i+1 and s_n negates coordinate n. The
// length is the number of positive roots sent to negative roots, with the
// roots e_i - e_j, e_i + e_j (i < j) and e_i (up to scaling) taken positive.
inline int signed_length(int n, const Word& word) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Identity(n, n);
  for (int letter : word) {
    Eigen::MatrixXi s = Eigen::MatrixXi::Identity(n, n);
    if (letter < n) {
      s(letter - 1, letter - 1) = s(letter, letter) = 0;
      s(letter - 1, letter) = s(letter, letter - 1) = 1;
    } else {
      s(n - 1, n - 1) = -1;
    }
    m = m * s;
  }
  auto negative = [](const Eigen::VectorXi& v) {
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      if (v(k) != 0) return v(k) < 0;
    }
    return false;
  };
  int count = 0;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
    e(i) = 1;
    count += negative(m * e);
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXi minus = Eigen::VectorXi::Zero(n), plus = Eigen::VectorXi::Zero(n);
      minus(i) = 1, minus(j) = -1;
      plus(i) = 1, plus(j) = 1;
      count += negative(m * minus) + negative(m * plus);
    }
  }
  return count;
}

}  // namespace test
