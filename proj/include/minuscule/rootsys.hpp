#pragma once

// Simple root systems in the Bourbaki Euclidean realization.
//
// Indices of simple roots and fundamental weights are 1-based throughout the
// public API, matching Bourbaki's numbering of the Dynkin diagram.

#include <minuscule/exact.hpp>

#include <set>
#include <string>
#include <vector>

namespace minuscule {

enum class Variant { Minuscule, Cominuscule };

std::string to_string(Variant variant);
Variant parse_variant(const std::string& text);

class RootSystem {
 public:
  /// Bourbaki realization of the simple type (letter, rank); throws InputError
  /// on pairs that do not name a simple type.
  static RootSystem build(char type_letter, int rank);

  char type_letter() const { return letter_; }
  int rank() const { return rank_; }
  std::string name() const;
  /// Dimension of the ambient Euclidean space.
  Eigen::Index ambient_dimension() const { return simple_roots_.front().size(); }

  const QVector& simple_root(int i) const { return simple_roots_.at(checked(i)); }
  const QVector& fundamental_weight(int i) const { return fundamental_weights_.at(checked(i)); }
  const std::vector<QVector>& simple_roots() const { return simple_roots_; }
  const std::vector<QVector>& fundamental_weights() const { return fundamental_weights_; }

  /// cartan()(i-1, j-1) = <alpha_i^vee, alpha_j>.
  const IMatrix& cartan() const { return cartan_; }
  /// Cartan entry by 1-based indices, transposed for the cominuscule variant.
  int cartan_entry(int i, int j, Variant variant = Variant::Minuscule) const;

  const std::vector<QVector>& positive_roots() const { return positive_roots_; }
  /// Sum of the fundamental weights; strictly dominant.
  const QVector& rho() const { return rho_; }

  bool is_root(const QVector& v) const { return root_keys_.count(key_of(v)) != 0; }
  /// Integer coordinates of v in the simple-root basis; InputError if v is not
  /// in the root lattice.
  Eigen::VectorXi simple_coordinates(const QVector& v) const;

 private:
  int checked(int i) const;

  char letter_ = 'A';
  int rank_ = 0;
  std::vector<QVector> simple_roots_;
  std::vector<QVector> fundamental_weights_;
  std::vector<Rational> simple_norms_;  // (alpha_i, alpha_i)
  IMatrix cartan_;
  QMatrix cartan_inverse_;
  std::vector<QVector> positive_roots_;
  std::set<std::vector<Rational>> root_keys_;
  QVector rho_;

  friend QVector simple_reflection(const RootSystem& rs, int i, const QVector& v);
  friend Rational simple_coroot_pairing(const RootSystem& rs, int i, const QVector& v);
};

/// Parses "A5", "e6", "C4" (case-insensitive).
RootSystem parse_root_system(const std::string& text);

/// <gamma^vee, delta> = 2(gamma, delta)/(gamma, gamma). gamma must be a root;
/// a non-integral value is an InvariantViolation.
int pairing(const RootSystem& rs, const QVector& gamma, const QVector& delta);

/// <alpha_i^vee, v> without the root-membership check; v may be any vector.
Rational simple_coroot_pairing(const RootSystem& rs, int i, const QVector& v);

/// v - <alpha_i^vee, v> alpha_i.
QVector simple_reflection(const RootSystem& rs, int i, const QVector& v);

/// A root is positive iff its inner product with rho is positive.
bool is_positive(const RootSystem& rs, const QVector& root);

std::vector<int> minuscule_weights(const RootSystem& rs);
std::vector<int> cominuscule_weights(const RootSystem& rs);
/// The (co)minuscule weight table for the variant.
std::vector<int> special_weights(const RootSystem& rs, Variant variant);

QVector highest_root(const RootSystem& rs);

}  // namespace minuscule
