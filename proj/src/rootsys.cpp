#include <minuscule/rootsys.hpp>

#include <algorithm>
#include <cctype>
#include <deque>

namespace minuscule {

namespace {

QVector unit(Eigen::Index dim, int i) {
  QVector v = QVector::Zero(dim);
  v(i - 1) = 1;
  return v;
}

QVector difference(Eigen::Index dim, int i, int j) { return unit(dim, i) - unit(dim, j); }

std::vector<QVector> bourbaki_simple_roots(char letter, int n) {
  std::vector<QVector> roots;
  switch (letter) {
    case 'A':
      for (int i = 1; i <= n; ++i) roots.push_back(difference(n + 1, i, i + 1));
      break;
    case 'B':
    case 'C':
    case 'D':
      for (int i = 1; i < n; ++i) roots.push_back(difference(n, i, i + 1));
      if (letter == 'B') roots.push_back(unit(n, n));
      if (letter == 'C') roots.push_back(QVector(unit(n, n) * Rational(2)));
      if (letter == 'D') roots.push_back(QVector(unit(n, n - 1) + unit(n, n)));
      break;
    case 'E': {
      const Rational half(1, 2);
      QVector a1 = QVector::Constant(8, -half);
      a1(0) = half;
      a1(7) = half;
      roots.push_back(a1);
      roots.push_back(QVector(unit(8, 1) + unit(8, 2)));
      for (int i = 3; i <= n; ++i) roots.push_back(difference(8, i - 1, i - 2));
      break;
    }
    case 'F': {
      roots.push_back(difference(4, 2, 3));
      roots.push_back(difference(4, 3, 4));
      roots.push_back(unit(4, 4));
      QVector a4 = QVector::Constant(4, Rational(-1, 2));
      a4(0) = Rational(1, 2);
      roots.push_back(a4);
      break;
    }
    case 'G': {
      roots.push_back(difference(3, 1, 2));
      QVector a2(3);
      a2 << Rational(-2), Rational(1), Rational(1);
      roots.push_back(a2);
      break;
    }
    default:
      break;
  }
  return roots;
}

bool valid_type(char letter, int n) {
  switch (letter) {
    case 'A': return n >= 1;
    case 'B':
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

Rational to_int_checked(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw InvariantViolation(std::string(what) + " is not integral: " + q.get_str());
  return q;
}

}  // namespace

std::string to_string(Variant variant) {
  return variant == Variant::Minuscule ? "minuscule" : "cominuscule";
}

Variant parse_variant(const std::string& text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "minuscule") return Variant::Minuscule;
  if (lower == "cominuscule") return Variant::Cominuscule;
  throw InputError("unknown variant '" + text + "' (expected minuscule or cominuscule)");
}

RootSystem RootSystem::build(char type_letter, int rank) {
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(type_letter)));
  if (!valid_type(letter, rank)) {
    throw InputError("invalid root system type " + std::string(1, type_letter) + std::to_string(rank));
  }
  RootSystem rs;
  rs.letter_ = letter;
  rs.rank_ = rank;
  rs.simple_roots_ = bourbaki_simple_roots(letter, rank);

  const Eigen::Index dim = rs.simple_roots_.front().size();
  for (const auto& a : rs.simple_roots_) rs.simple_norms_.push_back(a.dot(a));

  rs.cartan_ = IMatrix(rank, rank);
  QMatrix cartan_q(rank, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      Rational entry = Rational(2) * rs.simple_roots_[i].dot(rs.simple_roots_[j]) / rs.simple_norms_[i];
      entry.canonicalize();
      to_int_checked(entry, "Cartan entry");
      rs.cartan_(i, j) = static_cast<int>(entry.get_num().get_si());
      cartan_q(i, j) = entry;
    }
  }
  rs.cartan_inverse_ = exact_inverse(cartan_q);

  // omega_j = sum_k alpha_k (A^{-1})_{kj}: the weights dual to the coroots
  // inside the span of the roots.
  QMatrix simple(dim, rank);
  for (int k = 0; k < rank; ++k) simple.col(k) = rs.simple_roots_[k];
  QMatrix weights = simple * rs.cartan_inverse_;
  rs.rho_ = QVector::Zero(dim);
  for (int j = 0; j < rank; ++j) {
    rs.fundamental_weights_.push_back(weights.col(j));
    rs.rho_ += weights.col(j);
  }

  std::deque<QVector> queue(rs.simple_roots_.begin(), rs.simple_roots_.end());
  for (const auto& a : rs.simple_roots_) rs.root_keys_.insert(key_of(a));
  while (!queue.empty()) {
    QVector root = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank; ++i) {
      QVector image = simple_reflection(rs, i, root);
      if (rs.root_keys_.insert(key_of(image)).second) queue.push_back(image);
    }
  }
  for (const auto& key : rs.root_keys_) {
    QVector v(dim);
    for (Eigen::Index k = 0; k < dim; ++k) v(k) = key[k];
    if (is_positive(rs, v)) rs.positive_roots_.push_back(v);
  }
  return rs;
}

std::string RootSystem::name() const { return std::string(1, letter_) + std::to_string(rank_); }

int RootSystem::checked(int i) const {
  if (i < 1 || i > rank_) {
    throw InputError("simple index " + std::to_string(i) + " out of range [1," + std::to_string(rank_) + "] for " + name());
  }
  return i - 1;
}

int RootSystem::cartan_entry(int i, int j, Variant variant) const {
  const int a = checked(i);
  const int b = checked(j);
  return variant == Variant::Minuscule ? cartan_(a, b) : cartan_(b, a);
}

Eigen::VectorXi RootSystem::simple_coordinates(const QVector& v) const {
  QVector pairings(rank_);
  for (int i = 1; i <= rank_; ++i) pairings(i - 1) = simple_coroot_pairing(*this, i, v);
  QVector coords = cartan_inverse_ * pairings;
  Eigen::VectorXi out(rank_);
  for (int k = 0; k < rank_; ++k) {
    Rational c = coords(k);
    c.canonicalize();
    if (c.get_den() != 1) throw InputError("vector is not in the root lattice of " + name());
    out(k) = static_cast<int>(c.get_num().get_si());
  }
  return out;
}

RootSystem parse_root_system(const std::string& text) {
  if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0]))) {
    throw InputError("malformed root system '" + text + "' (expected e.g. A5)");
  }
  const std::string digits = text.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 3) {
    throw InputError("malformed root system '" + text + "' (expected e.g. A5)");
  }
  return RootSystem::build(text[0], std::stoi(digits));
}

Rational simple_coroot_pairing(const RootSystem& rs, int i, const QVector& v) {
  const int k = rs.checked(i);
  Rational value = Rational(2) * rs.simple_roots_[k].dot(v) / rs.simple_norms_[k];
  value.canonicalize();
  return value;
}

int pairing(const RootSystem& rs, const QVector& gamma, const QVector& delta) {
  const Rational norm = gamma.dot(gamma);
  if (norm == 0) throw InputError("pairing with a zero vector");
  if (!rs.is_root(gamma)) throw InputError("pairing: first argument is not a root of " + rs.name());
  Rational value = Rational(2) * gamma.dot(delta) / norm;
  value.canonicalize();
  to_int_checked(value, "pairing");
  return static_cast<int>(value.get_num().get_si());
}

QVector simple_reflection(const RootSystem& rs, int i, const QVector& v) {
  const Rational c = simple_coroot_pairing(rs, i, v);
  return v - c * rs.simple_roots_[i - 1];
}

bool is_positive(const RootSystem& rs, const QVector& root) { return root.dot(rs.rho()) > 0; }

std::vector<int> minuscule_weights(const RootSystem& rs) {
  std::vector<int> out;
  for (int j = 1; j <= rs.rank(); ++j) {
    const QVector& omega = rs.fundamental_weight(j);
    bool ok = true;
    for (const auto& beta : rs.positive_roots()) {
      if (pairing(rs, beta, omega) > 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(j);
  }
  return out;
}

std::vector<int> cominuscule_weights(const RootSystem& rs) {
  const Eigen::VectorXi theta = rs.simple_coordinates(highest_root(rs));
  std::vector<int> out;
  for (int j = 1; j <= rs.rank(); ++j) {
    if (theta(j - 1) == 1) out.push_back(j);
  }
  return out;
}

std::vector<int> special_weights(const RootSystem& rs, Variant variant) {
  return variant == Variant::Minuscule ? minuscule_weights(rs) : cominuscule_weights(rs);
}

QVector highest_root(const RootSystem& rs) {
  const QVector* best = nullptr;
  int best_height = -1;
  for (const auto& beta : rs.positive_roots()) {
    const int height = rs.simple_coordinates(beta).sum();
    if (height > best_height) {
      best_height = height;
      best = &beta;
    }
  }
  return *best;
}

}  // namespace minuscule
