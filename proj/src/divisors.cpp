#include <minuscule/divisors.hpp>

#include <algorithm>
#include <array>
#include <random>

namespace minuscule {

namespace {

std::string label(const char* what, int a, int b) {
  return std::string(what) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

QVector dhat_column(const IMatrix& lambda, const std::vector<int>& peak_list, int i) {
  QVector out(static_cast<Eigen::Index>(peak_list.size()));
  for (std::size_t k = 0; k < peak_list.size(); ++k) out(static_cast<Eigen::Index>(k)) = lambda(peak_list[k] - 1, i - 1);
  return out;
}

// Shared state for repeated peeling of one quiver.
class Peeler {
 public:
  Peeler(const RootSystem& rs, const MinusculeQuiver& q)
      : rs_(rs), q_(q), lambda_(lambda_matrix(rs, q)), peaks_(peaks(q)) {}

  const std::vector<int>& peak_list() const { return peaks_; }
  QVector generator(int vertex) const { return dhat_column(lambda_, peaks_, vertex); }

  PeelResult run(const DivisorClass& divisor) {
    const auto s = static_cast<Eigen::Index>(peaks_.size());
    if (divisor.basis != Basis::DHat || divisor.coords.size() != s) {
      throw InputError("peel: expected a class with " + std::to_string(s) + " dhat coordinates");
    }
    if (!divisor.effective()) throw InputError("peel: class has a negative coordinate");

    QVector remaining = divisor.coords;
    std::vector<char> zero(peaks_.size(), 0);
    std::vector<std::vector<int>> groups;  // peaks zeroed per step, initial zeros first
    groups.emplace_back();
    for (Eigen::Index k = 0; k < s; ++k) {
      if (remaining(k) == 0) {
        zero[k] = 1;
        groups.back().push_back(peaks_[k]);
      }
    }

    PeelResult result;
    while (std::find(zero.begin(), zero.end(), 0) != zero.end()) {
      // Q': vertices lying below no zeroed peak. It is closed upwards, so its
      // minimal vertices are those with no target inside Q'.
      std::vector<char> in_region(q_.size(), 1);
      for (int v = 1; v <= q_.size(); ++v) {
        for (std::size_t k = 0; k < peaks_.size(); ++k) {
          if (zero[k] && q_.above(peaks_[k], v)) in_region[v - 1] = 0;
        }
      }
      int start = 0;
      for (int v = 1; v <= q_.size() && start == 0; ++v) {
        if (!in_region[v - 1]) continue;
        const auto& t = q_.targets(v);
        if (std::none_of(t.begin(), t.end(), [&](int u) { return in_region[u - 1] != 0; })) start = v;
      }
      if (start == 0) throw InvariantViolation("peel: no minimal vertex in the remaining region");

      const QVector coeffs = generator(start);
      bool have_mu = false;
      Rational mu;
      for (Eigen::Index k = 0; k < s; ++k) {
        if (coeffs(k) <= 0) continue;
        Rational ratio = remaining(k) / coeffs(k);
        if (!have_mu || ratio < mu) mu = ratio;
        have_mu = true;
      }
      if (!have_mu || mu <= 0) throw InvariantViolation("peel: step at vertex " + std::to_string(start) + " is degenerate");
      mu.canonicalize();
      remaining -= mu * coeffs;

      std::vector<int> newly;
      for (Eigen::Index k = 0; k < s; ++k) {
        if (remaining(k) < 0) throw InvariantViolation("peel: coefficient went negative");
        if (!zero[k] && remaining(k) == 0) {
          zero[k] = 1;
          newly.push_back(peaks_[k]);
        }
      }
      if (newly.empty()) throw InvariantViolation("peel: step at vertex " + std::to_string(start) + " zeroed no peak");
      groups.push_back(std::move(newly));
      result.steps.push_back({start, mu});
    }

    // Peaks zeroed later come earlier; within a step, ascending.
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
      result.ordering.insert(result.ordering.end(), it->begin(), it->end());
    }
    result.decomposition = decomposition_for(result.ordering);

    QVector rebuilt = QVector::Zero(s);
    const auto& minima = result.decomposition.minimal_vertices;
    for (const auto& step : result.steps) {
      if (std::find(minima.begin(), minima.end(), step.vertex) == minima.end()) {
        throw InvariantViolation("peel: vertex " + std::to_string(step.vertex) +
                                 " is not a nef generator of the emitted decomposition");
      }
      rebuilt += step.mu * generator(step.vertex);
    }
    if (rebuilt != divisor.coords) throw InvariantViolation("peel: combination does not reproduce the class");
    return result;
  }

 private:
  const PeakDecomposition& decomposition_for(const std::vector<int>& ordering) {
    auto it = cache_.find(ordering);
    if (it == cache_.end()) it = cache_.emplace(ordering, decompose(rs_, q_, ordering)).first;
    return it->second;
  }

  const RootSystem& rs_;
  const MinusculeQuiver& q_;
  IMatrix lambda_;
  std::vector<int> peaks_;
  std::map<std::vector<int>, PeakDecomposition> cache_;
};

using Point2 = std::pair<Rational, Rational>;

Rational orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
}

// Interiors of two nondegenerate triangles are disjoint iff some edge line
// weakly separates them.
bool interiors_disjoint(const std::array<Point2, 3>& a, const std::array<Point2, 3>& b) {
  auto separated_by_edges_of = [](const std::array<Point2, 3>& p, const std::array<Point2, 3>& other) {
    for (int e = 0; e < 3; ++e) {
      const Point2& u = p[e];
      const Point2& v = p[(e + 1) % 3];
      const Point2& w = p[(e + 2) % 3];
      const int side = sgn(orient(u, v, w));
      if (std::all_of(other.begin(), other.end(), [&](const Point2& x) { return sgn(orient(u, v, x)) * side <= 0; })) {
        return true;
      }
    }
    return false;
  };
  return separated_by_edges_of(a, b) || separated_by_edges_of(b, a);
}

Point2 slice_point(const QVector& g) {
  const Rational total = g.sum();
  Rational x = g(0) / total;
  Rational y = g(1) / total;
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

void exact_cover_check(const std::vector<ConeDescription>& cones, CoverReport& report) {
  const Eigen::Index s = cones.front().generators.rows();
  if (s == 1) {
    for (const auto& cone : cones) {
      if (cone.generators(0, 0) <= 0) report.failures.push_back("1-d nef cone is not the positive ray");
    }
    report.exact_checked = true;
    return;
  }
  if (s == 2) {
    std::vector<std::pair<Rational, Rational>> intervals;
    for (const auto& cone : cones) {
      Rational t0 = cone.generators(0, 0) / cone.generators.col(0).sum();
      Rational t1 = cone.generators(0, 1) / cone.generators.col(1).sum();
      t0.canonicalize();
      t1.canonicalize();
      intervals.emplace_back(std::min(t0, t1), std::max(t0, t1));
    }
    std::sort(intervals.begin(), intervals.end());
    Rational reach = 0;
    for (const auto& [lo, hi] : intervals) {
      if (lo != reach) {
        report.failures.push_back("2-d cover: " + std::string(lo > reach ? "gap" : "overlap") + " at slope parameter " +
                                  to_fraction_string(reach));
      }
      if (hi <= lo) report.failures.push_back("2-d cover: degenerate cone");
      reach = hi;
    }
    if (reach != 1) report.failures.push_back("2-d cover: orthant not reached up to its far edge");
    report.exact_checked = true;
    return;
  }
  if (s == 3) {
    std::vector<std::array<Point2, 3>> triangles;
    Rational area_sum = 0;
    for (const auto& cone : cones) {
      std::array<Point2, 3> tri{slice_point(cone.generators.col(0)), slice_point(cone.generators.col(1)),
                                slice_point(cone.generators.col(2))};
      const Rational twice_area = abs(orient(tri[0], tri[1], tri[2]));
      if (twice_area == 0) report.failures.push_back("3-d cover: degenerate cone");
      area_sum += twice_area;
      triangles.push_back(tri);
    }
    for (std::size_t a = 0; a < triangles.size(); ++a) {
      for (std::size_t b = a + 1; b < triangles.size(); ++b) {
        if (!interiors_disjoint(triangles[a], triangles[b])) {
          report.failures.push_back("3-d cover: nef cones " + std::to_string(a) + " and " + std::to_string(b) +
                                    " overlap");
        }
      }
    }
    // The slice of the orthant is the standard triangle, twice its area is 1.
    if (area_sum != 1) report.failures.push_back("3-d cover: slice areas sum to " + to_fraction_string(area_sum / 2));
    report.exact_checked = true;
  }
}

}  // namespace

std::vector<QVector> gamma_roots(const RootSystem& rs, const Word& word) {
  if (!is_reduced(rs, word)) throw InputError("gamma_roots: word " + format_word(word) + " is not reduced");
  return prefix_roots(rs, word);
}

IMatrix gamma_pairings(const RootSystem& rs, const Word& word) {
  const auto gammas = gamma_roots(rs, word);
  const auto r = static_cast<Eigen::Index>(gammas.size());
  IMatrix out(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) out(i, j) = pairing(rs, gammas[i], gammas[j]);
  }
  return out;
}

IMatrix lambda_matrix(const RootSystem& rs, const MinusculeQuiver& q) {
  const IMatrix gp = gamma_pairings(rs, q.word());
  const int r = q.size();
  IMatrix out = IMatrix::Zero(r, r);
  for (int i = 1; i <= r; ++i) {
    for (int k = 1; k <= i; ++k) {
      if (!q.above(k, i)) continue;
      int value = q.color(k) == q.color(i) ? 1 : 0;
      for (int j = k + 1; j <= i; ++j) {
        if (q.color(j) == q.color(i)) value += gp(k - 1, j - 1);
      }
      out(k - 1, i - 1) = value;
    }
  }
  return out;
}

std::map<int, int> lambda_coeffs(const RootSystem& rs, const MinusculeQuiver& q, int i) {
  if (i < 1 || i > q.size()) throw InputError("lambda_coeffs: vertex " + std::to_string(i) + " out of range");
  const IMatrix lambda = lambda_matrix(rs, q);
  std::map<int, int> out;
  for (int k = 1; k <= i; ++k) {
    if (q.above(k, i)) out.emplace(k, lambda(k - 1, i - 1));
  }
  return out;
}

std::map<int, int> lambda_coeffs(const RootSystem& rs, const Word& word, int i) {
  if (!is_reduced(rs, word)) throw InputError("lambda_coeffs: word " + format_word(word) + " is not reduced");
  const int omega = word.empty() ? 1 : word.back();
  return lambda_coeffs(rs, MinusculeQuiver::from_word(rs, word, omega, Variant::Minuscule), i);
}

DivisorClass line_bundle_xi(const RootSystem& rs, const MinusculeQuiver& q, int i) {
  DivisorClass out;
  out.basis = Basis::Xi;
  out.coords = QVector::Zero(q.size());
  for (int v = 1; v <= q.size(); ++v) out.labels.push_back(v);
  for (const auto& [k, value] : lambda_coeffs(rs, q, i)) out.coords(k - 1) = value;
  return out;
}

DivisorClass pushforward_to_dhat(const RootSystem& rs, const MinusculeQuiver& q, int i) {
  if (i < 1 || i > q.size()) throw InputError("pushforward_to_dhat: vertex " + std::to_string(i) + " out of range");
  DivisorClass out;
  out.basis = Basis::DHat;
  out.labels = peaks(q);
  out.coords = dhat_column(lambda_matrix(rs, q), out.labels, i);
  return out;
}

ConeDescription nef_cone(const RootSystem& rs, const PeakDecomposition& d) {
  const IMatrix lambda = lambda_matrix(rs, d.base);
  ConeDescription cone;
  cone.peaks = peaks(d.base);
  const auto s = static_cast<Eigen::Index>(cone.peaks.size());
  cone.generators = QMatrix(s, static_cast<Eigen::Index>(d.minimal_vertices.size()));
  for (std::size_t k = 0; k < d.minimal_vertices.size(); ++k) {
    cone.generators.col(static_cast<Eigen::Index>(k)) = dhat_column(lambda, cone.peaks, d.minimal_vertices[k]);
  }
  cone.generator_vertices = d.minimal_vertices;
  if (cone.generators.cols() != s || (s > 0 && exact_determinant(cone.generators) == 0)) {
    throw InvariantViolation("nef_cone: generators are not a basis");
  }
  cone.simplicial = true;
  return cone;
}

ConeDescription effective_cone(const MinusculeQuiver& q) {
  ConeDescription cone;
  cone.peaks = peaks(q);
  const auto s = static_cast<Eigen::Index>(cone.peaks.size());
  cone.generators = QMatrix::Identity(s, s);
  cone.simplicial = true;
  return cone;
}

void check_line_bundle_positivity(const RootSystem& rs, const MinusculeQuiver& q) {
  const IMatrix gp = gamma_pairings(rs, q.word());
  for (Eigen::Index i = 0; i < gp.rows(); ++i) {
    for (Eigen::Index j = 0; j < gp.cols(); ++j) {
      if (gp(i, j) < 0) {
        throw InvariantViolation("negative gamma pairing " + label("<gamma^vee,gamma>", int(i) + 1, int(j) + 1));
      }
    }
  }
  const IMatrix lambda = lambda_matrix(rs, q);
  for (Eigen::Index k = 0; k < lambda.rows(); ++k) {
    for (Eigen::Index i = 0; i < lambda.cols(); ++i) {
      if (lambda(k, i) < 0) throw InvariantViolation("negative coefficient " + label("lambda", int(k) + 1, int(i) + 1));
    }
  }
}

PeelResult peel(const RootSystem& rs, const MinusculeQuiver& q, const DivisorClass& divisor) {
  Peeler peeler(rs, q);
  return peeler.run(divisor);
}

CoverReport verify_mds_cover(const RootSystem& rs, const MinusculeQuiver& q, const CoverOptions& options) {
  CoverReport report;
  const auto tops = peaks(q);
  const auto s = static_cast<Eigen::Index>(tops.size());
  report.peaks = static_cast<int>(s);
  if (s == 0) return report;

  // Decompositions with the same set m_w of minimal vertices project to the
  // same intermediate variety, so they share one nef cone.
  std::map<std::vector<int>, ConeDescription> distinct;
  for (const auto& c : enumerate_decompositions(rs, q, options.max_peaks)) {
    ConeDescription cone = nef_cone(rs, c.decomposition);
    std::vector<int> key = cone.generator_vertices;
    std::sort(key.begin(), key.end());
    distinct.emplace(std::move(key), std::move(cone));
  }
  std::vector<ConeDescription> cones;
  for (auto& [key, cone] : distinct) cones.push_back(std::move(cone));
  report.cones = static_cast<int>(cones.size());

  report.volume_sum = 0;
  for (const auto& cone : cones) {
    if (!(cone.generators.array() >= Rational(0)).all()) {
      report.failures.push_back("nef cone of minimal vertices has a generator outside the orthant");
    }
    Rational volume = abs(exact_determinant(cone.generators));
    for (Eigen::Index k = 0; k < s; ++k) volume /= cone.generators.col(k).sum();
    report.volume_sum += volume;
  }
  report.volume_sum.canonicalize();
  if (report.volume_sum != 1) {
    report.failures.push_back("normalized nef-cone volumes sum to " + to_fraction_string(report.volume_sum));
  }
  if (s <= 3) exact_cover_check(cones, report);

  Peeler peeler(rs, q);
  auto try_peel = [&](const QVector& point, const std::string& what) {
    DivisorClass d{Basis::DHat, tops, point};
    try {
      peeler.run(d);
      ++report.samples_peeled;
    } catch (const std::exception& e) {
      std::string coords;
      for (Eigen::Index k = 0; k < point.size(); ++k) coords += (k ? "," : "") + to_fraction_string(point(k));
      report.failures.push_back("peel failed on " + what + " (" + coords + "): " + e.what());
    }
  };

  for (const auto& cone : cones) {
    for (Eigen::Index k = 0; k < s; ++k) try_peel(cone.generators.col(k), "nef generator");
    if (s > 1) {
      for (Eigen::Index skip = 0; skip < s; ++skip) {
        QVector mid = QVector::Zero(s);
        for (Eigen::Index k = 0; k < s; ++k) {
          if (k != skip) mid += cone.generators.col(k);
        }
        try_peel(QVector(mid / Rational(static_cast<long>(s - 1))), "nef facet midpoint");
      }
    }
  }
  for (Eigen::Index skip = 0; skip < s; ++skip) {
    QVector mid = QVector::Ones(s);
    mid(skip) = 0;
    try_peel(mid, "orthant facet center");
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> numerator(1, options.max_denominator);
  std::uniform_int_distribution<long> denominator(1, options.max_denominator);
  std::uniform_int_distribution<int> zero_roll(0, 4);
  for (int n = 0; n < options.samples; ++n) {
    QVector point(s);
    for (Eigen::Index k = 0; k < s; ++k) {
      point(k) = zero_roll(rng) == 0 ? Rational(0) : make_rational(numerator(rng), denominator(rng));
    }
    try_peel(point, "sample " + std::to_string(n));
  }

  report.ok = report.failures.empty();
  return report;
}

}  // namespace minuscule
