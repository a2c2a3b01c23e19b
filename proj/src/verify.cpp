#include <minuscule/verify.hpp>

#include <algorithm>
#include <map>

namespace minuscule {

namespace {

class Tally {
 public:
  Tally(CheckTally& t, std::size_t limit) : t_(t), limit_(limit) {}
  void pass() { ++t_.passed; }
  void skip() { ++t_.skipped; }
  void fail(const std::string& witness) {
    ++t_.failed;
    if (t_.witnesses.size() < limit_) t_.witnesses.push_back(witness);
  }
  void expect(bool ok, const std::string& witness) { ok ? pass() : fail(witness); }

 private:
  CheckTally& t_;
  std::size_t limit_;
};

std::string at(const Word& w) { return "[" + format_word(w) + "]"; }

}  // namespace

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& t) { return t.failed == 0; });
}

std::vector<std::vector<char>> quiver_bruhat_order(const RootSystem& rs, const std::vector<Word>& elements, int omega,
                                                   Variant variant) {
  const std::size_t n = elements.size();
  std::map<Word, std::size_t> index;
  for (std::size_t a = 0; a < n; ++a) index.emplace(elements[a], a);
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (std::size_t b = 0; b < n; ++b) {
    leq[b][b] = 1;
    const MinusculeQuiver q = build_quiver(rs, elements[b], omega, variant);
    for (int p : peaks(q)) {
      const Word lower = canonical_reduced_word(rs, remove_maximal_vertex(q, p).word());
      const auto it = index.find(lower);
      if (it == index.end()) throw InvariantViolation("peak removal left the quotient at " + at(elements[b]));
      leq[it->second][b] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq[a][k]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (leq[k][b]) leq[a][b] = 1;
      }
    }
  }
  return leq;
}

SuiteReport run_invariant_suite(const RootSystem& rs, int omega, Variant variant, const SuiteOptions& options) {
  const auto table = special_weights(rs, variant);
  if (std::find(table.begin(), table.end(), omega) == table.end()) {
    throw InputError("omega_" + std::to_string(omega) + " is not " + to_string(variant) + " in " + rs.name());
  }
  SuiteReport report;
  report.system = rs.name();
  report.omega = omega;
  report.variant = variant;
  const std::vector<Word> elements = enumerate_minuscule(rs, omega, variant);
  report.elements = static_cast<int>(elements.size());

  // Tally keeps a reference into checks, so reserve up front.
  report.checks.reserve(16);
  auto add = [&](const char* name) -> Tally {
    report.checks.emplace_back();
    report.checks.back().name = name;
    return Tally(report.checks.back(), options.max_witnesses);
  };

  {
    Tally t = add("cartan-euclidean");
    for (int i = 1; i <= rs.rank(); ++i) {
      for (int j = 1; j <= rs.rank(); ++j) {
        const QVector& a = rs.simple_root(i);
        const Rational value = 2 * a.dot(rs.simple_root(j)) / a.dot(a);
        t.expect(value == rs.cartan()(i - 1, j - 1), "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  {
    Tally t = add("shape-equivalence");
    try {
      for (const Word& w : enumerate_group(rs, options.max_group)) {
        const bool algebraic = is_minuscule_element(rs, w, omega, variant);
        const bool shape = check_minuscule_shape(rs, w, omega, variant);
        t.expect(algebraic == shape, at(w));
      }
    } catch (const ResourceError&) {
      t.skip();
    }
  }

  std::vector<MinusculeQuiver> quivers;
  {
    Tally t = add("quiver-construction");
    for (const Word& w : elements) {
      const MinusculeQuiver q = build_quiver(rs, w, omega, variant);
      t.expect(canonical_word(q) == w && minimal_vertices(q).size() == (w.empty() ? 0u : 1u), at(w));
      const auto h = heights(q);
      for (const auto& [from, to] : q.arrows()) {
        if (h[from - 1] <= h[to - 1]) t.fail("height not decreasing along arrow in " + at(w));
      }
      quivers.push_back(q);
    }
  }

  {
    Tally t = add("quiver-uniqueness");
    for (const auto& q : quivers) {
      if (q.size() > options.bounds.max_length) {
        t.skip();
        continue;
      }
      bool same = true;
      for (const Word& other : all_reduced_words(rs, q.word(), options.bounds)) {
        const MinusculeQuiver q2 = MinusculeQuiver::from_word(rs, other, omega, variant);
        same = same && canonical_word(q2) == q.word() && q2.arrows().size() == q.arrows().size();
      }
      t.expect(same, at(q.word()));
    }
  }

  {
    Tally t = add("bruhat-order");
    const bool small = elements.size() <= options.max_quotient &&
                       std::all_of(elements.begin(), elements.end(), [&](const Word& w) {
                         return static_cast<int>(w.size()) <= options.bounds.max_length;
                       });
    if (!small) {
      t.skip();
    } else {
      const auto leq = quiver_bruhat_order(rs, elements, omega, variant);
      for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t b = 0; b < elements.size(); ++b) {
          t.expect((leq[a][b] != 0) == bruhat_leq(rs, elements[a], elements[b], options.bounds),
                   at(elements[a]) + " vs " + at(elements[b]));
        }
      }
    }
  }

  {
    Tally t = add("line-bundle-positivity");
    for (const auto& q : quivers) {
      try {
        check_line_bundle_positivity(rs, q);
        t.pass();
      } catch (const InvariantViolation& e) {
        t.fail(at(q.word()) + ": " + e.what());
      }
    }
  }

  std::vector<std::vector<DecompositionClass>> classes(quivers.size());
  {
    Tally t = add("decompositions");
    for (std::size_t k = 0; k < quivers.size(); ++k) {
      const auto& q = quivers[k];
      if (static_cast<int>(peaks(q).size()) > options.cover.max_peaks) {
        t.skip();
        continue;
      }
      try {
        classes[k] = enumerate_decompositions(rs, q, options.cover.max_peaks);
      } catch (const InvariantViolation& e) {
        t.fail(at(q.word()) + ": " + e.what());
        continue;
      }
      bool ok = !classes[k].empty();
      for (const auto& c : classes[k]) {
        const auto& d = c.decomposition;
        std::vector<int> covered;
        for (const auto& part : d.parts) covered.insert(covered.end(), part.begin(), part.end());
        std::sort(covered.begin(), covered.end());
        bool partition = static_cast<int>(covered.size()) == q.size();
        for (int v = 1; partition && v <= q.size(); ++v) partition = covered[v - 1] == v;
        bool any_neat = false;
        for (const auto& ordering : c.orderings) {
          PeakDecomposition again = d;
          again.ordering = ordering;
          any_neat = any_neat || is_neat(again);
        }
        ok = ok && partition && any_neat == c.neat && is_smooth(d) == c.smooth;
      }
      t.expect(ok, at(q.word()));
    }
  }

  {
    Tally t = add("basis-independence");
    for (std::size_t k = 0; k < quivers.size(); ++k) {
      std::map<int, std::vector<Rational>> seen;
      bool ok = true;
      for (const auto& c : classes[k]) {
        const ConeDescription cone = nef_cone(rs, c.decomposition);
        for (std::size_t g = 0; g < cone.generator_vertices.size(); ++g) {
          const auto key = key_of(cone.generators.col(static_cast<Eigen::Index>(g)));
          const auto [it, fresh] = seen.emplace(cone.generator_vertices[g], key);
          ok = ok && (fresh || it->second == key);
        }
      }
      t.expect(ok, at(quivers[k].word()));
    }
  }

  {
    Tally t = add("mds-cover");
    for (std::size_t k = 0; k < quivers.size(); ++k) {
      const auto& q = quivers[k];
      if (q.empty() || static_cast<int>(peaks(q).size()) > options.cover.max_peaks) {
        t.skip();
        continue;
      }
      const CoverReport cover = verify_mds_cover(rs, q, options.cover);
      t.expect(cover.ok, at(q.word()) + (cover.failures.empty() ? "" : ": " + cover.failures.front()));
    }
  }

  return report;
}

}  // namespace minuscule
