// Acceptance criteria 1-10, one PASS/FAIL line each. Every clause is checked
// as stated; a failing clause prints its first witness.

#include <minuscule/cli.hpp>
#include <minuscule/serialize.hpp>
#include <minuscule/verify.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace minuscule;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string set_text(const std::vector<int>& v) { return "{" + format_word(v) + "}"; }

const DecompositionClass* with_parts(const ClassificationReport& r, const std::vector<VertexSet>& parts) {
  for (const auto& c : r.decompositions) {
    if (c.decomposition.parts == parts) return &c;
  }
  return nullptr;
}

Outcome criterion1() {
  Outcome o;
  const RootSystem rs = parse_root_system("C4");
  const MinusculeQuiver q = build_quiver(rs, {3, 4, 1, 2, 3, 4}, 4, Variant::Cominuscule);
  const auto report = classify(rs, q);
  o.require(q.size() == 6, "vertex count " + std::to_string(q.size()));
  o.require(q.arrows().size() == 6, "arrow count " + std::to_string(q.arrows().size()));
  o.require(peaks(q).size() == 2, "peaks " + set_text(peaks(q)));
  o.require(holes(q).size() == 2, "holes " + set_text(holes(q)));
  o.require(report.qfact_count() == 2, "decompositions " + std::to_string(report.qfact_count()));
  for (const auto& c : report.decompositions) {
    o.require(c.neat && !c.smooth, "a decomposition is not neat-and-non-smooth");
  }
  o.require(report.ih_small_count() == 0, "IH-small " + std::to_string(report.ih_small_count()));
  if (o.pass) o.detail = "peaks " + set_text(peaks(q)) + ", holes " + set_text(holes(q)) + ", 2 decompositions";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const RootSystem rs = parse_root_system("A5");
  const MinusculeQuiver q = build_quiver(rs, {3, 1, 2, 5, 4, 3}, 3, Variant::Minuscule);
  const auto report = classify(rs, q);
  o.require(peaks(q).size() == 3, "peaks " + set_text(peaks(q)));
  o.require(holes(q).size() == 2, "holes " + set_text(holes(q)));
  o.require(report.qfact_count() == 6, "decompositions " + std::to_string(report.qfact_count()));
  for (const auto& c : report.decompositions) o.require(c.neat && c.smooth, "a decomposition is not neat and smooth");
  o.require(report.ih_small_count() == 6, "IH-small " + std::to_string(report.ih_small_count()));
  const auto* named = with_parts(report, {{1}, {2, 3}, {4, 5, 6}});
  o.require(named && named->ih_small(), "({1},{2,3},{4,5,6}) missing or not IH-small");
  if (o.pass) o.detail = "peaks " + set_text(peaks(q)) + ", holes " + set_text(holes(q)) + ", 6 IH-small";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const RootSystem rs = parse_root_system("E6");
  const MinusculeQuiver q = build_quiver(rs, {5, 4, 2, 1, 3, 4, 5, 6}, 6, Variant::Minuscule);
  const auto report = classify(rs, q);
  const auto tops = peaks(q);
  const auto h = heights(q);
  std::multiset<int> peak_heights;
  for (int p : tops) peak_heights.insert(h[p - 1]);
  o.require(tops.size() == 2, "peaks " + set_text(tops));
  o.require(peak_heights == std::multiset<int>{5, 6}, "peak heights differ from {6,5}");
  o.require(holes(q).size() == 2, "holes " + set_text(holes(q)));
  o.require(report.qfact_count() == 2, "decompositions " + std::to_string(report.qfact_count()));
  int smooth_not_neat = 0, neat_not_smooth = 0;
  for (const auto& c : report.decompositions) {
    smooth_not_neat += c.smooth && !c.neat;
    neat_not_smooth += c.neat && !c.smooth;
  }
  o.require(smooth_not_neat == 1 && neat_not_smooth == 1, "verdicts are not one of each kind");
  o.require(report.ih_small_count() == 0, "IH-small " + std::to_string(report.ih_small_count()));
  if (o.pass) o.detail = "peak heights 6,5, holes " + set_text(holes(q)) + ", 0 IH-small";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  struct Case {
    const char* system;
    std::vector<std::pair<int, Variant>> weights;
  };
  const std::vector<Case> cases = {
      {"A3",
       {{1, Variant::Minuscule}, {2, Variant::Minuscule}, {3, Variant::Minuscule},
        {1, Variant::Cominuscule}, {2, Variant::Cominuscule}, {3, Variant::Cominuscule}}},
      {"B3", {{3, Variant::Minuscule}, {1, Variant::Cominuscule}}},
      {"C3", {{1, Variant::Minuscule}, {3, Variant::Cominuscule}}},
      {"D4", {{1, Variant::Minuscule}, {3, Variant::Minuscule}, {4, Variant::Minuscule}}}};
  long checked = 0, mismatches = 0;
  for (const auto& c : cases) {
    const RootSystem rs = parse_root_system(c.system);
    const auto group = enumerate_group(rs);
    for (const auto& [omega, variant] : c.weights) {
      for (const Word& w : group) {
        ++checked;
        if (is_minuscule_element(rs, w, omega, variant) != check_minuscule_shape(rs, w, omega, variant)) {
          if (mismatches++ == 0) {
            o.require(false, std::string(c.system) + " omega_" + std::to_string(omega) + " [" + format_word(w) + "]");
          }
        }
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds < 30, "took " + std::to_string(seconds) + " s");
  if (o.pass) {
    std::ostringstream d;
    d << checked << " element/weight pairs, 0 mismatches, " << seconds << " s";
    o.detail = d.str();
  }
  return o;
}

// Arrows keyed by (color, occurrence number), which commutation moves preserve.
std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> arrow_keys(const MinusculeQuiver& q) {
  std::vector<std::pair<int, int>> key(q.size());
  std::map<int, int> seen;
  for (int v = 1; v <= q.size(); ++v) key[v - 1] = {q.color(v), ++seen[q.color(v)]};
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (const auto& [a, b] : q.arrows()) out.insert({key[a - 1], key[b - 1]});
  return out;
}

Outcome criterion5() {
  Outcome o;
  long elements = 0, words = 0;
  for (auto [name, omega] : {std::pair{"A5", 3}, std::pair{"D5", 5}}) {
    const RootSystem rs = parse_root_system(name);
    for (const Word& w : enumerate_minuscule(rs, omega, Variant::Minuscule)) {
      if (w.size() > 10) continue;
      ++elements;
      const MinusculeQuiver q = build_quiver(rs, w, omega, Variant::Minuscule);
      const auto expected = arrow_keys(q);
      for (const Word& other : all_reduced_words(rs, w)) {
        ++words;
        const MinusculeQuiver q2 = MinusculeQuiver::from_word(rs, other, omega, Variant::Minuscule);
        o.require(canonical_word(q2) == canonical_word(q) && arrow_keys(q2) == expected,
                  std::string(name) + " [" + format_word(other) + "]");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(elements) + " elements, " + std::to_string(words) + " reduced words";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::string counts;
  for (auto [name, omega] : {std::pair{"A5", 3}, std::pair{"D5", 5}}) {
    const RootSystem rs = parse_root_system(name);
    const auto elements = enumerate_minuscule(rs, omega, Variant::Minuscule);
    const auto leq = quiver_bruhat_order(rs, elements, omega, Variant::Minuscule);
    long disagreements = 0;
    for (std::size_t a = 0; a < elements.size(); ++a) {
      for (std::size_t b = 0; b < elements.size(); ++b) {
        if ((leq[a][b] != 0) != bruhat_leq(rs, elements[a], elements[b])) {
          if (disagreements++ == 0) {
            o.require(false, std::string(name) + " [" + format_word(elements[a]) + "] vs [" + format_word(elements[b]) + "]");
          }
        }
      }
    }
    counts += (counts.empty() ? "" : ", ") + std::string(name) + " " + std::to_string(elements.size()) + " elements";
  }
  if (o.pass) o.detail = counts + ", relations identical";
  return o;
}

Outcome criterion7() {
  Outcome o;
  long pairs = 0, non_positive = 0, lambda_negative = 0;
  std::string first_zero;
  for (auto [name, omega, variant] :
       {std::tuple{"A5", 3, Variant::Minuscule}, std::tuple{"C4", 4, Variant::Cominuscule},
        std::tuple{"B4", 1, Variant::Cominuscule}, std::tuple{"D5", 5, Variant::Minuscule},
        std::tuple{"E6", 1, Variant::Minuscule}}) {
    const RootSystem rs = parse_root_system(name);
    for (const Word& w : enumerate_minuscule(rs, omega, variant)) {
      const MinusculeQuiver q = build_quiver(rs, w, omega, variant);
      const IMatrix g = gamma_pairings(rs, w);
      for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
          ++pairs;
          if (g(i, j) <= 0 && non_positive++ == 0) {
            first_zero = std::string(name) + " [" + format_word(w) + "] <gamma_" + std::to_string(i + 1) +
                         "^vee, gamma_" + std::to_string(j + 1) + "> = " + std::to_string(g(i, j));
          }
        }
      }
      lambda_negative += (lambda_matrix(rs, q).array() < 0).count();
    }
  }
  o.require(non_positive == 0, std::to_string(non_positive) + " of " + std::to_string(pairs) +
                                   " gamma pairings are not > 0, e.g. " + first_zero);
  o.require(lambda_negative == 0, std::to_string(lambda_negative) + " negative lambda coefficients");
  o.detail += "; lambda >= 0 clause: " + std::string(lambda_negative == 0 ? "holds" : "fails");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const RootSystem a5 = parse_root_system("A5");
  const MinusculeQuiver q = build_quiver(a5, {3, 1, 2, 5, 4, 3}, 3, Variant::Minuscule);

  std::set<std::set<std::vector<Rational>>> staircase;
  std::vector<int> perm{0, 1, 2};
  do {
    std::set<std::vector<Rational>> gens;
    QVector g = QVector::Zero(3);
    for (int k : perm) {
      g(k) = 1;
      gens.insert(key_of(g));
    }
    staircase.insert(gens);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::multiset<std::set<std::vector<Rational>>> found;
  for (const auto& c : enumerate_decompositions(a5, q)) {
    const ConeDescription cone = nef_cone(a5, c.decomposition);
    std::set<std::vector<Rational>> gens;
    for (Eigen::Index k = 0; k < cone.generators.cols(); ++k) gens.insert(key_of(cone.generators.col(k)));
    if (!staircase.count(gens) && o.pass) {
      std::string text;
      for (const auto& v : gens) {
        text += "(";
        for (std::size_t i = 0; i < v.size(); ++i) text += (i ? "," : "") + v[i].get_str();
        text += ")";
      }
      o.require(false, "nef cone of ordering (" + format_word(c.orderings.front()) + ") is " + text +
                           ", not a staircase cone");
    }
    found.insert(gens);
  }
  std::set<std::set<std::vector<Rational>>> distinct(found.begin(), found.end());
  o.require(found.size() == 6 && distinct == staircase,
            std::to_string(distinct.size()) + " distinct nef cones among " + std::to_string(found.size()));

  const CoverReport a = verify_mds_cover(a5, q);
  o.require(a.ok && a.exact_checked, "A5 cover check: " + (a.failures.empty() ? "" : a.failures.front()));
  o.require(a.samples_peeled >= 1000, "only " + std::to_string(a.samples_peeled) + " samples peeled");

  const RootSystem c4 = parse_root_system("C4");
  const CoverReport c = verify_mds_cover(c4, build_quiver(c4, {3, 4, 1, 2, 3, 4}, 4, Variant::Cominuscule));
  o.require(c.ok && c.exact_checked, "C4 2-d cover check: " + (c.failures.empty() ? "" : c.failures.front()));

  std::ostringstream tail;
  tail << "; exact 3-d cover " << (a.ok && a.exact_checked ? "holds" : "fails") << " (" << a.cones
       << " distinct cones, volume sum " << a.volume_sum << "), " << a.samples_peeled << " peels exact, C4 2-d check "
       << (c.ok && c.exact_checked ? "holds" : "fails");
  o.detail += tail.str();
  return o;
}

Outcome criterion9() {
  Outcome o;
  long orderings = 0, violations = 0;
  for (auto [name, omega, variant] : {std::tuple{"A5", 3, Variant::Minuscule}, std::tuple{"C4", 4, Variant::Cominuscule}}) {
    const RootSystem rs = parse_root_system(name);
    for (const Word& w : enumerate_minuscule(rs, omega, variant)) {
      const MinusculeQuiver q = build_quiver(rs, w, omega, variant);
      std::vector<int> ordering = peaks(q);
      do {
        ++orderings;
        std::string problem;
        try {
          const PeakDecomposition d = decompose(rs, q, ordering);
          std::vector<int> all;
          int total = 0;
          for (std::size_t k = 0; k < d.parts.size(); ++k) {
            all.insert(all.end(), d.parts[k].begin(), d.parts[k].end());
            total += length(rs, d.part_words[k]);
            const MinusculeQuiver sub = induced_quiver(q, d.parts[k]);
            if (peaks(sub).size() != 1 || minimal_vertices(sub).size() != 1) problem = "part with several extremes";
          }
          std::sort(all.begin(), all.end());
          bool partition = static_cast<int>(all.size()) == q.size();
          for (int v = 1; partition && v <= q.size(); ++v) partition = all[v - 1] == v;
          if (!partition) problem = "parts do not partition Q_w";
          if (total != length(rs, w)) problem = "part lengths do not add up";
        } catch (const std::exception& e) {
          problem = e.what();
        }
        if (!problem.empty() && violations++ == 0) {
          o.require(false, std::string(name) + " [" + format_word(w) + "] ordering (" + format_word(ordering) + "): " + problem);
        }
      } while (std::next_permutation(ordering.begin(), ordering.end()));
    }
  }
  if (o.pass) o.detail = std::to_string(orderings) + " orderings, 0 violations";
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int invoke(const std::vector<std::string>& args, std::string& out, std::string& err) {
  std::ostringstream o, e;
  const int code = run(args, o, e);
  out = o.str();
  err = e.str();
  return code;
}

Outcome criterion10() {
  Outcome o;
  const std::vector<std::pair<std::vector<std::string>, std::string>> goldens = {
      {{"classify", "--type", "A", "--rank", "5", "--variant", "minuscule", "--weight", "3", "--word", "3,1,2,5,4,3",
        "--format", "json"},
       "classify_a5.json"},
      {{"classify", "--type", "E", "--rank", "6", "--variant", "minuscule", "--weight", "6", "--word",
        "5,4,2,1,3,4,5,6"},
       "classify_e6.json"},
      {{"classify", "--type", "C", "--rank", "4", "--variant", "cominuscule", "--weight", "4", "--word",
        "3,4,1,2,3,4"},
       "classify_c4.json"}};
  std::string out, err;
  for (const auto& [args, file] : goldens) {
    const int code = invoke(args, out, err);
    o.require(code == 0, file + ": exit " + std::to_string(code));
    o.require(out == slurp(std::string(GOLDEN_DIR) + "/" + file), file + ": output differs from golden file");
  }
  const int bad = invoke({"quiver", "--type", "A5", "--weight", "3", "--word", "1,3,1,2,5,4,3"}, out, err);
  o.require(bad == 1 && err.find("not reduced") != std::string::npos,
            "non-reduced word gave exit " + std::to_string(bad) + " / '" + err + "'");
  const int verify = invoke({"verify", "--type", "A", "--rank", "5", "--weight", "3"}, out, err);
  o.require(verify == 0, "verify A5 omega_3 exit " + std::to_string(verify));
  if (o.pass) o.detail = "3 goldens match, non-reduced word exit 1, verify exit 0";
  return o;
}

}  // namespace

int main() {
  using Criterion = Outcome (*)();
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"C4 golden", criterion1},
      {"A5 golden", criterion2},
      {"E6 golden", criterion3},
      {"shape equivalence", criterion4},
      {"quiver uniqueness", criterion5},
      {"Bruhat agreement", criterion6},
      {"positivity", criterion7},
      {"Mori dream cover", criterion8},
      {"decomposition invariants", criterion9},
      {"CLI contract", criterion10}};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << "criterion " << k + 1 << " (" << criteria[k].first << "): " << (o.pass ? "PASS" : "FAIL") << "  "
              << o.detail << std::endl;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
