#include <minuscule/cli.hpp>
#include <minuscule/serialize.hpp>
#include <minuscule/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace minuscule {

namespace {

struct Options {
  std::string type;
  int rank = 0;
  std::optional<int> weight;
  std::optional<std::string> variant;
  std::optional<std::string> word;
  std::optional<std::string> ordering;
  std::optional<std::string> divisor;
  std::string format = "json";
  std::uint64_t seed = CoverOptions{}.seed;
  int max_length = OracleBounds{}.max_length;
  int max_peaks = CoverOptions{}.max_peaks;
  int samples = CoverOptions{}.samples;
  std::string out;
};

enum class Need { System, Weight, Element };

void add_options(CLI::App* sub, Options& o, Need need) {
  sub->add_option("--type", o.type, "Type letter (A-G), or type and rank together such as A5")->required();
  sub->add_option("--rank", o.rank, "Rank, unless given with --type");
  sub->add_option("--variant", o.variant, "minuscule or cominuscule")
      ->check(CLI::IsMember({"minuscule", "cominuscule"}));
  if (need != Need::System) sub->add_option("--weight", o.weight, "Index of the fundamental weight")->required();
  if (need == Need::Element) sub->add_option("--word", o.word, "Reduced word, comma-separated")->required();
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot", "ascii", "table"}));
  sub->add_option("--out", o.out, "Write output to this file instead of stdout");
}

void require_format(const Options& o, std::initializer_list<const char*> allowed, const std::string& command) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw InputError("format '" + o.format + "' is not available for " + command);
}

RootSystem system_of(const Options& o) {
  if (o.type.size() > 1) {
    RootSystem rs = parse_root_system(o.type);
    if (o.rank != 0 && o.rank != rs.rank()) {
      throw InputError("--rank " + std::to_string(o.rank) + " contradicts --type " + o.type);
    }
    return rs;
  }
  if (o.type.empty()) throw InputError("--type is empty");
  if (o.rank <= 0) throw InputError("--rank is required with a bare type letter");
  return RootSystem::build(static_cast<char>(std::toupper(static_cast<unsigned char>(o.type[0]))), o.rank);
}

Variant variant_of(const Options& o) { return o.variant ? parse_variant(*o.variant) : Variant::Minuscule; }

int weight_of(const RootSystem& rs, const Options& o, Variant variant) {
  const auto table = special_weights(rs, variant);
  if (std::find(table.begin(), table.end(), *o.weight) == table.end()) {
    throw InputError("omega_" + std::to_string(*o.weight) + " is not " + to_string(variant) + " in " + rs.name());
  }
  return *o.weight;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  Word w = parse_word(text);
  return std::vector<int>(w.begin(), w.end());
}

std::string weights_command(const Options& o) {
  require_format(o, {"json", "table"}, "weights");
  const RootSystem rs = system_of(o);
  std::vector<Variant> variants{Variant::Minuscule, Variant::Cominuscule};
  if (o.variant) variants = {variant_of(o)};
  if (o.format == "table") {
    std::string text;
    for (Variant v : variants) {
      text += to_string(v) + ":";
      for (int w : special_weights(rs, v)) text += " omega_" + std::to_string(w);
      text += "\n";
    }
    return text;
  }
  Json j;
  j["type"] = std::string(1, rs.type_letter());
  j["rank"] = rs.rank();
  for (Variant v : variants) j[to_string(v)] = special_weights(rs, v);
  return dump(j);
}

std::string elements_command(const Options& o) {
  require_format(o, {"json", "table"}, "elements");
  const RootSystem rs = system_of(o);
  const Variant variant = variant_of(o);
  const int omega = weight_of(rs, o, variant);
  const auto elements = enumerate_minuscule(rs, omega, variant);
  if (o.format == "table") {
    std::string text;
    for (const Word& w : elements) text += std::to_string(w.size()) + "  " + format_word(w) + "\n";
    return text + std::to_string(elements.size()) + " elements\n";
  }
  Json j;
  j["type"] = std::string(1, rs.type_letter());
  j["rank"] = rs.rank();
  j["weight"] = omega;
  j["variant"] = to_string(variant);
  Json list = Json::array();
  for (const Word& w : elements) list.push_back({{"word", w}, {"length", w.size()}});
  j["elements"] = std::move(list);
  return dump(j);
}

MinusculeQuiver quiver_of(const RootSystem& rs, const Options& o) {
  const Variant variant = variant_of(o);
  const int omega = weight_of(rs, o, variant);
  return build_quiver(rs, parse_word(*o.word), omega, variant);
}

std::string quiver_command(const Options& o) {
  const RootSystem rs = system_of(o);
  const MinusculeQuiver q = quiver_of(rs, o);
  if (o.format == "dot") return quiver_dot(q);
  if (o.format == "ascii") return quiver_ascii(q);
  if (o.format == "table") return quiver_table(q);
  return dump(quiver_json(q));
}

std::string classify_command(const Options& o) {
  require_format(o, {"json", "table"}, "classify");
  const RootSystem rs = system_of(o);
  const ClassificationReport report = classify(rs, quiver_of(rs, o), o.max_peaks);
  return o.format == "table" ? classification_table(report) : dump(classification_json(report));
}

std::string cone_text(const ConeDescription& cone) {
  std::string text;
  for (Eigen::Index c = 0; c < cone.generators.cols(); ++c) {
    text += "  (";
    for (Eigen::Index r = 0; r < cone.generators.rows(); ++r) {
      text += (r ? "," : "") + to_fraction_string(cone.generators(r, c));
    }
    text += ")";
    if (!cone.generator_vertices.empty()) text += " from L_" + std::to_string(cone.generator_vertices[c]);
    text += "\n";
  }
  return text;
}

std::string cones_command(const Options& o) {
  require_format(o, {"json", "table"}, "cones");
  const RootSystem rs = system_of(o);
  const MinusculeQuiver q = quiver_of(rs, o);
  std::vector<std::pair<std::vector<std::vector<int>>, PeakDecomposition>> chosen;
  if (o.ordering) {
    chosen.emplace_back(std::vector<std::vector<int>>{parse_ints(*o.ordering)},
                        decompose(rs, q, parse_ints(*o.ordering)));
  } else {
    for (auto& c : enumerate_decompositions(rs, q, o.max_peaks)) chosen.emplace_back(c.orderings, c.decomposition);
  }
  const ConeDescription eff = effective_cone(q);
  if (o.format == "table") {
    std::string text = "effective (dhat basis, peaks " + format_word(eff.peaks) + "):\n" + cone_text(eff);
    for (const auto& [orderings, d] : chosen) {
      text += "nef, ordering " + format_word(orderings.front()) + ":\n" + cone_text(nef_cone(rs, d));
    }
    return text;
  }
  Json j;
  j["element"] = element_json(q);
  j["effective"] = cone_json(eff);
  Json nef = Json::array();
  for (const auto& [orderings, d] : chosen) {
    const ConeDescription cone = nef_cone(rs, d);
    Json entry;
    entry["orderings"] = orderings;
    entry["parts"] = d.parts;
    entry["generator_vertices"] = cone.generator_vertices;
    entry["cone"] = cone_json(cone);
    nef.push_back(std::move(entry));
  }
  j["nef"] = std::move(nef);
  return dump(j);
}

std::string peel_command(const Options& o) {
  require_format(o, {"json", "table"}, "peel");
  const RootSystem rs = system_of(o);
  const MinusculeQuiver q = quiver_of(rs, o);
  if (!o.divisor) throw InputError("--class is required for peel");
  const auto values = parse_rationals(*o.divisor);
  DivisorClass d;
  d.basis = Basis::DHat;
  d.labels = peaks(q);
  if (values.size() != d.labels.size()) {
    throw InputError("--class needs " + std::to_string(d.labels.size()) + " coordinates, one per peak");
  }
  d.coords = QVector(static_cast<Eigen::Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) d.coords(static_cast<Eigen::Index>(k)) = values[k];
  const PeelResult result = peel(rs, q, d);
  if (o.format == "table") {
    std::string text;
    for (const auto& step : result.steps) {
      text += "L_" + std::to_string(step.vertex) + " x " + to_fraction_string(step.mu) + "\n";
    }
    return text + "ordering " + format_word(result.ordering) + "\n";
  }
  return dump(peel_json(q, d, result));
}

int verify_command(const Options& o, std::string& text) {
  require_format(o, {"json", "table"}, "verify");
  const RootSystem rs = system_of(o);
  const Variant variant = variant_of(o);
  const int omega = weight_of(rs, o, variant);
  SuiteOptions options;
  options.bounds.max_length = o.max_length;
  options.cover.seed = o.seed;
  options.cover.max_peaks = o.max_peaks;
  options.cover.samples = o.samples;
  const SuiteReport report = run_invariant_suite(rs, omega, variant, options);
  if (o.format == "table") {
    std::ostringstream out;
    out << report.system << " omega_" << omega << " " << to_string(variant) << ": " << report.elements
        << " elements\n";
    for (const auto& c : report.checks) {
      out << std::left << std::setw(24) << c.name << std::right << " passed " << std::setw(6) << c.passed
          << "  failed " << std::setw(4) << c.failed << "  skipped " << std::setw(4) << c.skipped << "\n";
      for (const auto& w : c.witnesses) out << "    " << w << "\n";
    }
    out << (report.ok() ? "OK" : "FAILED") << "\n";
    text = out.str();
  } else {
    Json j;
    j["type"] = std::string(1, rs.type_letter());
    j["rank"] = rs.rank();
    j["weight"] = omega;
    j["variant"] = to_string(variant);
    j["seed"] = o.seed;
    j["elements"] = report.elements;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"failed", c.failed},
                        {"skipped", c.skipped},
                        {"witnesses", c.witnesses}});
    }
    j["checks"] = std::move(checks);
    j["ok"] = report.ok();
    text = dump(j);
  }
  return report.ok() ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Q-factorializations and IH-small resolutions of (co)minuscule Schubert varieties", "minuscule"};
  app.require_subcommand(1);

  auto* weights = app.add_subcommand("weights", "List minuscule and cominuscule weights");
  add_options(weights, o, Need::System);
  auto* elements = app.add_subcommand("elements", "Enumerate the (co)minuscule elements of W/W_P");
  add_options(elements, o, Need::Weight);
  auto* quiver = app.add_subcommand("quiver", "Emit the quiver of a word");
  add_options(quiver, o, Need::Element);
  auto* classify_cmd = app.add_subcommand("classify", "Classify Q-factorializations and IH-small resolutions");
  add_options(classify_cmd, o, Need::Element);
  classify_cmd->add_option("--max-peaks", o.max_peaks, "Bound on the number of peaks");
  auto* cones = app.add_subcommand("cones", "Emit the effective cone and the nef cones");
  add_options(cones, o, Need::Element);
  cones->add_option("--ordering", o.ordering, "Single peak ordering, comma-separated");
  cones->add_option("--max-peaks", o.max_peaks, "Bound on the number of peaks");
  auto* peel_cmd = app.add_subcommand("peel", "Write an effective class as a sum of nef generators");
  add_options(peel_cmd, o, Need::Element);
  peel_cmd->add_option("--class", o.divisor, "Coordinates in the peak basis, comma-separated rationals")->required();
  auto* verify = app.add_subcommand("verify", "Run the invariant suite over one quotient");
  add_options(verify, o, Need::Weight);
  verify->add_option("--seed", o.seed, "Seed for the cone sampling");
  verify->add_option("--max-length", o.max_length, "Length bound for brute-force oracles");
  verify->add_option("--max-peaks", o.max_peaks, "Bound on the number of peaks");
  verify->add_option("--samples", o.samples, "Random classes peeled per element");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  int code = 0;
  std::string text;
  try {
    if (*weights) text = weights_command(o);
    else if (*elements) text = elements_command(o);
    else if (*quiver) text = quiver_command(o);
    else if (*classify_cmd) text = classify_command(o);
    else if (*cones) text = cones_command(o);
    else if (*peel_cmd) text = peel_command(o);
    else code = verify_command(o, text);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    err << "error: bound exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return 1;
    }
    file << text;
  }
  if (code == 3) err << "verification failed\n";
  return code;
}

}  // namespace minuscule
