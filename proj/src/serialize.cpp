#include <minuscule/serialize.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace minuscule {

namespace {

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
  return out;
}

std::string marks(bool peak, bool hole) { return std::string(peak ? "^" : "") + (hole ? "o" : ""); }

}  // namespace

Json element_json(const MinusculeQuiver& q) {
  Json j;
  j["type"] = std::string(1, q.type_letter());
  j["rank"] = q.rank();
  j["weight"] = q.omega();
  j["variant"] = to_string(q.variant());
  j["word"] = q.word();
  return j;
}

Json quiver_json(const MinusculeQuiver& q) {
  Json j = element_json(q);
  const auto tops = peaks(q);
  const auto hs = holes(q);
  const auto h = heights(q);
  Json vertices = Json::array();
  for (int v = 1; v <= q.size(); ++v) {
    Json vj;
    vj["index"] = v;
    vj["color"] = q.color(v);
    vj["height"] = h[v - 1];
    vj["peak"] = contains(tops, v);
    vj["hole"] = contains(hs, v);
    vj["successor"] = q.successor(v) ? Json(q.successor(v)) : Json(nullptr);
    vj["predecessor"] = q.predecessor(v) ? Json(q.predecessor(v)) : Json(nullptr);
    vertices.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vertices);
  Json arrows = Json::array();
  for (const auto& [from, to] : q.arrows()) arrows.push_back({from, to});
  j["arrows"] = std::move(arrows);
  return j;
}

Json classification_json(const ClassificationReport& report) {
  Json j;
  j["element"] = element_json(report.quiver);
  Json list = Json::array();
  for (const auto& c : report.decompositions) {
    Json cj;
    cj["orderings"] = c.orderings;
    cj["parts"] = c.decomposition.parts;
    cj["words"] = c.decomposition.part_words;
    cj["neat"] = c.neat;
    cj["smooth"] = c.smooth;
    cj["ih_small"] = c.ih_small();
    list.push_back(std::move(cj));
  }
  j["decompositions"] = std::move(list);
  j["counts"] = {{"qfact", report.qfact_count()}, {"ih_small", report.ih_small_count()}};
  return j;
}

Json cone_json(const ConeDescription& cone) {
  Json j;
  j["basis"] = cone.basis == Basis::DHat ? "dhat" : "xi";
  j["peaks"] = cone.peaks;
  Json gens = Json::array();
  for (Eigen::Index c = 0; c < cone.generators.cols(); ++c) {
    Json g = Json::array();
    for (Eigen::Index r = 0; r < cone.generators.rows(); ++r) g.push_back(to_fraction_string(cone.generators(r, c)));
    gens.push_back(std::move(g));
  }
  j["generators"] = std::move(gens);
  j["simplicial"] = cone.simplicial;
  return j;
}

Json peel_json(const MinusculeQuiver& q, const DivisorClass& divisor, const PeelResult& result) {
  Json j;
  j["element"] = element_json(q);
  j["peaks"] = divisor.labels;
  Json coords = Json::array();
  for (Eigen::Index k = 0; k < divisor.coords.size(); ++k) coords.push_back(to_fraction_string(divisor.coords(k)));
  j["class"] = std::move(coords);
  j["ordering"] = result.ordering;
  Json steps = Json::array();
  for (const auto& step : result.steps) steps.push_back({{"vertex", step.vertex}, {"mu", to_fraction_string(step.mu)}});
  j["steps"] = std::move(steps);
  j["parts"] = result.decomposition.parts;
  j["nef_vertices"] = result.decomposition.minimal_vertices;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string quiver_dot(const MinusculeQuiver& q) {
  const auto h = heights(q);
  std::ostringstream out;
  out << "digraph Q {\n";
  for (int v = 1; v <= q.size(); ++v) {
    out << "  v" << v << " [label=\"" << v << ":\xce\xb1" << q.color(v) << "\"];\n";
  }
  const int top = q.empty() ? 0 : *std::max_element(h.begin(), h.end());
  for (int level = top; level >= 1; --level) {
    std::vector<int> row;
    for (int v = 1; v <= q.size(); ++v) {
      if (h[v - 1] == level) row.push_back(v);
    }
    out << "  { rank=same;";
    for (int v : row) out << " v" << v << ";";
    out << " }\n";
  }
  for (const auto& [from, to] : q.arrows()) out << "  v" << from << " -> v" << to << ";\n";
  out << "}\n";
  return out.str();
}

std::string quiver_ascii(const MinusculeQuiver& q) {
  const auto tops = peaks(q);
  const auto hs = holes(q);
  const auto h = heights(q);
  const int top = q.empty() ? 0 : *std::max_element(h.begin(), h.end());
  constexpr int width = 6;
  std::ostringstream out;
  out << q.system_name() << " omega_" << q.omega() << " " << to_string(q.variant()) << " [" << format_word(q.word())
      << "]\n";
  out << "height |";
  for (int c = 1; c <= q.rank(); ++c) out << std::setw(width) << ("a" + std::to_string(c));
  out << "\n" << std::string(8 + width * q.rank(), '-') << "\n";
  for (int level = top; level >= 1; --level) {
    out << std::setw(6) << level << " |";
    for (int c = 1; c <= q.rank(); ++c) {
      std::string cell = ".";
      for (int v = 1; v <= q.size(); ++v) {
        if (h[v - 1] == level && q.color(v) == c) cell = std::to_string(v) + marks(contains(tops, v), contains(hs, v));
      }
      out << std::setw(width) << cell;
    }
    out << "\n";
  }
  out << "peaks: " << join(tops, " ") << "   holes: " << join(hs, " ") << "   (^ peak, o hole)\n";
  return out.str();
}

std::string quiver_table(const MinusculeQuiver& q) {
  const auto tops = peaks(q);
  const auto hs = holes(q);
  const auto h = heights(q);
  std::ostringstream out;
  out << "vertex  color  height  peak  hole  targets\n";
  for (int v = 1; v <= q.size(); ++v) {
    out << std::setw(6) << v << std::setw(7) << q.color(v) << std::setw(8) << h[v - 1] << std::setw(6)
        << (contains(tops, v) ? "yes" : "no") << std::setw(6) << (contains(hs, v) ? "yes" : "no") << "  "
        << join(q.targets(v)) << "\n";
  }
  return out.str();
}

std::string classification_table(const ClassificationReport& report) {
  std::ostringstream out;
  out << "parts                          words                          neat  smooth  ih_small  orderings\n";
  for (const auto& c : report.decompositions) {
    std::string parts, words, orderings;
    for (const auto& p : c.decomposition.parts) parts += "{" + join(p) + "}";
    for (const auto& w : c.decomposition.part_words) words += "[" + join(w) + "]";
    for (const auto& o : c.orderings) orderings += "(" + join(o) + ")";
    out << std::left << std::setw(31) << parts << std::setw(31) << words << std::setw(6) << (c.neat ? "yes" : "no")
        << std::setw(8) << (c.smooth ? "yes" : "no") << std::setw(10) << (c.ih_small() ? "yes" : "no") << orderings
        << std::right << "\n";
  }
  out << "qfact " << report.qfact_count() << "  ih_small " << report.ih_small_count() << "\n";
  return out.str();
}

}  // namespace minuscule
