#include "subcur/io.hpp"

#include "subcur/error.hpp"

#include <fstream>
#include <sstream>

namespace subcur {

using nlohmann::json;

json to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.origin, e.terminus, e.generator});
  json j = {{"rank", g.alphabet().rank()}, {"vertices", g.num_vertices()}, {"edges", std::move(edges)}};
  if (g.basepoint()) j["basepoint"] = *g.basepoint();
  return j;
}

LabeledGraph graph_from_json(const json& j) {
  try {
    LabeledGraph g(Alphabet(j.at("rank").get<int>()), j.at("vertices").get<int>());
    for (const json& e : j.at("edges")) {
      const int o = e.at(0).get<int>(), t = e.at(1).get<int>(), a = e.at(2).get<int>();
      if (o < 0 || t < 0 || o >= g.num_vertices() || t >= g.num_vertices()) {
        throw Error(ErrorKind::Parse, "edge endpoint out of range");
      }
      if (a < 1 || a > g.alphabet().rank()) throw Error(ErrorKind::Parse, "edge label out of range");
      g.add_edge(o, t, a);
    }
    if (j.contains("basepoint")) g.set_basepoint(j.at("basepoint").get<int>());
    return g;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("graph JSON: ") + e.what());
  }
}

json to_json(const RationalCurrent& mu) {
  json out = json::array();
  for (const auto& [key, term] : mu.terms()) {
    out.push_back({{"coefficient", to_string(term.coefficient)}, {"graph", to_json(term.graph.graph())}});
  }
  return out;
}

json to_json(const FiberProduct& fp, const BasedCoreGraph& h, const BasedCoreGraph& k) {
  json out = json::array();
  const auto info = classify_components(fp);
  for (int c = 0; c < fp.num_components; ++c) {
    const DoubleCosetTerm term = component_subgroup(fp, c, h, k);
    json gens = json::array();
    for (const Word& w : term.generators) gens.push_back(w.str());
    out.push_back({{"component", c},
                   {"V", info[c].vertices},
                   {"E", info[c].edges},
                   {"chi", info[c].euler},
                   {"contractible", info[c].contractible},
                   {"g", term.representative.str()},
                   {"generators", std::move(gens)}});
  }
  return out;
}

namespace {

std::string label_name(Alphabet alphabet, int generator) { return Word(alphabet, {Letter(generator, 1)}).str(); }

constexpr std::string_view kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                         "#66a61e", "#e6ab02", "#a6761d", "#666666"};

}  // namespace

std::string to_dot(const LabeledGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    if (g.basepoint() == v) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.origin << " -> " << e.terminus << " [label=\"" << label_name(g.alphabet(), e.generator)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const FiberProduct& fp, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  node [style=filled];\n";
  for (Vertex v = 0; v < fp.product.num_vertices(); ++v) {
    const auto [l, r] = fp.project(v);
    out << "  " << v << " [label=\"(" << l << "," << r << ")\", fillcolor=\""
        << kPalette[fp.component[v] % std::size(kPalette)] << "\"];\n";
  }
  for (const Edge& e : fp.product.edges()) {
    out << "  " << e.origin << " -> " << e.terminus << " [label=\""
        << label_name(fp.product.alphabet(), e.generator) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

// Non-comment, non-blank lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(number, line);
  }
  return out;
}

Word parse_line(int number, const std::string& line, Alphabet alphabet) {
  try {
    return Word::parse(line, alphabet);
  } catch (const Error& e) {
    std::string detail = e.what();
    detail.erase(0, detail.find(": ") + 2);
    throw Error(e.kind(), "line " + std::to_string(number) + ": " + detail);
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return in;
}

}  // namespace

std::vector<Word> read_words(std::istream& in, Alphabet alphabet) {
  std::vector<Word> out;
  for (const auto& [number, line] : content_lines(in)) out.push_back(parse_line(number, line, alphabet));
  return out;
}

std::vector<Word> read_words_file(const std::string& path, Alphabet alphabet) {
  auto in = open(path);
  return read_words(in, alphabet);
}

Endomorphism read_automorphism(std::istream& in, Alphabet alphabet) {
  const auto lines = content_lines(in);
  if (static_cast<int>(lines.size()) != alphabet.rank()) {
    throw Error(ErrorKind::Parse, "automorphism needs " + std::to_string(alphabet.rank()) + " lines, found " +
                                      std::to_string(lines.size()));
  }
  std::vector<Word> images;
  for (const auto& [number, line] : lines) images.push_back(parse_line(number, line, alphabet));
  return Endomorphism(alphabet, std::move(images));
}

Endomorphism read_automorphism_file(const std::string& path, Alphabet alphabet) {
  auto in = open(path);
  return read_automorphism(in, alphabet);
}

std::string cylinder_report(const RationalCurrent& mu, std::span<const FiniteSubtree> trees) {
  std::string out = "tree\tvalue\n";
  for (const FiniteSubtree& t : trees) out += t.str() + "\t" + to_string(eval_cylinder(mu, t)) + "\n";
  return out;
}

}  // namespace subcur
