#include "commands.hpp"

#include "subcur/automorphisms.hpp"
#include "subcur/currents.hpp"
#include "subcur/error.hpp"
#include "subcur/fiber.hpp"
#include "subcur/io.hpp"
#include "subcur/stallings.hpp"

#include <fstream>
#include <ostream>
#include <set>

namespace subcur::cli {

using nlohmann::json;

namespace {

BasedCoreGraph load(const RunConfig& config, std::size_t i) {
  if (config.inputs.size() <= i) throw Error(ErrorKind::InvalidArgument, "missing subgroup file argument");
  const Alphabet alphabet(config.rank);
  return from_generators(alphabet, read_words_file(config.inputs[i], alphabet));
}

std::string join(const std::vector<Word>& words, std::string_view sep = ",") {
  std::string out;
  for (const Word& w : words) {
    if (!out.empty()) out += sep;
    out += w.str();
  }
  return out;
}

struct ProductReport {
  Rational euler, cosets, currents;
  bool agree() const { return euler == cosets && cosets == currents; }
};

ProductReport product_routes(const BasedCoreGraph& h, const BasedCoreGraph& k) {
  return {intersection_number_euler(core(h), core(k)), intersection_number_cosets(h, k),
          intersection_functional_N(RationalCurrent::counting(h), RationalCurrent::counting(k))};
}

void dump_pair(std::ostream& err, const BasedCoreGraph& h, const BasedCoreGraph& k) {
  err << "H = <" << join(generators(h)) << ">\n" << to_json(h.graph()).dump() << "\n";
  err << "K = <" << join(generators(k)) << ">\n" << to_json(k.graph()).dump() << "\n";
}

}  // namespace

int cmd_core(const RunConfig& config, std::ostream& out, std::ostream&) {
  const BasedCoreGraph h = load(config, 0);
  const int rk = rank(h);
  const int rrk = reduced_rank(h);
  if (config.format == Format::Json) {
    out << json{{"graph", to_json(h.graph())},
                {"rank", rk},
                {"reduced_rank", rrk},
                {"vertices", h.num_vertices()},
                {"edges", h.num_edges()},
                {"generators", join(generators(h))}}
               .dump(2)
        << "\n";
  } else {
    out << "rank\treduced_rank\tvertices\tedges\tgenerators\n"
        << rk << "\t" << rrk << "\t" << h.num_vertices() << "\t" << h.num_edges() << "\t" << join(generators(h))
        << "\n";
  }
  if (!config.dot.empty()) std::ofstream(config.dot) << to_dot(h.graph(), "core");
  return kOk;
}

int cmd_product(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const BasedCoreGraph h = load(config, 0);
  const BasedCoreGraph k = load(config, 1);
  const ProductReport r = product_routes(h, k);
  const Rational bound = Rational(reduced_rank(h)) * reduced_rank(k);
  if (!r.agree()) {
    err << "route disagreement: euler " << to_string(r.euler) << ", cosets " << to_string(r.cosets)
        << ", currents " << to_string(r.currents) << "\n";
    dump_pair(err, h, k);
    return kAssertion;
  }
  const FiberProduct fp = fiber_product(h.graph(), k.graph());
  if (config.format == Format::Json) {
    json cosets = json::array();
    for (const DoubleCosetTerm& t : double_cosets(h, k)) {
      cosets.push_back({{"g", t.representative.str()}, {"generators", join(t.generators)}});
    }
    out << json{{"N_euler", to_string(r.euler)},
                {"N_cosets", to_string(r.cosets)},
                {"N_currents", to_string(r.currents)},
                {"rk_product", to_string(bound)},
                {"shnc_margin", to_string(bound - r.euler)},
                {"double_cosets", std::move(cosets)},
                {"components", to_json(fp, h, k)}}
               .dump(2)
        << "\n";
  } else {
    out << "N_euler\tN_cosets\tN_currents\trk_product\tshnc_margin\n"
        << to_string(r.euler) << "\t" << to_string(r.cosets) << "\t" << to_string(r.currents) << "\t"
        << to_string(bound) << "\t" << to_string(bound - r.euler) << "\n";
    out << "g\tgenerators\n";
    for (const DoubleCosetTerm& t : double_cosets(h, k)) out << t.representative.str() << "\t" << join(t.generators) << "\n";
  }
  if (!config.dot.empty()) std::ofstream(config.dot) << to_dot(fp, "product");
  return bound < r.euler ? kAssertion : kOk;
}

int cmd_shnc_scan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.samples < 1) throw Error(ErrorKind::InvalidArgument, "--samples must be positive");
  const Alphabet alphabet(config.rank);
  Rng rng(config.seed);
  int status = kOk;
  out << "index\tH\tK\tN\trk_product\tratio\n";
  for (int i = 0; i < config.samples; ++i) {
    const BasedCoreGraph h = random_subgroup(rng, alphabet, config.max_gens, config.max_gen_len);
    const BasedCoreGraph k = config.diagonal ? h : random_subgroup(rng, alphabet, config.max_gens, config.max_gen_len);
    const ProductReport r = product_routes(h, k);
    const Rational bound = Rational(reduced_rank(h)) * reduced_rank(k);
    const std::string ratio = bound == 0 ? "NA" : to_string(r.euler / bound);
    out << i << "\t" << join(generators(h)) << "\t" << join(generators(k)) << "\t" << to_string(r.euler) << "\t"
        << to_string(bound) << "\t" << ratio << "\n";
    if (!r.agree()) {
      err << "sample " << i << ": route disagreement (" << to_string(r.euler) << ", " << to_string(r.cosets) << ", "
          << to_string(r.currents) << ")\n";
      dump_pair(err, h, k);
      status = kAssertion;
    }
    if (r.euler > bound) {
      err << "sample " << i << ": N = " << to_string(r.euler) << " exceeds " << to_string(bound) << "\n";
      dump_pair(err, h, k);
      status = kAssertion;
    }
  }
  return status;
}

namespace {

// <a^n b>
BasedCoreGraph power_then_b(Alphabet alphabet, int n) {
  std::vector<Letter> letters(n, Letter(1, 1));
  letters.emplace_back(2, 1);
  const Word w(alphabet, std::move(letters));
  return from_generators(alphabet, std::span(&w, 1));
}

}  // namespace

int cmd_converge(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.n_max < 1) throw Error(ErrorKind::InvalidArgument, "--n-max must be >= 1");
  if (config.grade < 1) throw Error(ErrorKind::InvalidArgument, "--grade must be >= 1");
  const Alphabet alphabet(config.rank);
  const Word a(alphabet, {Letter(1, 1)});
  const BasedCoreGraph cyclic = from_generators(alphabet, std::span(&a, 1));
  const RationalCurrent limit = RationalCurrent::counting(cyclic);

  std::vector<RationalCurrent> rows;
  for (int n = 1; n <= config.n_max; ++n) {
    rows.push_back(RationalCurrent::counting(power_then_b(alphabet, n)).scaled(Rational(1, n)));
  }

  // Columns: edge trees, then every round graph up to the grade cap that
  // some row or the limit actually sees.
  std::vector<FiniteSubtree> trees;
  for (int i = 1; i <= alphabet.rank(); ++i) trees.push_back(FiniteSubtree::edge(Letter(i, 1), alphabet));
  for (int r = 1; r <= config.grade; ++r) {
    if (count_round_graphs(r, alphabet) > kDefaultRoundGraphCap) {
      throw Error(ErrorKind::SizeLimit, "grade " + std::to_string(r) + " exceeds the round graph cap");
    }
    std::set<FiniteSubtree> seen;
    auto collect = [&](const RationalCurrent& mu) {
      for (const auto& [key, term] : mu.terms()) {
        for (Vertex v = 0; v < term.graph.num_vertices(); ++v) seen.insert(neighborhood_tree(term.graph, v, r).tree);
      }
    };
    for (const RationalCurrent& mu : rows) collect(mu);
    collect(limit);
    trees.insert(trees.end(), seen.begin(), seen.end());
  }

  const FiniteSubtree e_a = FiniteSubtree::edge(Letter(1, 1), alphabet);
  int status = kOk;
  out << "n";
  for (const FiniteSubtree& t : trees) out << "\t{" << t.str() << "}";
  out << "\tN\tI_mass\n";
  for (int n = 1; n <= config.n_max; ++n) {
    const RationalCurrent& mu = rows[n - 1];
    out << n;
    for (const FiniteSubtree& t : trees) out << "\t" << to_string(eval_cylinder(mu, t));
    const Rational n_value = intersection_functional_N(mu, limit);
    const Rational mass = eval_cylinder(pushforward_I(mu, limit), e_a);
    out << "\t" << to_string(n_value) << "\t" << to_string(mass) << "\n";
    if (n_value != 0) {
      err << "row " << n << ": N = " << to_string(n_value) << ", expected 0\n";
      status = kAssertion;
    }
  }
  out << "limit";
  for (const FiniteSubtree& t : trees) out << "\t" << to_string(eval_cylinder(limit, t));
  const RationalCurrent self = pushforward_I(limit, limit);
  out << "\t" << to_string(intersection_functional_N(limit, limit)) << "\t" << to_string(eval_cylinder(self, e_a))
      << "\n";
  if (self.is_zero()) {
    err << "pushforward of <a> with itself vanished\n";
    status = kAssertion;
  }
  return status;
}

int cmd_intersect(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const BasedCoreGraph h = load(config, 0);
  const BasedCoreGraph k = load(config, 1);
  const RationalCurrent mu = RationalCurrent::counting(h);
  const RationalCurrent nu = RationalCurrent::counting(k);
  const RationalCurrent image = pushforward_I(mu, nu);
  const Rational rk = functional_rk(image);
  const Rational n_value = intersection_functional_N(mu, nu);
  if (config.format == Format::Json) {
    out << json{{"current", to_json(image)}, {"rk", to_string(rk)}, {"N", to_string(n_value)}}.dump(2) << "\n";
  } else {
    out << "coefficient\tgenerators\n";
    for (const auto& [key, term] : image.terms()) {
      out << to_string(term.coefficient) << "\t" << join(generators(based_at(term.graph, 0))) << "\n";
    }
  }
  if (rk != n_value) {
    err << "rk of the pushforward is " << to_string(rk) << " but N is " << to_string(n_value) << "\n";
    dump_pair(err, h, k);
    return kAssertion;
  }
  return kOk;
}

int cmd_cylinders(const RunConfig& config, std::ostream& out, std::ostream&) {
  const BasedCoreGraph h = load(config, 0);
  const Alphabet alphabet(config.rank);
  const RationalCurrent mu = RationalCurrent::counting(h);
  std::vector<FiniteSubtree> trees;
  for (int i = 1; i <= alphabet.rank(); ++i) trees.push_back(FiniteSubtree::edge(Letter(i, 1), alphabet));
  for (int r = 1; r <= config.grade; ++r) {
    for (RoundGraph& t : enumerate_round_graphs(r, alphabet)) trees.push_back(std::move(t.tree));
  }
  if (config.format == Format::Json) {
    json rows = json::array();
    for (const FiniteSubtree& t : trees) rows.push_back({{"tree", t.str()}, {"value", to_string(eval_cylinder(mu, t))}});
    out << rows.dump(2) << "\n";
  } else {
    out << cylinder_report(mu, trees);
  }
  return kOk;
}

int run(const std::string& command, const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (command == "core") return cmd_core(config, out, err);
    if (command == "product") return cmd_product(config, out, err);
    if (command == "shnc-scan") return cmd_shnc_scan(config, out, err);
    if (command == "converge") return cmd_converge(config, out, err);
    if (command == "intersect") return cmd_intersect(config, out, err);
    if (command == "cylinders") return cmd_cylinders(config, out, err);
    err << "unknown command " << command << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::MismatchBug ? kAssertion : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace subcur::cli
