#include "subcur/currents.hpp"

#include "subcur/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>

namespace subcur {

// ---------------------------------------------------------------------------
// FiniteSubtree

FiniteSubtree::FiniteSubtree(Alphabet alphabet, std::vector<Word> sorted_words)
    : alphabet_(alphabet), words_(std::move(sorted_words)), parent_(words_.size(), -1), degree_(words_.size(), 0) {
  for (std::size_t i = 1; i < words_.size(); ++i) {
    const Word p = words_[i].parent();
    const auto it = std::lower_bound(words_.begin(), words_.end(), p);
    if (it == words_.end() || *it != p) {
      throw Error(ErrorKind::InvalidArgument, "subtree is not prefix-closed: missing parent of " + words_[i].str());
    }
    parent_[i] = static_cast<int>(it - words_.begin());
    ++degree_[i];
    ++degree_[parent_[i]];
  }
}

FiniteSubtree FiniteSubtree::identity(Alphabet alphabet) { return FiniteSubtree(alphabet, {Word(alphabet)}); }

FiniteSubtree FiniteSubtree::edge(Letter x, Alphabet alphabet) {
  return from_words(alphabet, {Word(alphabet), Word(alphabet, {x})});
}

FiniteSubtree FiniteSubtree::from_words(Alphabet alphabet, std::vector<Word> words) {
  for (const Word& w : words) {
    if (w.alphabet() != alphabet) throw Error(ErrorKind::AlphabetMismatch, "subtree word over a different rank");
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  if (words.empty() || !words.front().empty()) {
    throw Error(ErrorKind::InvalidArgument, "subtree must contain the identity");
  }
  return FiniteSubtree(alphabet, std::move(words));
}

FiniteSubtree FiniteSubtree::parse(std::string_view text, Alphabet alphabet) {
  std::vector<Word> words;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) words.push_back(Word::parse(token, alphabet));
    token.clear();
  };
  for (char c : text) {
    if (c == '{' || c == '}') continue;
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return from_words(alphabet, std::move(words));
}

bool FiniteSubtree::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::string FiniteSubtree::str() const {
  std::string out;
  for (const Word& w : words_) {
    if (!out.empty()) out.push_back(',');
    out += w.str();
  }
  return out;
}

std::strong_ordering operator<=>(const FiniteSubtree& a, const FiniteSubtree& b) {
  if (auto c = a.words_.size() <=> b.words_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
}

FiniteSubtree tree_intersection(const FiniteSubtree& a, const FiniteSubtree& b) {
  if (a.alphabet() != b.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "intersection of trees over different ranks");
  std::vector<Word> common;
  std::set_intersection(a.words().begin(), a.words().end(), b.words().begin(), b.words().end(),
                        std::back_inserter(common));
  return FiniteSubtree::from_words(a.alphabet(), std::move(common));
}

bool is_round(const FiniteSubtree& t, int grade) {
  if (grade < 1 || t.degree(0) < 2) return false;
  for (int i = 1; i < t.num_vertices(); ++i) {
    if (t.degree(i) == 1 && static_cast<int>(t.words()[i].size()) != grade) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Round graphs

RoundGraph neighborhood_tree(const CoreGraph& g, Vertex v, int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "neighborhood grade must be >= 1");
  if (v < 0 || v >= g.num_vertices()) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  std::vector<Word> words{Word(g.alphabet())};
  std::deque<std::pair<Vertex, std::size_t>> queue{{v, 0}};
  while (!queue.empty()) {
    const auto [at, index] = queue.front();
    queue.pop_front();
    const Word w = words[index];
    if (static_cast<int>(w.size()) == r) continue;
    for (const HalfEdge& h : g.graph().incident(at)) {
      if (!w.empty() && h.letter == w.back().inverse()) continue;
      words.push_back(w.extended(h.letter));
      queue.emplace_back(h.target, words.size() - 1);
    }
  }
  return {FiniteSubtree::from_words(g.alphabet(), std::move(words)), r};
}

Integer count_round_graphs(int r, Alphabet alphabet) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "round graph grade must be >= 1");
  const int directions = alphabet.directions();
  // Choices for the branch hanging below a non-root vertex at depth d.
  Integer below = 1;  // depth r: a leaf
  for (int d = r - 1; d >= 1; --d) below = boost::multiprecision::pow(Integer(below + 1), directions - 1) - 1;
  // Root: at least two branches.
  return boost::multiprecision::pow(Integer(below + 1), directions) - 1 - directions * below;
}

namespace {

using WordSet = std::vector<Word>;

void cartesian(const std::vector<const std::vector<WordSet>*>& factors, std::size_t i, WordSet& acc,
               std::vector<WordSet>& out) {
  if (i == factors.size()) {
    out.push_back(acc);
    return;
  }
  for (const WordSet& option : *factors[i]) {
    const std::size_t mark = acc.size();
    acc.insert(acc.end(), option.begin(), option.end());
    cartesian(factors, i + 1, acc, out);
    acc.erase(acc.begin() + static_cast<std::ptrdiff_t>(mark), acc.end());
  }
}

// Every way to grow a round branch of total radius r from w (at depth
// |w|), keeping at least `min_children` children at w.
std::vector<WordSet> branch_options(const Word& w, int r, int min_children) {
  if (static_cast<int>(w.size()) == r) return {{w}};
  const Alphabet alphabet = w.alphabet();
  std::vector<std::vector<WordSet>> children;
  for (int d = 0; d < alphabet.directions(); ++d) {
    const Letter x = Letter::from_direction(d);
    if (!w.empty() && x == w.back().inverse()) continue;
    children.push_back(branch_options(w.extended(x), r, 1));
  }
  std::vector<WordSet> out;
  const unsigned k = static_cast<unsigned>(children.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    if (std::popcount(mask) < min_children) continue;
    std::vector<const std::vector<WordSet>*> factors;
    for (unsigned j = 0; j < k; ++j) {
      if (mask & (1u << j)) factors.push_back(&children[j]);
    }
    WordSet acc{w};
    cartesian(factors, 0, acc, out);
  }
  return out;
}

}  // namespace

std::vector<RoundGraph> enumerate_round_graphs(int r, Alphabet alphabet, std::uint64_t cap) {
  const Integer count = count_round_graphs(r, alphabet);
  if (count > cap) {
    throw Error(ErrorKind::SizeLimit, "|R_" + std::to_string(r) + "| = " + count.str() + " exceeds cap " +
                                          std::to_string(cap));
  }
  std::vector<RoundGraph> out;
  for (WordSet& words : branch_options(Word(alphabet), r, 2)) {
    out.push_back({FiniteSubtree::from_words(alphabet, std::move(words)), r});
  }
  std::sort(out.begin(), out.end(), [](const RoundGraph& a, const RoundGraph& b) { return a.tree < b.tree; });
  return out;
}

namespace {

const std::vector<RoundGraph>& grade_one(Alphabet alphabet) {
  static std::mutex mutex;
  static std::map<int, std::vector<RoundGraph>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(alphabet.rank());
  if (it == cache.end()) it = cache.emplace(alphabet.rank(), enumerate_round_graphs(1, alphabet)).first;
  return it->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// Occurrences

int occurrence_count(const FiniteSubtree& t, const CoreGraph& g) {
  if (t.degenerate()) throw Error(ErrorKind::InvalidArgument, "occurrences need a nondegenerate tree");
  if (t.alphabet() != g.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "tree and graph over different ranks");
  const auto words = t.words();
  const LabeledGraph& graph = g.graph();
  std::vector<Vertex> image(words.size());
  int count = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    image[0] = v;
    bool ok = true;
    for (std::size_t i = 1; i < words.size() && ok; ++i) {
      const auto next = graph.follow(image[t.parent_index(static_cast<int>(i))], words[i].back());
      if (!next) {
        ok = false;
      } else {
        image[i] = *next;
      }
    }
    // Locally homeomorphic in the interior.
    for (std::size_t i = 0; i < words.size() && ok; ++i) {
      const int d = t.degree(static_cast<int>(i));
      if (d > 1 && graph.degree(image[i]) != d) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// RationalCurrent

void RationalCurrent::add_term(const std::string& key, const Rational& coefficient, const CoreGraph& canonical_graph) {
  if (coefficient == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, Term{coefficient, canonical_graph});
  } else {
    it->second.coefficient += coefficient;
  }
}

RationalCurrent RationalCurrent::counting(const BasedCoreGraph& h) {
  const RawTerm raw{1, h};
  return normalize(h.alphabet(), std::span(&raw, 1));
}

RationalCurrent RationalCurrent::counting(const CoreGraph& g) { return counting(based_at(g, 0)); }

RationalCurrent& RationalCurrent::operator+=(const RationalCurrent& other) {
  if (other.alphabet_ != alphabet_) throw Error(ErrorKind::AlphabetMismatch, "adding currents over different ranks");
  for (const auto& [key, term] : other.terms_) add_term(key, term.coefficient, term.graph);
  return *this;
}

RationalCurrent RationalCurrent::scaled(const Rational& factor) const {
  if (factor < 0) throw Error(ErrorKind::InvalidArgument, "currents only scale by nonnegative rationals");
  RationalCurrent out(alphabet_);
  if (factor == 0) return out;
  out.terms_ = terms_;
  for (auto& [key, term] : out.terms_) term.coefficient *= factor;
  return out;
}

bool operator==(const RationalCurrent& a, const RationalCurrent& b) {
  if (a.alphabet_ != b.alphabet_ || a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.coefficient != ib->second.coefficient) return false;
  }
  return true;
}

RationalCurrent normalize(Alphabet alphabet, std::span<const RawTerm> raw) {
  RationalCurrent out(alphabet);
  for (const RawTerm& term : raw) {
    if (term.coefficient < 0) throw Error(ErrorKind::InvalidArgument, "negative coefficient in a current");
    if (term.coefficient == 0) continue;
    if (term.group.alphabet() != alphabet) throw Error(ErrorKind::AlphabetMismatch, "term over a different rank");
    const Commensurator comm = commensurator(term.group);
    const CoreGraph canonical = canonical_form(core(comm.group));
    out.add_term(canonical_key(canonical), term.coefficient * comm.index, canonical);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Functionals

Rational eval_cylinder(const RationalCurrent& mu, const FiniteSubtree& t) {
  Rational total = 0;
  for (const auto& [key, term] : mu.terms()) total += term.coefficient * occurrence_count(t, term.graph);
  return total;
}

Rational functional_E(const RationalCurrent& mu) {
  Rational total = 0;
  for (int a = 1; a <= mu.alphabet().rank(); ++a) {
    total += eval_cylinder(mu, FiniteSubtree::edge(Letter(a, 1), mu.alphabet()));
  }
  return total;
}

Rational functional_V(const RationalCurrent& mu) {
  Rational total = 0;
  for (const RoundGraph& t : grade_one(mu.alphabet())) total += eval_cylinder(mu, t.tree);
  return total;
}

Rational functional_rk(const RationalCurrent& mu) { return functional_E(mu) - functional_V(mu); }

Rational E_hat(const RationalCurrent& mu, const RationalCurrent& nu) {
  if (mu.alphabet() != nu.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "currents over different ranks");
  Rational total = 0;
  for (int a = 1; a <= mu.alphabet().rank(); ++a) {
    const FiniteSubtree e = FiniteSubtree::edge(Letter(a, 1), mu.alphabet());
    total += eval_cylinder(mu, e) * eval_cylinder(nu, e);
  }
  return total;
}

Rational V_hat(const RationalCurrent& mu, const RationalCurrent& nu) { return functional_V(mu) * functional_V(nu); }

namespace {

int contractible_components(const CoreGraph& h, const CoreGraph& k) {
  int count = 0;
  for (const ComponentInfo& c : classify_components(fiber_product(h, k))) count += c.contractible ? 1 : 0;
  return count;
}

}  // namespace

Rational c_hat(const RationalCurrent& mu, const RationalCurrent& nu) {
  if (mu.alphabet() != nu.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "currents over different ranks");
  Rational total = 0;
  for (const auto& [k1, s] : mu.terms()) {
    for (const auto& [k2, t] : nu.terms()) {
      total += s.coefficient * t.coefficient * contractible_components(s.graph, t.graph);
    }
  }
  return total;
}

Rational intersection_functional_N(const RationalCurrent& mu, const RationalCurrent& nu) {
  return E_hat(mu, nu) - V_hat(mu, nu) + c_hat(mu, nu);
}

// ---------------------------------------------------------------------------
// Contractible components of a given shape

namespace {

// Lift of a tree component to X rooted at `root`.
FiniteSubtree lift_component(const LabeledGraph& product, const std::vector<int>& component, Vertex root) {
  std::vector<Word> words{Word(product.alphabet())};
  std::vector<Vertex> at{root};
  std::vector<char> seen(product.num_vertices(), 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < at.size(); ++i) {
    for (const HalfEdge& h : product.incident(at[i])) {
      if (seen[h.target]) continue;
      seen[h.target] = 1;
      at.push_back(h.target);
      words.push_back(words[i].extended(h.letter));
    }
  }
  (void)component;
  return FiniteSubtree::from_words(product.alphabet(), std::move(words));
}

int count_by_isomorphism(const CoreGraph& h, const CoreGraph& k, const FiniteSubtree& t) {
  const FiberProduct fp = fiber_product(h, k);
  const auto info = classify_components(fp);
  std::vector<std::vector<Vertex>> members(fp.num_components);
  for (Vertex v = 0; v < fp.product.num_vertices(); ++v) members[fp.component[v]].push_back(v);
  int count = 0;
  for (int c = 0; c < fp.num_components; ++c) {
    if (!info[c].contractible || info[c].vertices != t.num_vertices()) continue;
    for (Vertex root : members[c]) {
      if (lift_component(fp.product, fp.component, root) == t) {
        ++count;
        break;
      }
    }
  }
  return count;
}

int count_by_round_graphs(const CoreGraph& h, const CoreGraph& k, const FiniteSubtree& t,
                          std::span<const RoundGraph> round_graphs) {
  std::vector<std::pair<const FiniteSubtree*, int>> left, right;
  for (const RoundGraph& rg : round_graphs) {
    if (int c = occurrence_count(rg.tree, h)) left.emplace_back(&rg.tree, c);
    if (int c = occurrence_count(rg.tree, k)) right.emplace_back(&rg.tree, c);
  }
  int total = 0;
  for (const auto& [t1, c1] : left) {
    for (const auto& [t2, c2] : right) {
      if (tree_intersection(*t1, *t2) == t) total += c1 * c2;
    }
  }
  return total;
}

void check_radius(const FiniteSubtree& t, int r, std::span<const RoundGraph> round_graphs) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "radius must be >= 0");
  if (t.depth() > r) throw Error(ErrorKind::InvalidArgument, "tree " + t.str() + " leaves B(id, " + std::to_string(r) + ")");
  for (const RoundGraph& rg : round_graphs) {
    if (rg.grade != r + 1) throw Error(ErrorKind::InvalidArgument, "round graphs must have grade r + 1");
  }
}

}  // namespace

CHatCounts c_hat_counts(const CoreGraph& h, const CoreGraph& k, const FiniteSubtree& t, int r,
                        std::span<const RoundGraph> round_graphs) {
  check_radius(t, r, round_graphs);
  return {count_by_isomorphism(h, k, t), count_by_round_graphs(h, k, t, round_graphs)};
}

int c_hat_via_round_graphs(const CoreGraph& h, const CoreGraph& k, const FiniteSubtree& t, int r,
                           std::span<const RoundGraph> round_graphs) {
  const CHatCounts counts = c_hat_counts(h, k, t, r, round_graphs);
  if (counts.by_isomorphism != counts.by_round_graphs) {
    throw Error(ErrorKind::MismatchBug, "contractible components shaped like " + t.str() + ": " +
                                            std::to_string(counts.by_isomorphism) + " by isomorphism, " +
                                            std::to_string(counts.by_round_graphs) + " by round graphs");
  }
  return counts.by_isomorphism;
}

int c_hat_via_round_graphs(const CoreGraph& h, const CoreGraph& k, const FiniteSubtree& t, int r, std::uint64_t cap) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "radius must be >= 0");
  const auto round_graphs = enumerate_round_graphs(r + 1, h.alphabet(), cap);
  return c_hat_via_round_graphs(h, k, t, r, round_graphs);
}

// ---------------------------------------------------------------------------
// Pushforward

RationalCurrent pushforward_I(const RationalCurrent& mu, const RationalCurrent& nu) {
  if (mu.alphabet() != nu.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "currents over different ranks");
  std::vector<RawTerm> raw;
  for (const auto& [k1, s] : mu.terms()) {
    const BasedCoreGraph h = based_at(s.graph, 0);
    for (const auto& [k2, t] : nu.terms()) {
      const BasedCoreGraph k = based_at(t.graph, 0);
      for (const DoubleCosetTerm& term : double_cosets(h, k)) {
        raw.push_back({s.coefficient * t.coefficient, from_generators(mu.alphabet(), term.generators)});
      }
    }
  }
  return normalize(mu.alphabet(), raw);
}

}  // namespace subcur
