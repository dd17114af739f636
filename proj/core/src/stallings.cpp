#include "subcur/stallings.hpp"

#include "subcur/error.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <numeric>

namespace subcur {

// ---------------------------------------------------------------------------
// LabeledGraph

LabeledGraph::LabeledGraph(Alphabet alphabet, int vertices) : alphabet_(alphabet), incidence_(vertices) {
  if (vertices < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
}

Vertex LabeledGraph::add_vertex() {
  incidence_.emplace_back();
  return static_cast<Vertex>(incidence_.size() - 1);
}

int LabeledGraph::add_edge(Vertex origin, Vertex terminus, int generator) {
  if (origin < 0 || origin >= num_vertices() || terminus < 0 || terminus >= num_vertices()) {
    throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
  }
  if (generator < 1 || generator > alphabet_.rank()) {
    throw Error(ErrorKind::InvalidArgument, "edge label a" + std::to_string(generator) + " outside rank");
  }
  const int id = num_edges();
  edges_.push_back({origin, terminus, generator});
  incidence_[origin].push_back({Letter(generator, 1), terminus, id});
  incidence_[terminus].push_back({Letter(generator, -1), origin, id});
  return id;
}

int LabeledGraph::add_traversal(Vertex from, Letter letter, Vertex to) {
  return letter.sign() > 0 ? add_edge(from, to, letter.index()) : add_edge(to, from, letter.index());
}

std::optional<Vertex> LabeledGraph::follow(Vertex v, Letter letter) const {
  for (const HalfEdge& h : incidence_.at(v)) {
    if (h.letter == letter) return h.target;
  }
  return std::nullopt;
}

std::optional<Vertex> LabeledGraph::read(Vertex v, const Word& w) const {
  std::optional<Vertex> at = v;
  for (Letter x : w.letters()) {
    at = follow(*at, x);
    if (!at) return std::nullopt;
  }
  return at;
}

void LabeledGraph::set_basepoint(std::optional<Vertex> v) {
  if (v && (*v < 0 || *v >= num_vertices())) throw Error(ErrorKind::InvalidArgument, "basepoint out of range");
  basepoint_ = v;
}

bool LabeledGraph::is_folded() const {
  std::vector<char> seen(alphabet_.directions());
  for (const auto& halves : incidence_) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const HalfEdge& h : halves) {
      if (seen[h.letter.direction()]++) return false;
    }
  }
  return true;
}

bool LabeledGraph::is_connected() const {
  if (num_vertices() == 0) return true;
  std::vector<char> seen(num_vertices(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const HalfEdge& h : incidence_[v]) {
      if (!seen[h.target]) {
        seen[h.target] = 1;
        ++count;
        stack.push_back(h.target);
      }
    }
  }
  return count == num_vertices();
}

// ---------------------------------------------------------------------------
// CoreGraph / BasedCoreGraph

CoreGraph::CoreGraph(LabeledGraph graph) : graph_(std::move(graph)) {
  if (graph_.num_vertices() == 0) throw Error(ErrorKind::EmptyCore, "core graph has no vertices");
  if (!graph_.is_folded()) throw Error(ErrorKind::InvalidArgument, "core graph must be folded");
  for (Vertex v = 0; v < graph_.num_vertices(); ++v) {
    if (graph_.degree(v) < 2) throw Error(ErrorKind::InvalidArgument, "core graph vertex of degree < 2");
  }
  graph_.set_basepoint(std::nullopt);
  connected_ = graph_.is_connected();
}

BasedCoreGraph::BasedCoreGraph(LabeledGraph graph) : graph_(std::move(graph)) {
  if (!graph_.basepoint()) throw Error(ErrorKind::InvalidArgument, "based core graph needs a basepoint");
  if (graph_.num_edges() == 0) throw Error(ErrorKind::TrivialSubgroup, "based graph without edges");
  if (!graph_.is_folded()) throw Error(ErrorKind::InvalidArgument, "based core graph must be folded");
  if (!graph_.is_connected()) throw Error(ErrorKind::NotConnected, "based core graph must be connected");
  for (Vertex v = 0; v < graph_.num_vertices(); ++v) {
    if (v != *graph_.basepoint() && graph_.degree(v) < 2) {
      throw Error(ErrorKind::InvalidArgument, "non-base vertex of degree < 2");
    }
  }
}

// ---------------------------------------------------------------------------
// Folding

namespace {

class Folder {
 public:
  explicit Folder(const LabeledGraph& g)
      : g_(g),
        directions_(g.alphabet().directions()),
        parent_(g.num_vertices()),
        size_(g.num_vertices(), 1),
        slot_(static_cast<std::size_t>(g.num_vertices()) * directions_, -1),
        alive_(g.num_edges(), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  Folded run() {
    const auto& edges = g_.edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      const Letter x(edges[e].generator, 1);
      insert(find(edges[e].origin), x.direction(), e);
      if (alive_[e]) insert(find(edges[e].terminus), x.inverse().direction(), e);
      drain();
    }
    return build();
  }

 private:
  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // The endpoint reached by traversing edge e in the given direction.
  Vertex far_end(int e, int direction) {
    const Edge& edge = g_.edges()[e];
    return find(direction % 2 == 0 ? edge.terminus : edge.origin);
  }

  int& slot(Vertex rep, int direction) { return slot_[static_cast<std::size_t>(rep) * directions_ + direction]; }

  // Registers edge e as the traversal `direction` at rep u. A clash with a
  // live edge identifies the two edges: e dies and the far ends get merged.
  void insert(Vertex u, int direction, int e) {
    int& s = slot(u, direction);
    if (s < 0 || !alive_[s]) {
      s = e;
      return;
    }
    if (s == e) return;
    alive_[e] = 0;
    pending_.emplace_back(far_end(s, direction), far_end(e, direction));
  }

  void drain() {
    while (!pending_.empty()) {
      auto [x, y] = pending_.back();
      pending_.pop_back();
      merge(x, y);
    }
  }

  void merge(Vertex x, Vertex y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    for (int d = 0; d < directions_; ++d) {
      const int e = slot(y, d);
      slot(y, d) = -1;
      if (e >= 0 && alive_[e]) insert(x, d, e);
    }
  }

  Folded build() {
    const int n = g_.num_vertices();
    std::vector<Vertex> rep_index(n, kNoVertex);
    std::vector<Vertex> vertex_map(n);
    Vertex next = 0;
    for (Vertex v = 0; v < n; ++v) {
      const Vertex r = find(v);
      if (rep_index[r] == kNoVertex) rep_index[r] = next++;
      vertex_map[v] = rep_index[r];
    }
    LabeledGraph out(g_.alphabet(), next);
    for (int e = 0; e < g_.num_edges(); ++e) {
      if (!alive_[e]) continue;
      const Edge& edge = g_.edges()[e];
      out.add_edge(vertex_map[edge.origin], vertex_map[edge.terminus], edge.generator);
    }
    if (g_.basepoint()) out.set_basepoint(vertex_map[*g_.basepoint()]);
    return {std::move(out), std::move(vertex_map)};
  }

  const LabeledGraph& g_;
  int directions_;
  std::vector<Vertex> parent_;
  std::vector<int> size_;
  std::vector<int> slot_;
  std::vector<char> alive_;
  std::vector<std::pair<Vertex, Vertex>> pending_;
};

}  // namespace

Folded fold_with_map(const LabeledGraph& g) { return Folder(g).run(); }

LabeledGraph fold(const LabeledGraph& g) { return fold_with_map(g).graph; }

// ---------------------------------------------------------------------------
// Coring

Pruned prune(const LabeledGraph& g, std::optional<Vertex> keep) {
  const int n = g.num_vertices();
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<char> edge_removed(g.num_edges(), 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1 && v != keep) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    for (const HalfEdge& h : g.incident(v)) {
      if (edge_removed[h.edge]) continue;
      edge_removed[h.edge] = 1;
      // A loop cannot sit on a vertex of degree <= 1, so h.target != v.
      const Vertex u = h.target;
      if (--degree[u] <= 1 && u != keep && !removed[u]) queue.push_back(u);
    }
  }
  std::vector<Vertex> vertex_map(n, kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) vertex_map[v] = next++;
  }
  LabeledGraph out(g.alphabet(), next);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (edge_removed[e]) continue;
    const Edge& edge = g.edges()[e];
    out.add_edge(vertex_map[edge.origin], vertex_map[edge.terminus], edge.generator);
  }
  if (keep) out.set_basepoint(vertex_map[*keep]);
  return {std::move(out), std::move(vertex_map)};
}

BasedCoreGraph core_based(const LabeledGraph& g) {
  if (!g.basepoint()) throw Error(ErrorKind::InvalidArgument, "core_based needs a basepoint");
  if (!g.is_folded()) throw Error(ErrorKind::InvalidArgument, "core_based needs a folded graph");
  Pruned pruned = prune(g, g.basepoint());
  if (pruned.graph.num_edges() == 0) throw Error(ErrorKind::EmptyCore, "based core is a bare basepoint");
  // Components not containing the basepoint carry no loops at it.
  if (!pruned.graph.is_connected()) {
    const LabeledGraph& pg = pruned.graph;
    std::vector<char> seen(pg.num_vertices(), 0);
    std::vector<Vertex> stack{*pg.basepoint()};
    seen[stack.back()] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const HalfEdge& h : pg.incident(v)) {
        if (!seen[h.target]) {
          seen[h.target] = 1;
          stack.push_back(h.target);
        }
      }
    }
    std::vector<Vertex> remap(pg.num_vertices(), kNoVertex);
    Vertex next = 0;
    for (Vertex v = 0; v < pg.num_vertices(); ++v) {
      if (seen[v]) remap[v] = next++;
    }
    LabeledGraph out(pg.alphabet(), next);
    for (const Edge& e : pg.edges()) {
      if (seen[e.origin]) out.add_edge(remap[e.origin], remap[e.terminus], e.generator);
    }
    out.set_basepoint(remap[*pg.basepoint()]);
    if (out.num_edges() == 0) throw Error(ErrorKind::EmptyCore, "based core is a bare basepoint");
    return BasedCoreGraph(std::move(out));
  }
  return BasedCoreGraph(std::move(pruned.graph));
}

CoreGraph core(const LabeledGraph& g) {
  if (!g.is_folded()) throw Error(ErrorKind::InvalidArgument, "core needs a folded graph");
  Pruned pruned = prune(g, std::nullopt);
  if (pruned.graph.num_vertices() == 0) throw Error(ErrorKind::EmptyCore, "graph has empty core");
  return CoreGraph(std::move(pruned.graph));
}

CoreGraph core(const BasedCoreGraph& g) { return core_projection(g).core; }

CoreProjection core_projection(const BasedCoreGraph& g) {
  Pruned pruned = prune(g.graph(), std::nullopt);
  if (pruned.graph.num_vertices() == 0) throw Error(ErrorKind::EmptyCore, "graph has empty core");
  pruned.graph.set_basepoint(std::nullopt);
  return {CoreGraph(std::move(pruned.graph)), std::move(pruned.vertex_map)};
}

// ---------------------------------------------------------------------------
// Construction

BasedCoreGraph from_generators(Alphabet alphabet, std::span<const Word> gens) {
  LabeledGraph wedge(alphabet, 1);
  wedge.set_basepoint(0);
  bool any = false;
  for (const Word& w : gens) {
    if (w.alphabet() != alphabet) throw Error(ErrorKind::AlphabetMismatch, "generator over a different rank");
    if (w.empty()) continue;
    any = true;
    Vertex at = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Vertex to = i + 1 == w.size() ? 0 : wedge.add_vertex();
      wedge.add_traversal(at, w[i], to);
      at = to;
    }
  }
  if (!any) throw Error(ErrorKind::TrivialSubgroup, "all generators reduce to the identity");
  try {
    return core_based(fold(wedge));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EmptyCore) throw Error(ErrorKind::TrivialSubgroup, "generators span the trivial subgroup");
    throw;
  }
}

BasedCoreGraph based_at(const CoreGraph& g, Vertex v) {
  if (!g.connected()) throw Error(ErrorKind::NotConnected, "based_at needs a connected core graph");
  LabeledGraph graph = g.graph();
  graph.set_basepoint(v);
  return BasedCoreGraph(std::move(graph));
}

// ---------------------------------------------------------------------------
// Rank, membership, paths

int rank(const LabeledGraph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::NotConnected, "rank of a disconnected graph");
  return g.num_edges() - g.num_vertices() + 1;
}
int rank(const CoreGraph& g) { return rank(g.graph()); }
int rank(const BasedCoreGraph& g) { return rank(g.graph()); }
int reduced_rank(const CoreGraph& g) { return std::max(rank(g) - 1, 0); }
int reduced_rank(const BasedCoreGraph& g) { return std::max(rank(g) - 1, 0); }

bool contains(const BasedCoreGraph& g, const Word& w) {
  const auto end = g.graph().read(g.basepoint(), w);
  return end && *end == g.basepoint();
}

namespace {

struct SpanningTree {
  std::vector<int> parent_edge;  // kNoVertex for the root and unreached vertices
  std::vector<Vertex> parent;
  std::vector<Letter> via;  // letter read from parent to the vertex
  std::vector<Vertex> order;
};

// Breadth-first tree; neighbours visited in direction order so that paths are
// reproducible regardless of edge insertion order.
SpanningTree bfs_tree(const LabeledGraph& g, Vertex root) {
  const int n = g.num_vertices();
  SpanningTree t{std::vector<int>(n, -1), std::vector<Vertex>(n, kNoVertex),
                 std::vector<Letter>(n, Letter(1, 1)), {}};
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{root};
  seen[root] = 1;
  std::vector<HalfEdge> halves;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    t.order.push_back(v);
    halves.assign(g.incident(v).begin(), g.incident(v).end());
    std::stable_sort(halves.begin(), halves.end(),
                     [](const HalfEdge& a, const HalfEdge& b) { return a.letter < b.letter; });
    for (const HalfEdge& h : halves) {
      if (seen[h.target]) continue;
      seen[h.target] = 1;
      t.parent[h.target] = v;
      t.parent_edge[h.target] = h.edge;
      t.via[h.target] = h.letter;
      queue.push_back(h.target);
    }
  }
  return t;
}

Word tree_path(const SpanningTree& t, Alphabet alphabet, Vertex root, Vertex to) {
  std::vector<Letter> reversed;
  for (Vertex v = to; v != root; v = t.parent[v]) {
    if (t.parent[v] == kNoVertex) throw Error(ErrorKind::NotConnected, "vertex unreachable from the root");
    reversed.push_back(t.via[v]);
  }
  std::reverse(reversed.begin(), reversed.end());
  return Word(alphabet, std::move(reversed));
}

}  // namespace

Word path_word(const LabeledGraph& g, Vertex from, Vertex to) {
  return tree_path(bfs_tree(g, from), g.alphabet(), from, to);
}

std::vector<Word> loop_generators(const LabeledGraph& g, Vertex base) {
  const SpanningTree t = bfs_tree(g, base);
  std::vector<char> in_component(g.num_vertices(), 0);
  for (Vertex v : t.order) in_component[v] = 1;
  std::vector<Word> paths(g.num_vertices(), Word(g.alphabet()));
  for (Vertex v : t.order) {
    if (v != base) paths[v] = paths[t.parent[v]].extended(t.via[v]);
  }
  std::vector<Word> gens;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edges()[e];
    if (!in_component[edge.origin]) continue;
    if (t.parent_edge[edge.terminus] == e || t.parent_edge[edge.origin] == e) continue;
    gens.push_back(concat_reduce(paths[edge.origin].extended(Letter(edge.generator, 1)), invert(paths[edge.terminus])));
  }
  return gens;
}

std::vector<Word> generators(const BasedCoreGraph& g) { return loop_generators(g.graph(), g.basepoint()); }

// ---------------------------------------------------------------------------
// Canonical form

namespace {

// Breadth-first numbering from `start`, with the encoding written into `code`.
// Returns the vertex order.
std::vector<Vertex> encode_from(const LabeledGraph& g, Vertex start, std::vector<std::uint32_t>& code) {
  const int n = g.num_vertices();
  const int directions = g.alphabet().directions();
  std::vector<Vertex> number(n, kNoVertex);
  std::vector<Vertex> order;
  order.reserve(n);
  number[start] = 0;
  order.push_back(start);
  code.clear();
  code.push_back(static_cast<std::uint32_t>(g.alphabet().rank()));
  code.push_back(static_cast<std::uint32_t>(n));
  std::vector<Vertex> target(directions);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    std::fill(target.begin(), target.end(), kNoVertex);
    for (const HalfEdge& h : g.incident(v)) target[h.letter.direction()] = h.target;
    for (int d = 0; d < directions; ++d) {
      const Vertex u = target[d];
      if (u == kNoVertex) {
        code.push_back(0);
        continue;
      }
      if (number[u] == kNoVertex) {
        number[u] = static_cast<Vertex>(order.size());
        order.push_back(u);
      }
      code.push_back(static_cast<std::uint32_t>(number[u]) + 1);
    }
  }
  return order;
}

struct CanonicalResult {
  std::vector<std::uint32_t> code;
  std::vector<Vertex> order;
};

CanonicalResult canonical(const CoreGraph& g) {
  if (!g.connected()) throw Error(ErrorKind::NotConnected, "canonical form needs a connected graph");
  CanonicalResult best;
  std::vector<std::uint32_t> code;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    auto order = encode_from(g.graph(), s, code);
    if (s == 0 || code < best.code) {
      best.code = code;
      best.order = std::move(order);
    }
  }
  return best;
}

}  // namespace

std::string canonical_key(const CoreGraph& g) {
  const auto result = canonical(g);
  std::string key(result.code.size() * sizeof(std::uint32_t), '\0');
  for (std::size_t i = 0; i < result.code.size(); ++i) {
    const std::uint32_t x = result.code[i];
    for (int b = 0; b < 4; ++b) key[4 * i + b] = static_cast<char>((x >> (24 - 8 * b)) & 0xff);
  }
  return key;
}

CoreGraph canonical_form(const CoreGraph& g) {
  const auto result = canonical(g);
  const int n = g.num_vertices();
  std::vector<Vertex> number(n);
  for (int i = 0; i < n; ++i) number[result.order[i]] = i;
  LabeledGraph out(g.alphabet(), n);
  for (int i = 0; i < n; ++i) {
    const Vertex v = result.order[i];
    std::vector<HalfEdge> halves(g.graph().incident(v).begin(), g.graph().incident(v).end());
    std::sort(halves.begin(), halves.end(), [](const HalfEdge& a, const HalfEdge& b) { return a.letter < b.letter; });
    for (const HalfEdge& h : halves) {
      if (h.letter.sign() > 0) out.add_edge(i, number[h.target], h.letter.index());
    }
  }
  return CoreGraph(std::move(out));
}

// ---------------------------------------------------------------------------
// Index and commensurator

std::optional<int> finite_index(const BasedCoreGraph& h, const BasedCoreGraph& k) {
  if (h.alphabet() != k.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "finite_index over different ranks");
  for (const Word& g : generators(h)) {
    if (!contains(k, g)) throw Error(ErrorKind::NotSubgroup, "generator " + g.str() + " of H is not in K");
  }
  // Based immersion Δ_H -> Δ_K.
  const LabeledGraph& hg = h.graph();
  const LabeledGraph& kg = k.graph();
  std::vector<Vertex> image(hg.num_vertices(), kNoVertex);
  std::vector<Vertex> stack{h.basepoint()};
  image[h.basepoint()] = k.basepoint();
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const HalfEdge& e : hg.incident(v)) {
      const auto w = kg.follow(image[v], e.letter);
      if (!w) throw Error(ErrorKind::MismatchBug, "based immersion H -> K does not exist");
      if (image[e.target] == kNoVertex) {
        image[e.target] = *w;
        stack.push_back(e.target);
      }
    }
  }
  const CoreProjection hc = core_projection(h);
  const CoreProjection kc = core_projection(k);
  for (Vertex v = 0; v < hg.num_vertices(); ++v) {
    const Vertex u = hc.from_based[v];
    if (u == kNoVertex) continue;
    const Vertex w = kc.from_based[image[v]];
    if (w == kNoVertex) return std::nullopt;
    if (hc.core.graph().degree(u) != kc.core.graph().degree(w)) return std::nullopt;
  }
  if (hc.core.num_vertices() % kc.core.num_vertices() != 0) {
    throw Error(ErrorKind::MismatchBug, "covering of cores with non-integral degree");
  }
  return hc.core.num_vertices() / kc.core.num_vertices();
}

namespace {

struct Quotient {
  CoreGraph graph;
  std::vector<Vertex> vertex_map;
};

// Identifies vertex 0 with `partner`, folds, and keeps the result only if the
// quotient map is locally bijective.
std::optional<Quotient> covering_quotient(const CoreGraph& g, Vertex partner) {
  auto glue = [partner](Vertex v) { return v == partner ? 0 : (v > partner ? v - 1 : v); };
  LabeledGraph glued(g.alphabet(), g.num_vertices() - 1);
  for (const Edge& e : g.graph().edges()) glued.add_edge(glue(e.origin), glue(e.terminus), e.generator);
  Folded folded = fold_with_map(glued);
  std::vector<Vertex> map(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    map[v] = folded.vertex_map[glue(v)];
    if (folded.graph.degree(map[v]) != g.graph().degree(v)) return std::nullopt;
  }
  return Quotient{CoreGraph(std::move(folded.graph)), std::move(map)};
}

}  // namespace

Commensurator commensurator(const BasedCoreGraph& h) {
  const CoreProjection projection = core_projection(h);
  // The hair from the basepoint to the core conjugates π1(core, entry) to H.
  Vertex entry = kNoVertex;
  {
    const SpanningTree t = bfs_tree(h.graph(), h.basepoint());
    for (Vertex v : t.order) {
      if (projection.from_based[v] != kNoVertex) {
        entry = v;
        break;
      }
    }
  }
  const Word hair = path_word(h.graph(), h.basepoint(), entry);

  CoreGraph current = projection.core;
  Vertex marked = projection.from_based[entry];
  bool progress = true;
  while (progress && current.num_vertices() > 1) {
    progress = false;
    for (Vertex partner = 1; partner < current.num_vertices(); ++partner) {
      auto quotient = covering_quotient(current, partner);
      if (!quotient) continue;
      marked = quotient->vertex_map[marked];
      current = std::move(quotient->graph);
      progress = true;
      break;
    }
  }
  const int original = projection.core.num_vertices();
  if (original % current.num_vertices() != 0) throw Error(ErrorKind::MismatchBug, "non-integral commensurator index");

  std::vector<Word> gens = loop_generators(current.graph(), marked);
  const Word hair_inverse = invert(hair);
  for (Word& g : gens) g = product({hair, g, hair_inverse});
  return {from_generators(h.alphabet(), gens), original / current.num_vertices()};
}

// ---------------------------------------------------------------------------
// Random corpora

Word random_word(Rng& rng, Alphabet alphabet, int length) {
  std::vector<Letter> letters;
  letters.reserve(length);
  const int directions = alphabet.directions();
  for (int i = 0; i < length; ++i) {
    if (letters.empty()) {
      letters.push_back(Letter::from_direction(static_cast<int>(rng.below(directions))));
      continue;
    }
    // Skip the inverse of the previous letter.
    const int forbidden = letters.back().inverse().direction();
    int d = static_cast<int>(rng.below(directions - 1));
    if (d >= forbidden) ++d;
    letters.push_back(Letter::from_direction(d));
  }
  return Word(alphabet, std::move(letters));
}

BasedCoreGraph random_subgroup(Rng& rng, Alphabet alphabet, int max_gens, int max_len) {
  if (max_gens < 1 || max_len < 1) throw Error(ErrorKind::InvalidArgument, "random_subgroup bounds must be positive");
  const int count = rng.uniform(1, max_gens);
  std::vector<Word> gens;
  for (int i = 0; i < count; ++i) gens.push_back(random_word(rng, alphabet, rng.uniform(1, max_len)));
  return from_generators(alphabet, gens);
}

BasedCoreGraph random_subgroup(std::uint64_t seed, Alphabet alphabet, int max_gens, int max_len) {
  Rng rng(seed);
  return random_subgroup(rng, alphabet, max_gens, max_len);
}

BasedCoreGraph random_finite_index_cover(const CoreGraph& g, int degree, Rng& rng, int max_attempts) {
  if (degree < 1) throw Error(ErrorKind::InvalidArgument, "cover degree must be positive");
  if (!g.connected()) throw Error(ErrorKind::NotConnected, "covers are built over connected graphs");
  const int n = g.num_vertices();
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    LabeledGraph cover(g.alphabet(), n * degree);
    std::vector<int> sheets(degree);
    for (const Edge& e : g.graph().edges()) {
      std::iota(sheets.begin(), sheets.end(), 0);
      for (int i = degree - 1; i > 0; --i) std::swap(sheets[i], sheets[rng.below(i + 1)]);
      for (int s = 0; s < degree; ++s) {
        cover.add_edge(e.origin * degree + s, e.terminus * degree + sheets[s], e.generator);
      }
    }
    if (!cover.is_connected()) continue;
    cover.set_basepoint(0);
    return BasedCoreGraph(std::move(cover));
  }
  throw Error(ErrorKind::RetryLimit, "no connected degree-" + std::to_string(degree) + " cover found");
}

BasedCoreGraph random_finite_index_cover(const CoreGraph& g, int degree, std::uint64_t seed) {
  Rng rng(seed);
  return random_finite_index_cover(g, degree, rng);
}

}  // namespace subcur
