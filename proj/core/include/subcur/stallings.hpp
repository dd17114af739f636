#pragma once

#include "subcur/random.hpp"
#include "subcur/words.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace subcur {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

/// A topological edge with its orientation; the label is always a positive
/// generator and traversal against the orientation reads its inverse.
struct Edge {
  Vertex origin;
  Vertex terminus;
  int generator;  // 1..N
};

/// One oriented traversal leaving a vertex.
struct HalfEdge {
  Letter letter;
  Vertex target;
  int edge;
};

/// Labeled, oriented multigraph over the N-rose. Makes no structural promise
/// beyond well-formed endpoints; CoreGraph and BasedCoreGraph add the
/// folded/core invariants.
class LabeledGraph {
 public:
  explicit LabeledGraph(Alphabet alphabet, int vertices = 0);

  Alphabet alphabet() const noexcept { return alphabet_; }
  int num_vertices() const noexcept { return static_cast<int>(incidence_.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  Vertex add_vertex();
  int add_edge(Vertex origin, Vertex terminus, int generator);
  // Adds the traversal `letter` from `from` to `to` as an edge with the right
  // orientation.
  int add_traversal(Vertex from, Letter letter, Vertex to);

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const HalfEdge> incident(Vertex v) const { return incidence_.at(v); }
  // Number of oriented edges with origin v; a loop counts twice.
  int degree(Vertex v) const { return static_cast<int>(incidence_.at(v).size()); }

  // First traversal from v reading `letter`; unique when folded.
  std::optional<Vertex> follow(Vertex v, Letter letter) const;
  std::optional<Vertex> read(Vertex v, const Word& w) const;

  std::optional<Vertex> basepoint() const noexcept { return basepoint_; }
  void set_basepoint(std::optional<Vertex> v);

  bool is_folded() const;
  bool is_connected() const;
  // #V - #E_top
  int euler_characteristic() const { return num_vertices() - num_edges(); }

 private:
  Alphabet alphabet_;
  std::vector<Edge> edges_;
  std::vector<std::vector<HalfEdge>> incidence_;
  std::optional<Vertex> basepoint_;
};

/// Folded graph without a basepoint and with every vertex of degree >= 2.
/// Represents Δ_H for the conjugacy class of H when connected.
class CoreGraph {
 public:
  // Validates the invariants; throws InvalidArgument when they fail.
  explicit CoreGraph(LabeledGraph graph);

  const LabeledGraph& graph() const noexcept { return graph_; }
  Alphabet alphabet() const noexcept { return graph_.alphabet(); }
  int num_vertices() const noexcept { return graph_.num_vertices(); }
  int num_edges() const noexcept { return graph_.num_edges(); }
  bool connected() const noexcept { return connected_; }

 private:
  LabeledGraph graph_;
  bool connected_;
};

/// Folded connected graph with a basepoint; only the basepoint may have
/// degree below 2. The reduced loops at the basepoint read exactly H.
class BasedCoreGraph {
 public:
  explicit BasedCoreGraph(LabeledGraph graph);

  const LabeledGraph& graph() const noexcept { return graph_; }
  Alphabet alphabet() const noexcept { return graph_.alphabet(); }
  Vertex basepoint() const noexcept { return *graph_.basepoint(); }
  int num_vertices() const noexcept { return graph_.num_vertices(); }
  int num_edges() const noexcept { return graph_.num_edges(); }

 private:
  LabeledGraph graph_;
};

struct Folded {
  LabeledGraph graph;
  std::vector<Vertex> vertex_map;  // input vertex -> folded vertex
};

// Union-find folding; the basepoint (if any) is carried to its image.
Folded fold_with_map(const LabeledGraph& g);
LabeledGraph fold(const LabeledGraph& g);

struct Pruned {
  LabeledGraph graph;
  std::vector<Vertex> vertex_map;  // input vertex -> kept vertex or kNoVertex
};

// Repeatedly deletes vertices of degree <= 1, sparing `keep`.
Pruned prune(const LabeledGraph& g, std::optional<Vertex> keep);

// Input must be folded and carry a basepoint. Throws EmptyCore when only a
// bare basepoint remains.
BasedCoreGraph core_based(const LabeledGraph& g);
// Input must be folded. Throws EmptyCore when nothing remains.
CoreGraph core(const LabeledGraph& g);
CoreGraph core(const BasedCoreGraph& g);

struct CoreProjection {
  CoreGraph core;
  std::vector<Vertex> from_based;  // based vertex -> core vertex or kNoVertex
};
CoreProjection core_projection(const BasedCoreGraph& g);

// Stallings graph of <gens>. Identity words are discarded; throws
// TrivialSubgroup if nothing else remains.
BasedCoreGraph from_generators(Alphabet alphabet, std::span<const Word> gens);

BasedCoreGraph based_at(const CoreGraph& g, Vertex v);

int rank(const LabeledGraph& g);  // connected graphs only
int rank(const CoreGraph& g);
int rank(const BasedCoreGraph& g);
int reduced_rank(const CoreGraph& g);
int reduced_rank(const BasedCoreGraph& g);

bool contains(const BasedCoreGraph& g, const Word& w);

// Label of the breadth-first shortest path from `from` to `to` (deterministic
// direction order). Throws NotConnected if `to` is unreachable.
Word path_word(const LabeledGraph& g, Vertex from, Vertex to);

// Free basis of π1(g, base) read off a breadth-first spanning tree.
std::vector<Word> loop_generators(const LabeledGraph& g, Vertex base);
std::vector<Word> generators(const BasedCoreGraph& g);

// Isomorphism-invariant serialization of a connected folded graph: the
// lexicographically least breadth-first encoding over all start vertices,
// with directions ordered a_1 < a_1^-1 < a_2 < ...
std::string canonical_key(const CoreGraph& g);
// The graph renumbered in the order that produced canonical_key.
CoreGraph canonical_form(const CoreGraph& g);

// [K:H] if the immersion of cores is a covering, nullopt for infinite index.
// Throws NotSubgroup if some generator of H is not in K.
std::optional<int> finite_index(const BasedCoreGraph& h, const BasedCoreGraph& k);

struct Commensurator {
  BasedCoreGraph group;
  int index;  // [Comm(H) : H]
};

// Comm(H) found as the smallest covering quotient of Δ_H.
Commensurator commensurator(const BasedCoreGraph& h);

// Uniformly random reduced word of the given length.
Word random_word(Rng& rng, Alphabet alphabet, int length);

// 1..max_gens generators, each of length 1..max_len.
BasedCoreGraph random_subgroup(Rng& rng, Alphabet alphabet, int max_gens, int max_len);
BasedCoreGraph random_subgroup(std::uint64_t seed, Alphabet alphabet, int max_gens, int max_len);

// Connected degree-d cover of g, based at sheet 0 over vertex 0. Throws
// RetryLimit if no connected cover turns up within the attempt budget.
BasedCoreGraph random_finite_index_cover(const CoreGraph& g, int degree, Rng& rng, int max_attempts = 1000);
BasedCoreGraph random_finite_index_cover(const CoreGraph& g, int degree, std::uint64_t seed);

}  // namespace subcur
