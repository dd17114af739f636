#pragma once

#include "subcur/rational.hpp"
#include "subcur/stallings.hpp"

#include <utility>
#include <vector>

namespace subcur {

/// Δ₁ ×_{R_N} Δ₂: vertices are all pairs, edges all same-label pairs. May be
/// disconnected and may have vertices of degree 0 or 1.
struct FiberProduct {
  LabeledGraph product;
  int left_vertices = 0;
  int right_vertices = 0;
  std::vector<std::pair<int, int>> edge_projection;  // product edge -> (left edge, right edge)
  std::vector<int> component;                        // product vertex -> component index
  int num_components = 0;

  Vertex vertex(Vertex left, Vertex right) const { return left * right_vertices + right; }
  std::pair<Vertex, Vertex> project(Vertex v) const { return {v / right_vertices, v % right_vertices}; }
};

// Both inputs must be folded; any basepoints are ignored.
FiberProduct fiber_product(const LabeledGraph& left, const LabeledGraph& right);
FiberProduct fiber_product(const CoreGraph& left, const CoreGraph& right);

struct ComponentInfo {
  int vertices = 0;
  int edges = 0;
  int euler = 0;  // vertices - edges
  bool contractible = false;
  Vertex base = kNoVertex;  // smallest product vertex in the component
};

std::vector<ComponentInfo> classify_components(const FiberProduct& fp);

/// One double coset HgK together with a free basis of H ∩ gKg⁻¹.
struct DoubleCosetTerm {
  int component = -1;
  Word representative;
  std::vector<Word> generators;  // empty for a tree component
};

// `fp` must be fiber_product(h.graph(), k.graph()). Every returned generator
// is checked for membership in H and in gKg⁻¹; a failure raises MismatchBug.
DoubleCosetTerm component_subgroup(const FiberProduct& fp, int component, const BasedCoreGraph& h,
                                   const BasedCoreGraph& k);

// All double cosets with nontrivial intersection, in component order.
std::vector<DoubleCosetTerm> double_cosets(const BasedCoreGraph& h, const BasedCoreGraph& k);

// #E - #V + (number of contractible components) on the product of cores.
Rational intersection_number_euler(const CoreGraph& h, const CoreGraph& k);

// Σ over double cosets of r̄k(H ∩ gKg⁻¹), each rank read from the Stallings
// graph of the intersection's own generators.
Rational intersection_number_cosets(const BasedCoreGraph& h, const BasedCoreGraph& k);

}  // namespace subcur
