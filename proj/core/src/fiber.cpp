#include "subcur/fiber.hpp"

#include "subcur/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace subcur {

FiberProduct fiber_product(const LabeledGraph& left, const LabeledGraph& right) {
  if (left.alphabet() != right.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "fiber product over different ranks");
  if (!left.is_folded() || !right.is_folded()) throw Error(ErrorKind::InvalidArgument, "fiber product needs folded factors");
  const int rank = left.alphabet().rank();
  FiberProduct fp{LabeledGraph(left.alphabet(), left.num_vertices() * right.num_vertices()),
                  left.num_vertices(), right.num_vertices(), {}, {}, 0};

  // Bucket edges by label so only matching pairs are visited.
  std::vector<std::vector<int>> left_by_label(rank + 1), right_by_label(rank + 1);
  for (int e = 0; e < left.num_edges(); ++e) left_by_label[left.edges()[e].generator].push_back(e);
  for (int e = 0; e < right.num_edges(); ++e) right_by_label[right.edges()[e].generator].push_back(e);

  std::vector<Vertex> parent(fp.product.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  for (int a = 1; a <= rank; ++a) {
    for (int e1 : left_by_label[a]) {
      const Edge& x = left.edges()[e1];
      for (int e2 : right_by_label[a]) {
        const Edge& y = right.edges()[e2];
        const Vertex o = fp.vertex(x.origin, y.origin);
        const Vertex t = fp.vertex(x.terminus, y.terminus);
        fp.product.add_edge(o, t, a);
        fp.edge_projection.emplace_back(e1, e2);
        const Vertex ro = find(o), rt = find(t);
        if (ro != rt) parent[std::max(ro, rt)] = std::min(ro, rt);
      }
    }
  }

  fp.component.assign(fp.product.num_vertices(), -1);
  std::vector<int> index_of_root(fp.product.num_vertices(), -1);
  for (Vertex v = 0; v < fp.product.num_vertices(); ++v) {
    const Vertex r = find(v);
    if (index_of_root[r] < 0) index_of_root[r] = fp.num_components++;
    fp.component[v] = index_of_root[r];
  }
  return fp;
}

FiberProduct fiber_product(const CoreGraph& left, const CoreGraph& right) {
  return fiber_product(left.graph(), right.graph());
}

std::vector<ComponentInfo> classify_components(const FiberProduct& fp) {
  std::vector<ComponentInfo> info(fp.num_components);
  for (Vertex v = 0; v < fp.product.num_vertices(); ++v) {
    ComponentInfo& c = info[fp.component[v]];
    if (c.vertices++ == 0) c.base = v;
  }
  for (const Edge& e : fp.product.edges()) ++info[fp.component[e.origin]].edges;
  for (ComponentInfo& c : info) {
    c.euler = c.vertices - c.edges;
    c.contractible = c.euler == 1;
  }
  return info;
}

DoubleCosetTerm component_subgroup(const FiberProduct& fp, int component, const BasedCoreGraph& h,
                                   const BasedCoreGraph& k) {
  if (fp.left_vertices != h.num_vertices() || fp.right_vertices != k.num_vertices()) {
    throw Error(ErrorKind::InvalidArgument, "fiber product was not built from these based graphs");
  }
  if (component < 0 || component >= fp.num_components) throw Error(ErrorKind::InvalidArgument, "no such component");
  Vertex base = kNoVertex;
  for (Vertex v = 0; v < fp.product.num_vertices(); ++v) {
    if (fp.component[v] == component) {
      base = v;
      break;
    }
  }
  const auto [u, v] = fp.project(base);
  const Word alpha = path_word(h.graph(), h.basepoint(), u);
  const Word beta = path_word(k.graph(), k.basepoint(), v);
  DoubleCosetTerm term{component, concat_reduce(alpha, invert(beta)), {}};

  const Word alpha_inverse = invert(alpha);
  const Word g_inverse = invert(term.representative);
  for (const Word& loop : loop_generators(fp.product, base)) {
    Word gen = product({alpha, loop, alpha_inverse});
    if (!contains(h, gen)) throw Error(ErrorKind::MismatchBug, "intersection generator " + gen.str() + " not in H");
    if (!contains(k, product({g_inverse, gen, term.representative}))) {
      throw Error(ErrorKind::MismatchBug, "intersection generator " + gen.str() + " not in gKg^-1");
    }
    term.generators.push_back(std::move(gen));
  }
  return term;
}

std::vector<DoubleCosetTerm> double_cosets(const BasedCoreGraph& h, const BasedCoreGraph& k) {
  const FiberProduct fp = fiber_product(h.graph(), k.graph());
  const auto info = classify_components(fp);
  std::vector<DoubleCosetTerm> terms;
  for (int c = 0; c < fp.num_components; ++c) {
    if (info[c].contractible) continue;
    terms.push_back(component_subgroup(fp, c, h, k));
  }
  return terms;
}

Rational intersection_number_euler(const CoreGraph& h, const CoreGraph& k) {
  const FiberProduct fp = fiber_product(h, k);
  int contractible = 0;
  for (const ComponentInfo& c : classify_components(fp)) contractible += c.contractible ? 1 : 0;
  return Rational(fp.product.num_edges() - fp.product.num_vertices() + contractible);
}

Rational intersection_number_cosets(const BasedCoreGraph& h, const BasedCoreGraph& k) {
  Rational total = 0;
  for (const DoubleCosetTerm& term : double_cosets(h, k)) {
    total += reduced_rank(from_generators(h.alphabet(), term.generators));
  }
  return total;
}

}  // namespace subcur
