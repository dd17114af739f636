#pragma once

#include "subcur/currents.hpp"
#include "subcur/stallings.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace subcur::testing {

inline std::vector<Word> words(int rank, std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(Word::parse(t, Alphabet(rank)));
  return out;
}

inline BasedCoreGraph subgroup(int rank, std::initializer_list<const char*> gens) {
  return from_generators(Alphabet(rank), words(rank, gens));
}

inline RationalCurrent eta(int rank, std::initializer_list<const char*> gens) {
  return RationalCurrent::counting(subgroup(rank, gens));
}

// Quadratic folding by relabeling, then pruning of hairs; no union-find, no
// slot table. Reports (#V, #E) of the based core.
struct NaiveCore {
  int vertices = 0;
  std::vector<std::array<int, 3>> edges;  // origin, terminus, generator
  int base = 0;
};

inline NaiveCore naive_fold(const std::vector<Word>& gens) {
  NaiveCore g;
  g.vertices = 1;
  for (const Word& w : gens) {
    if (w.empty()) continue;
    int at = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int next = i + 1 == w.size() ? 0 : g.vertices++;
      const Letter x = w[i];
      if (x.sign() > 0) {
        g.edges.push_back({at, next, x.index()});
      } else {
        g.edges.push_back({next, at, x.index()});
      }
      at = next;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < g.edges.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < g.edges.size() && !changed; ++j) {
        const auto e = g.edges[i], f = g.edges[j];
        if (e[2] != f[2]) continue;
        int keep = -1, drop = -1;
        if (e[0] == f[0]) {
          keep = e[1], drop = f[1];
        } else if (e[1] == f[1]) {
          keep = e[0], drop = f[0];
        } else {
          continue;
        }
        g.edges.erase(g.edges.begin() + static_cast<long>(j));
        if (keep != drop) {
          if (drop == g.base) std::swap(keep, drop);
          for (auto& h : g.edges) {
            for (int k = 0; k < 2; ++k) {
              if (h[k] == drop) h[k] = keep;
            }
          }
        }
        changed = true;
      }
    }
  }
  // prune
  changed = true;
  while (changed) {
    changed = false;
    std::map<int, int> degree;
    for (const auto& e : g.edges) {
      ++degree[e[0]];
      ++degree[e[1]];
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const auto e = g.edges[i];
      if ((degree[e[0]] == 1 && e[0] != g.base) || (degree[e[1]] == 1 && e[1] != g.base)) {
        g.edges.erase(g.edges.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  std::set<int> alive{g.base};
  for (const auto& e : g.edges) alive.insert({e[0], e[1]});
  g.vertices = static_cast<int>(alive.size());
  return g;
}

// Reads w from the base by scanning the edge list.
inline bool naive_contains(const NaiveCore& g, const Word& w) {
  int at = g.base;
  for (Letter x : w.letters()) {
    int next = -1;
    for (const auto& e : g.edges) {
      if (e[2] != x.index()) continue;
      if (x.sign() > 0 && e[0] == at) next = e[1];
      if (x.sign() < 0 && e[1] == at) next = e[0];
      if (next >= 0) break;
    }
    if (next < 0) return false;
    at = next;
  }
  return at == g.base;
}

// Counts start vertices admitting some label-preserving map of t, locally
// bijective at interior vertices, by exhaustive search over the edge list.
inline int brute_force_occurrences(const FiniteSubtree& t, const CoreGraph& g) {
  const auto ws = t.words();
  const auto& edges = g.graph().edges();
  std::vector<int> degree(g.num_vertices(), 0);
  for (const Edge& e : edges) {
    ++degree[e.origin];
    ++degree[e.terminus];
  }
  std::vector<int> image(ws.size());
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == ws.size()) {
      for (std::size_t j = 0; j < ws.size(); ++j) {
        const int d = t.degree(static_cast<int>(j));
        if (d > 1 && degree[image[j]] != d) return false;
      }
      return true;
    }
    const Word parent = ws[i].parent();
    const std::size_t p = static_cast<std::size_t>(std::find(ws.begin(), ws.end(), parent) - ws.begin());
    const Letter x = ws[i].back();
    for (const Edge& e : edges) {
      if (e.generator != x.index()) continue;
      const int from = x.sign() > 0 ? e.origin : e.terminus;
      const int to = x.sign() > 0 ? e.terminus : e.origin;
      if (from != image[p]) continue;
      image[i] = to;
      if (extend(i + 1)) return true;
    }
    return false;
  };
  int count = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    image[0] = v;
    if (extend(1)) ++count;
  }
  return count;
}

// All reduced words of length <= r.
inline std::vector<Word> ball(Alphabet alphabet, int r) {
  std::vector<Word> out{Word(alphabet)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == r) continue;
    for (int d = 0; d < alphabet.directions(); ++d) {
      const Letter x = Letter::from_direction(d);
      if (!out[i].empty() && out[i].back() == x.inverse()) continue;
      out.push_back(out[i].extended(x));
    }
  }
  return out;
}

// Every prefix-closed subset of ball(r) containing id, by subset enumeration.
inline std::vector<FiniteSubtree> all_subtrees(Alphabet alphabet, int r) {
  const auto b = ball(alphabet, r);
  const int n = static_cast<int>(b.size()) - 1;
  std::vector<FiniteSubtree> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Word> chosen{b[0]};
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) chosen.push_back(b[i + 1]);
    }
    bool closed = true;
    for (std::size_t i = 1; i < chosen.size() && closed; ++i) {
      closed = std::find(chosen.begin(), chosen.end(), chosen[i].parent()) != chosen.end();
    }
    if (closed) out.push_back(FiniteSubtree::from_words(alphabet, chosen));
  }
  return out;
}

}  // namespace subcur::testing
