#pragma once

#include "subcur/fiber.hpp"
#include "subcur/rational.hpp"
#include "subcur/stallings.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace subcur {

/// A finite subtree of the Cayley tree X containing the identity, stored as
/// its prefix-closed set of vertex words. The singleton {id} is allowed.
class FiniteSubtree {
 public:
  static FiniteSubtree identity(Alphabet alphabet);
  // The single edge {id, x}.
  static FiniteSubtree edge(Letter x, Alphabet alphabet);
  // Throws InvalidArgument unless the words are prefix-closed and include id.
  static FiniteSubtree from_words(Alphabet alphabet, std::vector<Word> words);
  // "1,a,A" (braces and whitespace optional).
  static FiniteSubtree parse(std::string_view text, Alphabet alphabet);

  Alphabet alphabet() const noexcept { return alphabet_; }
  // Shortlex order, so the identity comes first and parents precede children.
  std::span<const Word> words() const noexcept { return words_; }
  int num_vertices() const noexcept { return static_cast<int>(words_.size()); }
  int num_edges() const noexcept { return num_vertices() - 1; }
  bool degenerate() const noexcept { return words_.size() == 1; }
  int depth() const noexcept { return static_cast<int>(words_.back().size()); }

  bool contains(const Word& w) const;
  // Index of the parent of words()[i]; -1 for the identity.
  int parent_index(int i) const { return parent_[i]; }
  int degree(int i) const { return degree_[i]; }

  std::string str() const;

  friend bool operator==(const FiniteSubtree& a, const FiniteSubtree& b) { return a.words_ == b.words_; }
  friend std::strong_ordering operator<=>(const FiniteSubtree& a, const FiniteSubtree& b);

 private:
  FiniteSubtree(Alphabet alphabet, std::vector<Word> sorted_words);

  Alphabet alphabet_;
  std::vector<Word> words_;
  std::vector<int> parent_;
  std::vector<int> degree_;
};

FiniteSubtree tree_intersection(const FiniteSubtree& a, const FiniteSubtree& b);

// Every leaf at distance exactly `grade` from id, and id of degree >= 2.
bool is_round(const FiniteSubtree& t, int grade);

struct RoundGraph {
  FiniteSubtree tree;
  int grade;
};

// T_r(v): all reduced label paths of length <= r leaving v, as words.
RoundGraph neighborhood_tree(const CoreGraph& g, Vertex v, int r);

inline constexpr std::uint64_t kDefaultRoundGraphCap = 100'000;

// |R_r| for this alphabet, exact.
Integer count_round_graphs(int r, Alphabet alphabet);

// All of R_r, each once, sorted. Throws SizeLimit above `cap`.
std::vector<RoundGraph> enumerate_round_graphs(int r, Alphabet alphabet, std::uint64_t cap = kDefaultRoundGraphCap);

// Number of vertices v of g admitting a based occurrence (t, id) -> (g, v).
// t must be nondegenerate.
int occurrence_count(const FiniteSubtree& t, const CoreGraph& g);

/// c·η_H before normalization.
struct RawTerm {
  Rational coefficient;
  BasedCoreGraph group;
};

/// Finite nonnegative combination Σ c_G η_G of counting currents. Terms are
/// keyed by canonical_key of a self-commensurated core graph and every stored
/// coefficient is positive.
class RationalCurrent {
 public:
  struct Term {
    Rational coefficient;
    CoreGraph graph;  // canonical_form, π1 self-commensurated
  };

  explicit RationalCurrent(Alphabet alphabet) : alphabet_(alphabet) {}

  // η_H, normalized.
  static RationalCurrent counting(const BasedCoreGraph& h);
  // η of the conjugacy class carried by a connected core graph.
  static RationalCurrent counting(const CoreGraph& g);

  Alphabet alphabet() const noexcept { return alphabet_; }
  const std::map<std::string, Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  RationalCurrent& operator+=(const RationalCurrent& other);
  // Scaling by a negative number is rejected.
  RationalCurrent scaled(const Rational& factor) const;

  friend RationalCurrent operator+(RationalCurrent a, const RationalCurrent& b) { return a += b; }
  friend RationalCurrent operator*(const Rational& c, const RationalCurrent& mu) { return mu.scaled(c); }
  friend bool operator==(const RationalCurrent& a, const RationalCurrent& b);

 private:
  friend RationalCurrent normalize(Alphabet, std::span<const RawTerm>);
  void add_term(const std::string& key, const Rational& coefficient, const CoreGraph& canonical_graph);

  Alphabet alphabet_;
  std::map<std::string, Term> terms_;
};

// Rewrites each c·η_H as ([Ĥ:H]c)·η_Ĥ, merges conjugate terms and drops
// zero coefficients.
RationalCurrent normalize(Alphabet alphabet, std::span<const RawTerm> raw);

Rational eval_cylinder(const RationalCurrent& mu, const FiniteSubtree& t);

Rational functional_E(const RationalCurrent& mu);
Rational functional_V(const RationalCurrent& mu);
Rational functional_rk(const RationalCurrent& mu);

Rational E_hat(const RationalCurrent& mu, const RationalCurrent& nu);
Rational V_hat(const RationalCurrent& mu, const RationalCurrent& nu);
// Bilinear extension of the number of contractible components of Δ_H ×_{R_N} Δ_K.
Rational c_hat(const RationalCurrent& mu, const RationalCurrent& nu);

// Number of contractible components of Δ_H ×_{R_N} Δ_K isomorphic to t,
// computed by direct isomorphism testing and by the double sum over pairs in
// R_{r+1} whose intersection is t. Requires t ⊆ B(id, r). Throws MismatchBug
// if the two counts differ.
int c_hat_via_round_graphs(const CoreGraph& h, const CoreGraph& k, const FiniteSubtree& t, int r,
                           std::uint64_t cap = kDefaultRoundGraphCap);
// Same, reusing a precomputed R_{r+1}.
int c_hat_via_round_graphs(const CoreGraph& h, const CoreGraph& k, const FiniteSubtree& t, int r,
                           std::span<const RoundGraph> round_graphs);

struct CHatCounts {
  int by_isomorphism = 0;
  int by_round_graphs = 0;
};
// Both counts without the agreement check, for diagnostics.
CHatCounts c_hat_counts(const CoreGraph& h, const CoreGraph& k, const FiniteSubtree& t, int r,
                        std::span<const RoundGraph> round_graphs);

// Ê − V̂ + ĉ.
Rational intersection_functional_N(const RationalCurrent& mu, const RationalCurrent& nu);

// Bilinear extension of (η_H, η_K) ↦ Σ_{HgK} η_{H ∩ gKg⁻¹}.
RationalCurrent pushforward_I(const RationalCurrent& mu, const RationalCurrent& nu);

}  // namespace subcur
