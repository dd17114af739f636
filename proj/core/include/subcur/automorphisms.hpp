#pragma once

#include "subcur/currents.hpp"
#include "subcur/random.hpp"
#include "subcur/stallings.hpp"

#include <vector>

namespace subcur {

/// Substitution a_i -> images[i-1].
class Endomorphism {
 public:
  // Throws InvalidArgument unless there is one image per generator, and
  // AlphabetMismatch if an image lives over another rank.
  Endomorphism(Alphabet alphabet, std::vector<Word> images);
  static Endomorphism identity(Alphabet alphabet);

  Alphabet alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(int generator) const { return images_.at(generator - 1); }

  std::string str() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

Word apply_word(const Endomorphism& phi, const Word& w);
// outer ∘ inner
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

bool is_automorphism(const Endomorphism& phi);

// Transpositions, inversions, and a_i -> a_j a_i, a_i -> a_i a_j for i != j.
std::vector<Endomorphism> nielsen_generators(Alphabet alphabet);

// Product of `length` uniformly drawn Nielsen generators.
Endomorphism random_automorphism(Rng& rng, Alphabet alphabet, int length);

// In checked mode a non-surjective phi raises NotAutomorphism. Throws
// TrivialSubgroup if phi kills the subgroup.
BasedCoreGraph act_on_subgroup(const Endomorphism& phi, const BasedCoreGraph& h, bool checked = false);
// Terms whose image is trivial contribute zero.
RationalCurrent act_on_current(const Endomorphism& phi, const RationalCurrent& mu, bool checked = false);

}  // namespace subcur
