#include "subcur/automorphisms.hpp"

#include "subcur/error.hpp"

namespace subcur {

Endomorphism::Endomorphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(alphabet), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet.rank()) {
    throw Error(ErrorKind::InvalidArgument, "need " + std::to_string(alphabet.rank()) + " images, got " +
                                                std::to_string(images_.size()));
  }
  for (const Word& w : images_) {
    if (w.alphabet() != alphabet) throw Error(ErrorKind::AlphabetMismatch, "image over a different rank");
  }
}

Endomorphism Endomorphism::identity(Alphabet alphabet) {
  std::vector<Word> images;
  for (int i = 1; i <= alphabet.rank(); ++i) images.emplace_back(alphabet, std::vector{Letter(i, 1)});
  return Endomorphism(alphabet, std::move(images));
}

std::string Endomorphism::str() const {
  std::string out;
  for (int i = 1; i <= alphabet_.rank(); ++i) {
    if (i > 1) out += ", ";
    out += Word(alphabet_, {Letter(i, 1)}).str() + "->" + image(i).str();
  }
  return out;
}

Word apply_word(const Endomorphism& phi, const Word& w) {
  if (w.alphabet() != phi.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "word over a different rank");
  std::vector<Letter> letters;
  for (Letter x : w.letters()) {
    const Word& img = phi.image(x.index());
    if (x.sign() > 0) {
      letters.insert(letters.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) letters.push_back(it->inverse());
    }
  }
  return Word(phi.alphabet(), std::move(letters));
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  if (outer.alphabet() != inner.alphabet()) throw Error(ErrorKind::AlphabetMismatch, "composing over different ranks");
  std::vector<Word> images;
  for (const Word& w : inner.images()) images.push_back(apply_word(outer, w));
  return Endomorphism(outer.alphabet(), std::move(images));
}

bool is_automorphism(const Endomorphism& phi) {
  // Surjective iff <images> folds to the rose; Hopfian, so then bijective.
  try {
    const BasedCoreGraph g = from_generators(phi.alphabet(), phi.images());
    return g.num_vertices() == 1 && g.num_edges() == phi.alphabet().rank();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::TrivialSubgroup) return false;
    throw;
  }
}

std::vector<Endomorphism> nielsen_generators(Alphabet alphabet) {
  const int n = alphabet.rank();
  const Endomorphism id = Endomorphism::identity(alphabet);
  auto letter = [&](int i, int s) { return Word(alphabet, {Letter(i, s)}); };
  std::vector<Endomorphism> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      auto images = id.images();
      std::swap(images[i - 1], images[j - 1]);
      out.emplace_back(alphabet, std::move(images));
    }
  }
  for (int i = 1; i <= n; ++i) {
    auto images = id.images();
    images[i - 1] = letter(i, -1);
    out.emplace_back(alphabet, std::move(images));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      auto left = id.images();
      left[i - 1] = product({letter(j, 1), letter(i, 1)});
      out.emplace_back(alphabet, std::move(left));
      auto right = id.images();
      right[i - 1] = product({letter(i, 1), letter(j, 1)});
      out.emplace_back(alphabet, std::move(right));
    }
  }
  return out;
}

Endomorphism random_automorphism(Rng& rng, Alphabet alphabet, int length) {
  const auto gens = nielsen_generators(alphabet);
  Endomorphism phi = Endomorphism::identity(alphabet);
  for (int i = 0; i < length; ++i) phi = compose(gens[rng.below(gens.size())], phi);
  return phi;
}

BasedCoreGraph act_on_subgroup(const Endomorphism& phi, const BasedCoreGraph& h, bool checked) {
  if (checked && !is_automorphism(phi)) throw Error(ErrorKind::NotAutomorphism, phi.str() + " is not onto");
  std::vector<Word> images;
  for (const Word& w : generators(h)) images.push_back(apply_word(phi, w));
  return from_generators(phi.alphabet(), images);
}

RationalCurrent act_on_current(const Endomorphism& phi, const RationalCurrent& mu, bool checked) {
  if (checked && !is_automorphism(phi)) throw Error(ErrorKind::NotAutomorphism, phi.str() + " is not onto");
  std::vector<RawTerm> raw;
  for (const auto& [key, term] : mu.terms()) {
    try {
      raw.push_back({term.coefficient, act_on_subgroup(phi, based_at(term.graph, 0))});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TrivialSubgroup) throw;
    }
  }
  return normalize(mu.alphabet(), raw);
}

}  // namespace subcur
