#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subcur {

/// A free basis {a_1, ..., a_N} with N >= 2.
class Alphabet {
 public:
  explicit Alphabet(int rank);

  int rank() const noexcept { return rank_; }
  // Number of letters in A and A^-1 together.
  int directions() const noexcept { return 2 * rank_; }
  // Compact one-character format only covers 26 generators.
  bool compact_ok() const noexcept { return rank_ <= 26; }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  int rank_;
};

/// A generator or its inverse, stored as a signed index (+i for a_i, -i for
/// a_i^-1).
class Letter {
 public:
  Letter(int index, int sign);
  static Letter from_signed(int value);
  // Inverse of direction(): 0 -> a_1, 1 -> a_1^-1, 2 -> a_2, ...
  static Letter from_direction(int direction);

  int index() const noexcept { return value_ < 0 ? -value_ : value_; }
  int sign() const noexcept { return value_ < 0 ? -1 : 1; }
  int signed_value() const noexcept { return value_; }
  Letter inverse() const noexcept { return from_signed(-value_); }

  // Position in the fixed order a_1 < a_1^-1 < a_2 < a_2^-1 < ...
  int direction() const noexcept { return 2 * (index() - 1) + (value_ < 0 ? 1 : 0); }

  friend bool operator==(Letter, Letter) = default;
  friend std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.direction() <=> b.direction();
  }

 private:
  struct Raw {};
  Letter(Raw, int value) : value_(value) {}
  int value_;
};

enum class WordFormat { Compact, Extended };

/// A freely reduced word over an alphabet. Construction always reduces, so
/// every Word value is reduced.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  static Word parse(std::string_view text, Alphabet alphabet);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }

  // Compact for N <= 26 unless asked otherwise; the identity prints as "1".
  std::string str() const;
  std::string str(WordFormat format) const;

  // Drops the last letter (the parent of this word as a vertex of the Cayley
  // tree).
  Word parent() const;
  // Appends one letter with free reduction.
  Word extended(Letter letter) const;

  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex over the fixed letter order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

Word concat_reduce(const Word& u, const Word& v);
Word invert(const Word& w);

struct CyclicDecomposition {
  Word core;
  Word conjugator;
};

// w == conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicDecomposition cyclic_reduce(const Word& w);

// Product of a list of words, reduced.
Word product(std::initializer_list<Word> words);

}  // namespace subcur
