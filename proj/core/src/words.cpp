#include "subcur/words.hpp"

#include "subcur/error.hpp"

#include <algorithm>
#include <cctype>

namespace subcur {

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 2) throw Error(ErrorKind::InvalidArgument, "alphabet rank must be >= 2, got " + std::to_string(rank));
}

Letter::Letter(int index, int sign) : value_(sign < 0 ? -index : index) {
  if (index < 1) throw Error(ErrorKind::InvalidArgument, "letter index must be >= 1");
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "letter sign must be +1 or -1");
}

Letter Letter::from_signed(int value) {
  if (value == 0) throw Error(ErrorKind::InvalidArgument, "letter value 0");
  return Letter(Raw{}, value);
}

Letter Letter::from_direction(int direction) {
  return Letter(direction / 2 + 1, direction % 2 == 0 ? 1 : -1);
}

namespace {

void check_letter(Letter x, Alphabet alphabet) {
  if (x.index() > alphabet.rank()) {
    throw Error(ErrorKind::Parse, "generator index " + std::to_string(x.index()) + " exceeds rank " +
                                      std::to_string(alphabet.rank()));
  }
}

// Stack-scan reduction: push each letter unless it cancels the top.
void push_reduced(std::vector<Letter>& stack, Letter x) {
  if (!stack.empty() && stack.back() == x.inverse()) {
    stack.pop_back();
  } else {
    stack.push_back(x);
  }
}

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '.'; }

}  // namespace

Word::Word(Alphabet alphabet, std::vector<Letter> letters) : alphabet_(alphabet) {
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (x.index() > alphabet.rank()) {
      throw Error(ErrorKind::AlphabetMismatch, "letter a" + std::to_string(x.index()) + " outside rank " +
                                                   std::to_string(alphabet.rank()));
    }
    push_reduced(letters_, x);
  }
}

Word Word::parse(std::string_view text, Alphabet alphabet) {
  std::string compacted;
  for (char c : text) {
    if (!is_separator(c)) compacted.push_back(c);
  }
  if (compacted.empty() || compacted == "1") return Word(alphabet);

  bool extended = false;
  for (std::size_t i = 0; i + 1 < compacted.size(); ++i) {
    if ((compacted[i] == 'x' || compacted[i] == 'X') && std::isdigit(static_cast<unsigned char>(compacted[i + 1]))) {
      extended = true;
      break;
    }
  }

  std::vector<Letter> letters;
  if (extended) {
    std::size_t i = 0;
    while (i < compacted.size()) {
      const char c = compacted[i];
      if (c != 'x' && c != 'X') {
        if (std::isalpha(static_cast<unsigned char>(c))) {
          throw Error(ErrorKind::Parse, "mixed compact and extended formats in '" + std::string(text) + "'");
        }
        throw Error(ErrorKind::Parse, std::string("unknown token '") + c + "' in '" + std::string(text) + "'");
      }
      std::size_t j = i + 1;
      long index = 0;
      while (j < compacted.size() && std::isdigit(static_cast<unsigned char>(compacted[j]))) {
        index = index * 10 + (compacted[j] - '0');
        if (index > 1'000'000) throw Error(ErrorKind::Parse, "generator index too large in '" + std::string(text) + "'");
        ++j;
      }
      if (j == i + 1) {
        throw Error(ErrorKind::Parse, "mixed compact and extended formats in '" + std::string(text) + "'");
      }
      if (index < 1) throw Error(ErrorKind::Parse, "generator index 0 in '" + std::string(text) + "'");
      const Letter x(static_cast<int>(index), c == 'x' ? 1 : -1);
      check_letter(x, alphabet);
      letters.push_back(x);
      i = j;
    }
  } else {
    if (!alphabet.compact_ok()) {
      throw Error(ErrorKind::Parse, "compact format needs rank <= 26; use x<i>/X<i> tokens");
    }
    for (char c : compacted) {
      if (c >= 'a' && c <= 'z') {
        letters.emplace_back(c - 'a' + 1, 1);
      } else if (c >= 'A' && c <= 'Z') {
        letters.emplace_back(c - 'A' + 1, -1);
      } else {
        throw Error(ErrorKind::Parse, std::string("unknown token '") + c + "' in '" + std::string(text) + "'");
      }
      check_letter(letters.back(), alphabet);
    }
  }
  return Word(alphabet, std::move(letters));
}

std::string Word::str() const {
  return str(alphabet_.compact_ok() ? WordFormat::Compact : WordFormat::Extended);
}

std::string Word::str(WordFormat format) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (Letter x : letters_) {
    if (format == WordFormat::Compact) {
      out.push_back(static_cast<char>((x.sign() > 0 ? 'a' : 'A') + x.index() - 1));
    } else {
      out.push_back(x.sign() > 0 ? 'x' : 'X');
      out += std::to_string(x.index());
    }
  }
  return out;
}

Word Word::parent() const {
  Word result(alphabet_);
  if (!letters_.empty()) result.letters_.assign(letters_.begin(), letters_.end() - 1);
  return result;
}

Word Word::extended(Letter letter) const {
  Word result = *this;
  push_reduced(result.letters_, letter);
  return result;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

Word concat_reduce(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) {
    throw Error(ErrorKind::AlphabetMismatch, "cannot multiply words over ranks " +
                                                 std::to_string(u.alphabet().rank()) + " and " +
                                                 std::to_string(v.alphabet().rank()));
  }
  std::vector<Letter> stack(u.letters().begin(), u.letters().end());
  for (Letter x : v.letters()) push_reduced(stack, x);
  return Word(u.alphabet(), std::move(stack));
}

Word invert(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(it->inverse());
  return Word(w.alphabet(), std::move(letters));
}

CyclicDecomposition cyclic_reduce(const Word& w) {
  const auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return {Word(w.alphabet(), std::vector<Letter>(letters.begin() + lo, letters.begin() + hi)),
          Word(w.alphabet(), std::vector<Letter>(letters.begin(), letters.begin() + lo))};
}

Word product(std::initializer_list<Word> words) {
  if (words.size() == 0) throw Error(ErrorKind::InvalidArgument, "product of no words has no alphabet");
  Word result(words.begin()->alphabet());
  for (const Word& w : words) result = concat_reduce(result, w);
  return result;
}

}  // namespace subcur
