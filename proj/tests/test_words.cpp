#include <doctest.h>

#include "subcur/error.hpp"
#include "subcur/rational.hpp"
#include "subcur/words.hpp"

using namespace subcur;

namespace {

Word w(const char* text, int rank = 2) { return Word::parse(text, Alphabet(rank)); }

bool throws_kind(auto&& f, ErrorKind kind) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("parse and reduce") {
  CHECK(w("aA").str() == "1");
  CHECK(w("abBA").empty());
  CHECK(w("aabBc", 3).str() == "aac");
  CHECK(w("1").empty());
  CHECK(w("").empty());
  CHECK(w("a b . B").str() == "a");
  CHECK(w("x1 x2 X2", 2).str() == "a");
  CHECK(w("x1 x27", 30).str() == "x1x27");
  CHECK(w("ab", 2).str(WordFormat::Extended) == "x1x2");
}

TEST_CASE("parse errors") {
  CHECK(throws_kind([] { w("ac"); }, ErrorKind::Parse));
  CHECK(throws_kind([] { w("a x1"); }, ErrorKind::Parse));
  CHECK(throws_kind([] { w("a?"); }, ErrorKind::Parse));
  CHECK(throws_kind([] { w("x3"); }, ErrorKind::Parse));
  CHECK(throws_kind([] { w("a", 27); }, ErrorKind::Parse));
  CHECK(throws_kind([] { Alphabet(1); }, ErrorKind::InvalidArgument));
}

TEST_CASE("products and inverses") {
  CHECK(concat_reduce(w("ab"), w("Ba")).str() == "aa");
  CHECK(invert(w("abA")).str() == "aBA");
  CHECK(product({w("ab"), w("BA"), w("b")}).str() == "b");
  CHECK(throws_kind([] { concat_reduce(w("a"), w("a", 3)); }, ErrorKind::AlphabetMismatch));
}

TEST_CASE("cyclic reduction") {
  // AbaBa = (Ab) a (Ab)^-1
  const auto d = cyclic_reduce(w("AbaBa"));
  CHECK(d.core.str() == "a");
  CHECK(d.conjugator.str() == "Ab");
  CHECK(product({d.conjugator, d.core, invert(d.conjugator)}) == w("AbaBa"));
  CHECK(cyclic_reduce(w("abab")).core.str() == "abab");
  CHECK(cyclic_reduce(w("1")).core.empty());
}

TEST_CASE("shortlex order") {
  CHECK(w("1") < w("a"));
  CHECK(w("a") < w("A"));
  CHECK(w("A") < w("b"));
  CHECK(w("B") < w("aa"));
  CHECK_FALSE(w("aB") < w("Aa"));  // Aa reduces to 1
}

TEST_CASE("rationals") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(throws_kind([] { parse_rational("1/0"); }, ErrorKind::Parse));
  CHECK(throws_kind([] { parse_rational("x"); }, ErrorKind::Parse));
}
