#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/word.hpp"

using namespace heis;

namespace {

std::vector<Word> all_words(int max_len) {
  std::vector<Word> out = {Word{}};
  for (size_t k = 0; k < out.size(); ++k) {
    Word w = out[k];
    if (w.size() >= max_len) continue;
    for (Orientation o : {Orientation::Up, Orientation::Down}) {
      auto ls = w.letters();
      ls.push_back(o);
      out.push_back(Word{std::move(ls)});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("parse and print round-trip") {
  CHECK(Word::parse("1").str() == "1");
  CHECK(Word::parse("").str() == "1");
  CHECK(Word::parse("uud").str() == "uud");
  CHECK(Word::parse("duud").size() == 4);
  CHECK_THROWS_AS(Word::parse("uq"), std::invalid_argument);
  for (const Word& w : all_words(5)) CHECK(Word::parse(w.str()) == w);
}

TEST_CASE("letter access and counts") {
  Word w = Word::parse("uudd");
  CHECK(w.at(1) == Orientation::Up);
  CHECK(w.at(4) == Orientation::Down);
  CHECK(w.ups() == 2);
  CHECK(w.downs() == 2);
  CHECK(Word{}.empty());
}

TEST_CASE("tensor is associative with unit") {
  for (const Word& a : all_words(2))
    for (const Word& b : all_words(2))
      for (const Word& c : all_words(2))
        CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
  for (const Word& a : all_words(3)) {
    CHECK(tensor(a, Word{}) == a);
    CHECK(tensor(Word{}, a) == a);
  }
}

TEST_CASE("dual is an involution up to length 6") {
  for (const Word& w : all_words(6)) {
    CHECK(dual_word(dual_word(w)) == w);
    CHECK(dual_word(w).ups() == w.downs());
    CHECK(dual_word(w).downs() == w.ups());
  }
  CHECK(dual_word(Word::parse("uud")).str() == "udd");
  CHECK(dual_word(Word{}) == Word{});
}

TEST_CASE("simple recognition") {
  CHECK(as_simple(Word::parse("uudd")) == Simple{2, 2});
  CHECK(as_simple(Word::parse("1")) == Simple{0, 0});
  CHECK(as_simple(Word::parse("uuu")) == Simple{3, 0});
  CHECK(as_simple(Word::parse("dd")) == Simple{0, 2});
  CHECK(!as_simple(Word::parse("udu")).has_value());
  CHECK(!as_simple(Word::parse("du")).has_value());
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      CHECK(as_simple(Simple{i, j}.word()) == Simple{i, j});
}
