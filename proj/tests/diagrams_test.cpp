#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/diagram.hpp"

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

TEST_CASE("matching counts") {
  // End(u^n) has n! matchings
  const long long factorial[] = {1, 1, 2, 6, 24};
  for (int n = 0; n <= 4; ++n) {
    std::string s(static_cast<size_t>(n), 'u');
    CHECK(static_cast<long long>(
              enumerate_matchings(Word::parse(s), Word::parse(s)).size()) ==
          factorial[n]);
  }
  // unbalanced boundaries admit no matching
  CHECK(enumerate_matchings(Word::parse("u"), Word::parse("d")).empty());
  CHECK(enumerate_matchings(Word::parse("u"), Word::parse("uu")).empty());
  CHECK(enumerate_matchings(Word::parse("ud"), Word::parse("du")).size() == 2);
}

TEST_CASE("matchings are canonical and valid") {
  for (const Word& x : all_words(3))
    for (const Word& y : all_words(3))
      for (const Matching& m : enumerate_matchings(x, y)) {
        CHECK_NOTHROW(m.validate());
        Matching again = m;
        again.canonicalize();
        CHECK(again == m);
        // every pair joins opposite letters on the cyclic boundary
        for (const auto& [a, b] : m.pairs) {
          bool a_out = (a.side == BoundaryPoint::Side::Bottom) ==
                       (m.letter(a) == Orientation::Up);
          bool b_out = (b.side == BoundaryPoint::Side::Bottom) ==
                       (m.letter(b) == Orientation::Up);
          CHECK(a_out != b_out);
        }
      }
}

TEST_CASE("forced crossings") {
  // identities are crossing-free
  for (const Word& w : all_words(4))
    CHECK(forced_crossings(identity_diagram(w).matching).empty());
  // the transposition of End(uu) crosses once
  auto ms = enumerate_matchings(Word::parse("uu"), Word::parse("uu"));
  REQUIRE(ms.size() == 2);
  int crossing_sizes[2] = {static_cast<int>(forced_crossings(ms[0]).size()),
                           static_cast<int>(forced_crossings(ms[1]).size())};
  CHECK(crossing_sizes[0] + crossing_sizes[1] == 1);
  // pairwise crossings are at most one per string pair by construction
  for (const Word& x : all_words(3))
    for (const Word& y : all_words(3))
      for (const Matching& m : enumerate_matchings(x, y)) {
        auto fc = forced_crossings(m);
        std::set<std::pair<int, int>> seen(fc.begin(), fc.end());
        CHECK(seen.size() == fc.size());
      }
}

TEST_CASE("string profiles") {
  // cup 1 -> du is counterclockwise, cup 1 -> ud is clockwise
  auto cup_ccw = enumerate_matchings(Word{}, Word::parse("du"));
  REQUIRE(cup_ccw.size() == 1);
  auto p1 = string_profile(cup_ccw[0], 0);
  CHECK(p1.kind == StringProfile::Kind::Cup);
  CHECK(p1.rotation == StringProfile::Rotation::Counterclockwise);
  auto cup_cw = enumerate_matchings(Word{}, Word::parse("ud"));
  REQUIRE(cup_cw.size() == 1);
  auto p2 = string_profile(cup_cw[0], 0);
  CHECK(p2.kind == StringProfile::Kind::Cup);
  CHECK(p2.rotation == StringProfile::Rotation::Clockwise);
  // caps dually
  auto cap_ccw = enumerate_matchings(Word::parse("du"), Word{});
  REQUIRE(cap_ccw.size() == 1);
  CHECK(string_profile(cap_ccw[0], 0).kind == StringProfile::Kind::Cap);
  CHECK(string_profile(cap_ccw[0], 0).rotation ==
        StringProfile::Rotation::Counterclockwise);
  auto cap_cw = enumerate_matchings(Word::parse("ud"), Word{});
  REQUIRE(cap_cw.size() == 1);
  CHECK(string_profile(cap_cw[0], 0).rotation ==
        StringProfile::Rotation::Clockwise);
  // bridges carry a direction
  auto idm = identity_diagram(Word::parse("u")).matching;
  CHECK(string_profile(idm, 0).kind == StringProfile::Kind::Bridge);
  CHECK(string_profile(idm, 0).direction == StringProfile::Direction::Upward);
}

TEST_CASE("restriction predicate and basis counts") {
  CHECK(restricted_basis(Word::parse("du"), Word::parse("du")).size() == 2);
  CHECK(restricted_basis(Word::parse("ud"), Word::parse("ud")).size() == 1);
  CHECK(restricted_basis(Word::parse("uu"), Word::parse("uu")).size() == 1);
  CHECK(restricted_basis(Word::parse("ud"), Word::parse("du")).size() == 1);
  CHECK(restricted_basis(Word{}, Word::parse("ud")).empty());
  CHECK(restricted_basis(Word{}, Word::parse("du")).size() == 1);
  for (const auto& d : restricted_basis(Word::parse("dduu"), Word::parse("dduu")))
    CHECK(is_restricted(d));
}

TEST_CASE("hom dimensions of simples are delta") {
  for (int i = 0; i + 0 <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j)
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b) {
          int expected = (i == a && j == b) ? 1 : 0;
          CHECK(hom_dim_restricted(Simple{i, j}.word(), Simple{a, b}.word()) ==
                expected);
        }
}

TEST_CASE("hom dimension is symmetric under duality") {
  for (const Word& x : all_words(3))
    for (const Word& y : all_words(3))
      CHECK(hom_dim_restricted(x, y) ==
            hom_dim_restricted(dual_word(y), dual_word(x)));
}
