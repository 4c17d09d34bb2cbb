#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/diagram.hpp"
#include "heis/slices.hpp"
#include "heis/weyl.hpp"
#include "heis/word.hpp"

using namespace heis;

TEST_CASE("word basics") {
  CHECK(Word::parse("1").empty());
  CHECK(Word::parse("uud").str() == "uud");
  CHECK(dual_word(Word::parse("uud")).str() == "udd");
  CHECK(as_simple(Word::parse("uudd")).has_value());
  CHECK(!as_simple(Word::parse("udu")).has_value());
}

TEST_CASE("matchings count") {
  CHECK(enumerate_matchings(Word::parse("ud"), Word::parse("du")).size() == 2);
  CHECK(enumerate_matchings(Word::parse("uu"), Word::parse("uu")).size() == 2);
  CHECK(restricted_basis(Word::parse("du"), Word::parse("du")).size() == 2);
  CHECK(restricted_basis(Word::parse("uu"), Word::parse("uu")).size() == 1);
}

TEST_CASE("weyl normal order") {
  CHECK(normal_order("dx").str() == "xD + 1");
  CHECK(k0(Word::parse("du")) == k0(Word::parse("ud")) + WeylElement::one());
}

TEST_CASE("slices roundtrip turnback") {
  auto basis = restricted_basis(Word::parse("du"), Word::parse("du"));
  for (const auto& d : basis) {
    auto sw = to_slices(d);
    auto back = diagram_from_slices(sw, d.matching.source);
    CHECK(back == d);
  }
}

TEST_CASE("expand t") {
  SliceWord t = {{Word{}, Gen::T, Word{}}};
  auto atoms = expand_to_atoms(t);
  REQUIRE(atoms.size() == 3);
  CHECK(atoms[0].gen == Gen::C);
  CHECK(atoms[1].gen == Gen::S);
  CHECK(atoms[2].gen == Gen::D);
  CHECK(atoms[0].source() == Word::parse("ud"));
  CHECK(atoms[2].target() == Word::parse("du"));
  for (size_t i = 0; i + 1 < atoms.size(); ++i)
    CHECK(atoms[i].target() == atoms[i + 1].source());
}

#include "heis/oracle.hpp"

TEST_CASE("oracle relations") {
  auto results = heis::oracle::relations_selftest(3);
  for (const auto& [name, ok] : results) {
    INFO(name);
    CHECK(ok);
  }
}

#include "heis/morphism.hpp"

TEST_CASE("engine calibration") {
  using namespace heis;
  Morphism t = gen_t(), tp = gen_tp(), c = gen_c(), dp = gen_dp();
  // t'.t = id(ud)
  CHECK(compose(tp, t) == Morphism::identity(Word::parse("ud")));
  // t.t' = id(du) - c.d' (turnback)
  Morphism turn = compose(c, dp);
  CHECK(turn.terms.size() == 1);
  Morphism ttp = compose(t, tp);
  CHECK(ttp == Morphism::identity(Word::parse("du")) - turn);
  // d'.c = id(1)
  CHECK(compose(dp, c) == Morphism::identity(Word{}));
  // t'.c = 0
  CHECK(compose(tp, c).is_zero());
  // oracle agreement
  CHECK(morphisms_equal(ttp, Morphism::identity(Word::parse("du")) - turn, 3));
}

TEST_CASE("heisenberg iso roundtrip") {
  using namespace heis;
  auto [fwd, bwd] = heisenberg_iso();
  CHECK(matrix_is_identity(matrix_compose(fwd, bwd)));
  CHECK(matrix_is_identity(matrix_compose(bwd, fwd)));
}

TEST_CASE("decompose small") {
  using namespace heis;
  auto d = decompose_object(Word::parse("du"));
  CHECK(d.multiplicities[Simple{1, 1}] == 1);
  CHECK(d.multiplicities[Simple{0, 0}] == 1);
  CHECK(matrix_is_identity(matrix_compose(d.forward, d.backward)));
  CHECK(matrix_is_identity(matrix_compose(d.backward, d.forward)));
  auto d2 = decompose_object(Word::parse("dduu"));
  CHECK(d2.multiplicities[Simple{2, 2}] == 1);
  CHECK(d2.multiplicities[Simple{1, 1}] == 4);
  CHECK(d2.multiplicities[Simple{0, 0}] == 2);
}
