#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/oracle.hpp"

using namespace heis;
using namespace heis::oracle;

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("permutation arithmetic") {
  Perm a = transposition(0, 1, 3);
  CHECK(perm_mul(a, a) == perm_identity(3));
  CHECK(perm_inv(a) == a);
  Perm c = coset_rep(0, 3);  // cycle (0 1 2)
  CHECK(perm_apply(c, 2) == 0);
  CHECK(perm_mul(c, perm_inv(c)) == perm_identity(3));
  // shorter permutations act as the identity on missing points
  CHECK(perm_apply(perm_identity(1), 5) == 5);
}

TEST_CASE("space dimensions") {
  for (int n = 0; n <= 3; ++n) {
    CHECK(space_for(Word{}, n).dim == factorial(n));
    CHECK(space_for(Word::parse("u"), n).dim == factorial(n + 1));
    CHECK(space_for(Word::parse("du"), n).dim == factorial(n + 1));
    CHECK(space_for(Word::parse("ud"), n).dim ==
          (n == 0 ? 0 : n * factorial(n)));
  }
  // restriction below level zero kills the module
  Space dead = space_for(Word::parse("d"), 0);
  CHECK(!dead.valid);
  CHECK(dead.dim == 0);
}

TEST_CASE("label encode decode round-trip") {
  for (int n = 0; n <= 2; ++n) {
    Space sp = space_for(Word::parse("uud"), n);
    for (std::int64_t i = 0; i < sp.dim; ++i) {
      Label lbl = decode_label(sp, i);
      CHECK(encode_label(sp, lbl) == i);
    }
  }
}

TEST_CASE("group action is compatible with multiplication") {
  Space sp = space_for(Word::parse("uu"), 1);
  std::vector<Perm> gens = {transposition(0, 1, 3), transposition(1, 2, 3),
                            coset_rep(0, 3)};
  for (const Perm& s : gens)
    for (const Perm& t : gens)
      for (std::int64_t i = 0; i < sp.dim; ++i) {
        Label lbl = decode_label(sp, i);
        Label a = act(sp, perm_mul(s, t), lbl);
        Label b = act(sp, s, act(sp, t, lbl));
        CHECK(encode_label(sp, a) == encode_label(sp, b));
      }
}

TEST_CASE("sparse matrix algebra") {
  SparseMat id = SparseMat::identity(4);
  CHECK(mat_mul(id, id) == id);
  CHECK(mat_is_zero(SparseMat::zero(3, 5)));
  CHECK(mat_is_zero(mat_add(id, mat_scale(id, -1))));
}

TEST_CASE("identity diagrams evaluate to identity matrices") {
  for (const char* w : {"1", "u", "d", "du", "uud"})
    for (int n = 0; n <= 3; ++n) {
      Word word = Word::parse(w);
      auto m = eval_diagram(heis::identity_diagram(word), n);
      CHECK(m == SparseMat::identity(space_for(word, n).dim));
    }
}

TEST_CASE("defining and derived relations hold at levels up to 3") {
  for (const auto& [name, ok] : relations_selftest(3)) {
    INFO(name);
    CHECK(ok);
  }
}

TEST_CASE("incomposable slice words are rejected") {
  SliceWord sw = {Slice{Word{}, Gen::S, Word{}}};
  CHECK_THROWS_AS(eval_slices(sw, Word::parse("ud"), 1), std::logic_error);
}
