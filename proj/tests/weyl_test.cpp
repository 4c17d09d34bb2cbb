#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "heis/weyl.hpp"

using namespace heis;

namespace {

// polynomials in one variable t with big integer coefficients
using Poly = std::map<int, BigInt>;

Poly monomial_t(int k) { return {{k, 1}}; }

Poly apply_letter(char letter, const Poly& p) {
  Poly out;
  for (const auto& [e, c] : p) {
    if (letter == 'x') {
      out[e + 1] += c;
    } else if (e > 0) {
      out[e - 1] += c * e;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly apply_word(const std::string& letters, Poly p) {
  // rightmost letter acts first, matching operator composition
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    p = apply_letter(*it, p);
  return p;
}

Poly apply_element(const WeylElement& e, const Poly& p) {
  Poly out;
  for (const auto& [ij, c] : e.coeffs()) {
    Poly q = p;
    for (int k = 0; k < ij.second; ++k) q = apply_letter('d', q);
    for (int k = 0; k < ij.first; ++k) q = apply_letter('x', q);
    for (const auto& [deg, cc] : q) {
      out[deg] += c * cc;
      if (out[deg] == 0) out.erase(deg);
    }
  }
  return out;
}

std::vector<std::string> letter_words(int max_len) {
  std::vector<std::string> out = {""};
  for (size_t k = 0; k < out.size(); ++k) {
    std::string w = out[k];
    if (static_cast<int>(w.size()) >= max_len) continue;
    out.push_back(w + "x");
    out.push_back(w + "d");
  }
  return out;
}

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

TEST_CASE("defining relation and witnesses") {
  CHECK(normal_order("dx").str() == "xD + 1");
  CHECK(normal_order("xd").str() == "xD");
  CHECK(normal_order("ddxx").str() == "x^2D^2 + 4xD + 2");
  CHECK(normal_order("") == WeylElement::one());
}

TEST_CASE("differential operator model on t^k") {
  // independent oracle: every word of length <= 6 applied to t^k, k <= 6,
  // agrees with its normal form applied to t^k
  for (const std::string& w : letter_words(6)) {
    WeylElement nf = normal_order(w);
    for (int k = 0; k <= 6; ++k)
      CHECK(apply_word(w, monomial_t(k)) == apply_element(nf, monomial_t(k)));
  }
}

TEST_CASE("normal ordering is multiplicative") {
  for (const std::string& w : letter_words(6))
    for (size_t cut = 0; cut <= w.size(); ++cut)
      CHECK(normal_order(w) ==
            normal_order(w.substr(0, cut)) * normal_order(w.substr(cut)));
}

TEST_CASE("k0 is multiplicative on tensor") {
  auto words = all_words(3);
  for (const Word& a : words)
    for (const Word& b : words)
      CHECK(k0(tensor(a, b)) == k0(a) * k0(b));
}

TEST_CASE("no zero divisors at desk scale") {
  for (const Word& a : all_words(3))
    for (const Word& b : all_words(3)) {
      CHECK(!k0(a).is_zero());
      CHECK(!(k0(a) * k0(b)).is_zero());
    }
}

TEST_CASE("object isomorphism decision") {
  CHECK(iso_objects({Word::parse("du")}, {Word::parse("ud"), Word{}}));
  CHECK(!iso_objects({Word::parse("u")}, {Word::parse("d")}));
  std::vector<Word> rhs = {Word::parse("uudd"), Word::parse("ud"),
                           Word::parse("ud"),   Word::parse("ud"),
                           Word::parse("ud"),   Word{},
                           Word{}};
  CHECK(iso_objects({Word::parse("dduu")}, rhs));
}

TEST_CASE("coefficients grow factorially without overflow") {
  // D^10 x^10 has constant term 10!
  WeylElement e = normal_order(std::string(10, 'd') + std::string(10, 'x'));
  CHECK(e.coeff(0, 0) == BigInt(3628800));
  CHECK(e.coeff(10, 10) == 1);
}
