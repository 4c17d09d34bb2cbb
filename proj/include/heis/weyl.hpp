#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heis/word.hpp"

namespace heis {

using BigInt = boost::multiprecision::cpp_int;

/// A word in the free algebra on {x, d} with an integer coefficient;
/// input syntax for normal ordering.
struct WeylWord {
  std::string letters;  // over {'x', 'd'}
  BigInt coefficient = 1;
};

/// Element of the integral Weyl algebra in normal form:
/// finite map (i,j) -> nonzero coefficient of x^i d^j.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement monomial(int i, int j, BigInt c = 1);
  static WeylElement one() { return monomial(0, 0); }

  void add_term(int i, int j, const BigInt& c);
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coeff(int i, int j) const;
  const std::map<std::pair<int, int>, BigInt>& coeffs() const { return coeffs_; }

  WeylElement& operator+=(const WeylElement& other);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  /// Product computed by expanding normal forms back to letter words and
  /// re-normalizing.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  std::string str() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::map<std::pair<int, int>, BigInt> coeffs_;
};

/// Unique normal form under exhaustive leftmost rewriting dx -> xd + 1.
WeylElement normal_order(const std::vector<WeylWord>& words);
WeylElement normal_order(const std::string& letters);

/// K0 class of a word or sum of words: u -> x, d -> del, then normal order.
WeylElement k0(const Word& w);
WeylElement k0(const std::vector<Word>& summands);

bool iso_objects(const std::vector<Word>& a, const std::vector<Word>& b);

}  // namespace heis
