#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "heis/word.hpp"

namespace heis {

/// A bounded split complex up to isomorphism: per-degree multisets of simples.
/// The zero object is the empty map.
struct SplitObject {
  std::map<long long, std::map<Simple, long long>> degrees;

  bool is_zero() const { return degrees.empty(); }

  /// Union of the per-degree multisets; ideal membership is degree-blind.
  std::map<Simple, long long> summands() const;

  friend bool operator==(const SplitObject&, const SplitObject&) = default;
};

/// Semisimple decomposition of a word placed in a single homological degree.
SplitObject split(const Word& w, long long degree = 0);
SplitObject split(const std::vector<Word>& summands, long long degree = 0);

enum class Side { Left, Right, TwoSided };

/// Canonical form of a thick one- or two-sided tensor ideal: the zero ideal,
/// the whole category, or a chain ideal cutting on up- or down-degree.
struct IdealDescriptor {
  enum class Form { Zero, Whole, RightChain, LeftChain };

  Form form = Form::Zero;
  int index = 0;  // chain cutoff, >= 1 for the chain forms

  static IdealDescriptor zero() { return {Form::Zero, 0}; }
  static IdealDescriptor whole() { return {Form::Whole, 0}; }
  /// Chain index 0 normalizes to the whole category.
  static IdealDescriptor right_chain(int i);
  static IdealDescriptor left_chain(int j);

  bool contains(const Simple& s) const;
  std::string str() const;

  friend bool operator==(const IdealDescriptor&, const IdealDescriptor&) = default;
  friend auto operator<=>(const IdealDescriptor&, const IdealDescriptor&) = default;
};

/// The thick side-ideal generated by the given objects, in canonical form.
IdealDescriptor ideal_generated(Side side, const std::vector<SplitObject>& gens);

/// Membership at the level of simple summands; the zero object belongs to
/// every ideal.
bool ideal_member(Side side, const IdealDescriptor& ideal, const SplitObject& x);

/// All distinct descriptors generated by single words of length <= L, plus
/// the zero ideal, ordered by strictly decreasing inclusion.
std::vector<IdealDescriptor> enumerate_ideals(Side side, int L);

/// Independent check of the canonical form: saturate the generators under
/// simple summands and one-sided tensoring by words of length <= tensor_len,
/// keeping simples with both degrees <= bound.
std::set<Simple> brute_force_ideal(Side side, const std::vector<Word>& gens,
                                   int tensor_len, int bound);

/// Balmer spectrum report at desk scale.
struct SpcReport {
  int sample_length = 0;
  bool two_sided_lattice_is_trivial = false;  // proper two-sided ideals: zero only
  bool zero_ideal_prime = false;              // x tensor y = 0 forces x = 0 or y = 0
  bool completely_prime = false;              // no zero divisors among K0 classes
  bool supports_correct = false;              // supp(x) = {*} iff x != 0
  bool tensor_product_property = false;       // supp(x ⊗ y) = supp(x) ∩ supp(y)

  bool all_ok() const {
    return two_sided_lattice_is_trivial && zero_ideal_prime && completely_prime &&
           supports_correct && tensor_product_property;
  }
};

SpcReport spc_report(int sample_length);

/// The truncated quasi-support point set: proper right chain ideals plus the
/// zero ideal, each verified meet-prime in the truncated chain lattice, with
/// the open supports of the objects u^n for n < L.
struct QuasiSupport {
  std::vector<IdealDescriptor> points;
  bool all_meet_prime = false;
  std::vector<std::pair<int, std::vector<IdealDescriptor>>> opens;
};

QuasiSupport quasi_support_points(int L);

}  // namespace heis
