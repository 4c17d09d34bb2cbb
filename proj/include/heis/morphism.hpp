#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "heis/diagram.hpp"
#include "heis/word.hpp"

namespace heis {

/// A layer fed to the engine fails the restriction predicate.
struct NonRestrictedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A terminal diagram of reduce fails the restriction predicate. Closure of
/// the subcategory says this must never fire.
struct InternalNonClosure : std::logic_error {
  using std::logic_error::logic_error;
};

/// The reduction reached a configuration outside the implemented case
/// analysis (also a defect if raised on restricted inputs).
struct UnsupportedReduction : std::logic_error {
  using std::logic_error::logic_error;
};

/// Integer combination of basis diagrams with a fixed (source, target).
struct Morphism {
  Word source;
  Word target;
  std::map<BasisDiagram, long long> terms;  // nonzero coefficients only

  static Morphism zero(Word src, Word tgt);
  static Morphism identity(const Word& w);
  static Morphism single(BasisDiagram d, long long coeff = 1);

  bool is_zero() const { return terms.empty(); }
  void add_term(const BasisDiagram& d, long long coeff);

  Morphism& operator+=(const Morphism& other);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(const Morphism& a, const Morphism& b);
  friend Morphism operator*(long long k, const Morphism& m);

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// A composable pair of basis diagrams, upper after lower.
struct GluedDiagram {
  BasisDiagram lower;  // X -> Y
  BasisDiagram upper;  // Y -> Z
};

GluedDiagram glue(const BasisDiagram& upper, const BasisDiagram& lower);

/// String-analysis reduction of the glued pair to an integer combination of
/// restricted basis diagrams.
Morphism reduce(const GluedDiagram& gd);

Morphism compose(const Morphism& g, const Morphism& f);   // g after f
Morphism hcompose(const Morphism& a, const Morphism& b);  // a tensor b

/// Coefficientwise reduction modulo a prime, for experiments over F_p.
Morphism reduce_mod(Morphism m, long long p);

/// Semantic evaluation through the symmetric-group oracle; equality is
/// checked at every base level 0..max_level.
bool morphisms_equal(const Morphism& f, const Morphism& g, int max_level = 4);

/// Finite ordered direct sum of words.
using SumObject = std::vector<Word>;

/// Matrix of morphisms; entry (r, c) maps source[c] to target[r].
struct MorphismMatrix {
  SumObject source;
  SumObject target;
  std::vector<std::vector<Morphism>> entries;

  static MorphismMatrix identity(const SumObject& obj);
  Morphism& at(size_t r, size_t c) { return entries[r][c]; }
  const Morphism& at(size_t r, size_t c) const { return entries[r][c]; }
};

MorphismMatrix matrix_compose(const MorphismMatrix& a, const MorphismMatrix& b);
bool matrix_is_identity(const MorphismMatrix& m);

/// The isomorphism du ~ ud + 1: forward [t c] : ud + 1 -> du and backward
/// [t' ; d'] : du -> ud + 1, optionally framed by identity words.
std::pair<MorphismMatrix, MorphismMatrix> heisenberg_iso(const Word& left = {},
                                                         const Word& right = {});

/// Atom morphisms usable in the restricted fragment plus derived crossings.
Morphism gen_c();   // 1 -> du
Morphism gen_dp();  // du -> 1
Morphism gen_t();   // ud -> du
Morphism gen_tp();  // du -> ud

struct Decomposition {
  std::map<Simple, long long> multiplicities;
  SumObject summands;
  MorphismMatrix forward;   // w -> sum of simples
  MorphismMatrix backward;  // sum of simples -> w
};

/// Iterated rewriting of the leftmost du substring until every summand is
/// u^i d^j; the two matrices are mutually inverse.
Decomposition decompose_object(const Word& w);

}  // namespace heis
