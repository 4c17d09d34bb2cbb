#pragma once

#include <string>
#include <vector>

#include "heis/diagram.hpp"
#include "heis/word.hpp"

namespace heis {

/// Elementary generators appearing in slices. S, C, Cp, D, Dp are the
/// atoms; the rest expand into composites of atoms.
enum class Gen : char {
  S,   // uu -> uu crossing
  Sp,  // dd -> dd crossing (derived)
  T,   // ud -> du crossing (derived)
  Tp,  // du -> ud crossing (derived)
  C,   // 1 -> du cup
  Cp,  // 1 -> ud cup
  D,   // ud -> 1 cap
  Dp,  // du -> 1 cap
  X,   // u -> u dot (derived: right curl)
  Xp,  // d -> d dot (derived)
};

Word gen_source(Gen g);
Word gen_target(Gen g);
std::string gen_name(Gen g);

/// One horizontal layer: an elementary generator flanked by identities.
struct Slice {
  Word left;
  Gen gen = Gen::S;
  Word right;

  Word source() const { return tensor(tensor(left, gen_source(gen)), right); }
  Word target() const { return tensor(tensor(left, gen_target(gen)), right); }

  friend bool operator==(const Slice&, const Slice&) = default;
};

/// Bottom-to-top sequence of slices; empty = identity.
using SliceWord = std::vector<Slice>;

/// Rewrites every derived generator into atoms {S, C, Cp, D, Dp}.
SliceWord expand_to_atoms(const SliceWord& slices);

/// Sweep-line factorization of a decoration-light basis diagram into
/// elementary slices realizing the same matching and forced crossings.
/// Dots are emitted as dot slices on bridge strings; diagrams with bubbles
/// or dotted cups/caps are reported unsupported.
SliceWord to_slices(const BasisDiagram& d);

/// Formal gluing of a slice word back into a basis diagram (dot-free
/// slices only); used for round-trip checks.
BasisDiagram diagram_from_slices(const SliceWord& slices, const Word& source);

BasisDiagram gen_diagram(Gen g);  // the basis diagram of a crossing/cup/cap atom

}  // namespace heis
