#pragma once

#include <compare>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "heis/word.hpp"

namespace heis {

/// A point on the boundary of a diagram, 1-based within its boundary word.
struct BoundaryPoint {
  enum class Side : char { Bottom = 'B', Top = 'T' };
  Side side = Side::Bottom;
  int index = 0;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
  friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;
};

/// Position in the cyclic boundary order: bottom left to right, then top
/// right to left.
inline int cyclic_pos(const BoundaryPoint& p, int bottom_len, int top_len) {
  return p.side == BoundaryPoint::Side::Bottom ? p.index - 1
                                               : bottom_len + (top_len - p.index);
}

/// An (X,Y)-matching: a bijection pairing up-inputs and down-outputs with
/// down-inputs and up-outputs. Pairs are stored canonically: each pair
/// ordered by cyclic position, pairs sorted by their minimal cyclic
/// position (the string's canonical name).
struct Matching {
  Word source;
  Word target;
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> pairs;

  int cyclic(const BoundaryPoint& p) const {
    return cyclic_pos(p, source.size(), target.size());
  }
  Orientation letter(const BoundaryPoint& p) const {
    return p.side == BoundaryPoint::Side::Bottom ? source.at(p.index)
                                                 : target.at(p.index);
  }

  void canonicalize();
  void validate() const;  // throws std::invalid_argument on a broken matching

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

/// The four string types, with orientation data.
struct StringProfile {
  enum class Kind : char { Cup, Cap, Bridge, Bubble };
  enum class Rotation : char { Clockwise, Counterclockwise };
  enum class Direction : char { Upward, Downward };

  Kind kind = Kind::Bridge;
  Rotation rotation = Rotation::Counterclockwise;  // cups, caps, bubbles
  Direction direction = Direction::Upward;         // bridges
};

/// A standard-basis morphism: a matching plus per-string dot counts and a
/// clockwise-bubble multiset. Crossings are not stored; the reduced lift's
/// crossing set is forced by the matching.
struct BasisDiagram {
  Matching matching;
  std::vector<int> dots;    // indexed by string (pair index); may be empty = all 0
  std::vector<int> bubbles;  // sorted multiset of dot labels on clockwise bubbles

  bool decoration_free() const;

  friend bool operator==(const BasisDiagram&, const BasisDiagram&) = default;
  friend auto operator<=>(const BasisDiagram&, const BasisDiagram&) = default;
};

BasisDiagram identity_diagram(const Word& w);

/// All (x,y)-matchings in deterministic (lexicographic) order. Empty if the
/// bijection's two sides differ in size.
std::vector<Matching> enumerate_matchings(const Word& x, const Word& y);

/// String pairs whose endpoints interleave in the cyclic boundary order;
/// this is the crossing set of any reduced lift.
std::set<std::pair<int, int>> forced_crossings(const Matching& m);

StringProfile string_profile(const Matching& m, int string_index);

/// Restriction predicate: no decorations, no clockwise cups
/// or caps, bridge crossings only between opposite orientations.
bool is_restricted(const BasisDiagram& d);

/// All restricted, decoration-free diagrams x -> y, lexicographic in the
/// matching.
std::vector<BasisDiagram> restricted_basis(const Word& x, const Word& y);

int hom_dim_restricted(const Word& x, const Word& y);

}  // namespace heis
