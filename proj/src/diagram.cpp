#include "heis/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace heis {

void Matching::canonicalize() {
  for (auto& pr : pairs)
    if (cyclic(pr.first) > cyclic(pr.second)) std::swap(pr.first, pr.second);
  std::sort(pairs.begin(), pairs.end(),
            [&](const auto& a, const auto& b) { return cyclic(a.first) < cyclic(b.first); });
}

void Matching::validate() const {
  std::set<BoundaryPoint> seen;
  for (const auto& pr : pairs) {
    for (const BoundaryPoint* p : {&pr.first, &pr.second}) {
      if (p->index < 1 ||
          p->index > (p->side == BoundaryPoint::Side::Bottom ? source.size() : target.size()))
        throw std::invalid_argument("boundary point out of range");
      if (!seen.insert(*p).second) throw std::invalid_argument("boundary point covered twice");
    }
    // each pair joins a source point (bottom up / top down) to a target point
    auto is_source = [&](const BoundaryPoint& p) {
      return (p.side == BoundaryPoint::Side::Bottom) == (letter(p) == Orientation::Up);
    };
    if (is_source(pr.first) == is_source(pr.second))
      throw std::invalid_argument("pair does not join a source point to a target point");
  }
  if (static_cast<int>(seen.size()) != source.size() + target.size())
    throw std::invalid_argument("matching does not cover every boundary point");
}

bool BasisDiagram::decoration_free() const {
  if (!bubbles.empty()) return false;
  return std::all_of(dots.begin(), dots.end(), [](int n) { return n == 0; });
}

BasisDiagram identity_diagram(const Word& w) {
  Matching m;
  m.source = w;
  m.target = w;
  for (int i = 1; i <= w.size(); ++i)
    m.pairs.push_back({{BoundaryPoint::Side::Bottom, i}, {BoundaryPoint::Side::Top, i}});
  m.canonicalize();
  return BasisDiagram{std::move(m), {}, {}};
}

std::vector<Matching> enumerate_matchings(const Word& x, const Word& y) {
  std::vector<BoundaryPoint> sources, targets;
  for (int i = 1; i <= x.size(); ++i)
    (x.at(i) == Orientation::Up ? sources : targets)
        .push_back({BoundaryPoint::Side::Bottom, i});
  for (int j = 1; j <= y.size(); ++j)
    (y.at(j) == Orientation::Down ? sources : targets)
        .push_back({BoundaryPoint::Side::Top, j});
  if (sources.size() != targets.size()) return {};

  std::vector<int> perm(targets.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Matching> out;
  do {
    Matching m;
    m.source = x;
    m.target = y;
    for (size_t k = 0; k < sources.size(); ++k)
      m.pairs.push_back({sources[k], targets[static_cast<size_t>(perm[k])]});
    m.canonicalize();
    out.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::pair<int, int>> forced_crossings(const Matching& m) {
  std::set<std::pair<int, int>> out;
  const int n = static_cast<int>(m.pairs.size());
  for (int a = 0; a < n; ++a) {
    int a1 = m.cyclic(m.pairs[static_cast<size_t>(a)].first);
    int a2 = m.cyclic(m.pairs[static_cast<size_t>(a)].second);
    for (int b = a + 1; b < n; ++b) {
      int b1 = m.cyclic(m.pairs[static_cast<size_t>(b)].first);
      int b2 = m.cyclic(m.pairs[static_cast<size_t>(b)].second);
      bool interleave = (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
      if (interleave) out.insert({a, b});
    }
  }
  return out;
}

StringProfile string_profile(const Matching& m, int string_index) {
  const auto& pr = m.pairs.at(static_cast<size_t>(string_index));
  const BoundaryPoint& p = pr.first;
  const BoundaryPoint& q = pr.second;
  StringProfile sp;
  if (p.side == q.side) {
    sp.kind = (p.side == BoundaryPoint::Side::Top) ? StringProfile::Kind::Cup
                                                   : StringProfile::Kind::Cap;
    // clockwise iff the up-oriented endpoint is left of the down-oriented one
    const BoundaryPoint& up_end = (m.letter(p) == Orientation::Up) ? p : q;
    const BoundaryPoint& down_end = (m.letter(p) == Orientation::Up) ? q : p;
    sp.rotation = (up_end.index < down_end.index) ? StringProfile::Rotation::Clockwise
                                                  : StringProfile::Rotation::Counterclockwise;
  } else {
    sp.kind = StringProfile::Kind::Bridge;
    sp.direction = (m.letter(p) == Orientation::Up) ? StringProfile::Direction::Upward
                                                    : StringProfile::Direction::Downward;
  }
  return sp;
}

bool is_restricted(const BasisDiagram& d) {
  if (!d.decoration_free()) return false;
  const int n = static_cast<int>(d.matching.pairs.size());
  std::vector<StringProfile> profiles;
  profiles.reserve(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    StringProfile sp = string_profile(d.matching, s);
    if ((sp.kind == StringProfile::Kind::Cup || sp.kind == StringProfile::Kind::Cap) &&
        sp.rotation == StringProfile::Rotation::Clockwise)
      return false;
    profiles.push_back(sp);
  }
  for (const auto& [a, b] : forced_crossings(d.matching)) {
    const StringProfile& pa = profiles[static_cast<size_t>(a)];
    const StringProfile& pb = profiles[static_cast<size_t>(b)];
    if (pa.kind == StringProfile::Kind::Bridge && pb.kind == StringProfile::Kind::Bridge &&
        pa.direction == pb.direction)
      return false;
  }
  return true;
}

std::vector<BasisDiagram> restricted_basis(const Word& x, const Word& y) {
  std::vector<BasisDiagram> out;
  for (Matching& m : enumerate_matchings(x, y)) {
    BasisDiagram d{std::move(m), {}, {}};
    if (is_restricted(d)) out.push_back(std::move(d));
  }
  return out;
}

int hom_dim_restricted(const Word& x, const Word& y) {
  return static_cast<int>(restricted_basis(x, y).size());
}

}  // namespace heis
