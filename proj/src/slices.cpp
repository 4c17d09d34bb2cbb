#include "heis/slices.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace heis {

namespace {
Word W(const std::string& s) { return Word::parse(s); }
}  // namespace

Word gen_source(Gen g) {
  switch (g) {
    case Gen::S: return W("uu");
    case Gen::Sp: return W("dd");
    case Gen::T: return W("ud");
    case Gen::Tp: return W("du");
    case Gen::C: case Gen::Cp: return W("1");
    case Gen::D: return W("ud");
    case Gen::Dp: return W("du");
    case Gen::X: return W("u");
    case Gen::Xp: return W("d");
  }
  throw std::logic_error("bad gen");
}

Word gen_target(Gen g) {
  switch (g) {
    case Gen::S: return W("uu");
    case Gen::Sp: return W("dd");
    case Gen::T: return W("du");
    case Gen::Tp: return W("ud");
    case Gen::C: return W("du");
    case Gen::Cp: return W("ud");
    case Gen::D: case Gen::Dp: return W("1");
    case Gen::X: return W("u");
    case Gen::Xp: return W("d");
  }
  throw std::logic_error("bad gen");
}

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::S: return "s";
    case Gen::Sp: return "s'";
    case Gen::T: return "t";
    case Gen::Tp: return "t'";
    case Gen::C: return "c";
    case Gen::Cp: return "c'";
    case Gen::D: return "d";
    case Gen::Dp: return "d'";
    case Gen::X: return "x";
    case Gen::Xp: return "x'";
  }
  throw std::logic_error("bad gen");
}

BasisDiagram gen_diagram(Gen g) {
  using Side = BoundaryPoint::Side;
  Matching m;
  m.source = gen_source(g);
  m.target = gen_target(g);
  switch (g) {
    case Gen::S: case Gen::Sp: case Gen::T: case Gen::Tp:
      m.pairs = {{{Side::Bottom, 1}, {Side::Top, 2}}, {{Side::Bottom, 2}, {Side::Top, 1}}};
      break;
    case Gen::C: case Gen::Cp:
      m.pairs = {{{Side::Top, 1}, {Side::Top, 2}}};
      break;
    case Gen::D: case Gen::Dp:
      m.pairs = {{{Side::Bottom, 1}, {Side::Bottom, 2}}};
      break;
    case Gen::X: case Gen::Xp: {
      m.pairs = {{{Side::Bottom, 1}, {Side::Top, 1}}};
      m.canonicalize();
      return BasisDiagram{std::move(m), {1}, {}};
    }
  }
  m.canonicalize();
  return BasisDiagram{std::move(m), {}, {}};
}

SliceWord expand_to_atoms(const SliceWord& slices) {
  SliceWord out;
  for (const Slice& sl : slices) {
    const Word& L = sl.left;
    const Word& R = sl.right;
    auto cat = [](const Word& a, const char* b) { return tensor(a, W(b)); };
    auto pre = [](const char* a, const Word& b) { return tensor(W(a), b); };
    switch (sl.gen) {
      case Gen::S: case Gen::C: case Gen::Cp: case Gen::D: case Gen::Dp:
        out.push_back(sl);
        break;
      case Gen::T: {
        SliceWord sub = {{L, Gen::C, pre("ud", R)},
                         {cat(L, "d"), Gen::S, pre("d", R)},
                         {cat(L, "du"), Gen::D, R}};
        for (auto& s : sub) out.push_back(std::move(s));
        break;
      }
      case Gen::Tp: {
        SliceWord sub = {{cat(L, "du"), Gen::Cp, R},
                         {cat(L, "d"), Gen::S, pre("d", R)},
                         {L, Gen::Dp, pre("ud", R)}};
        for (auto& s : sub) out.push_back(std::move(s));
        break;
      }
      case Gen::Sp: {
        SliceWord sub = expand_to_atoms({{L, Gen::C, pre("dd", R)},
                                         {cat(L, "d"), Gen::T, pre("d", R)},
                                         {cat(L, "dd"), Gen::D, R}});
        for (auto& s : sub) out.push_back(std::move(s));
        break;
      }
      case Gen::X: {
        SliceWord sub = {{cat(L, "u"), Gen::Cp, R},
                         {L, Gen::S, pre("d", R)},
                         {cat(L, "u"), Gen::D, R}};
        for (auto& s : sub) out.push_back(std::move(s));
        break;
      }
      case Gen::Xp: {
        SliceWord sub = expand_to_atoms({{L, Gen::C, pre("d", R)},
                                         {cat(L, "d"), Gen::X, pre("d", R)},
                                         {cat(L, "d"), Gen::D, R}});
        for (auto& s : sub) out.push_back(std::move(s));
        break;
      }
    }
  }
  return out;
}

namespace {

struct PeelString {
  BoundaryPoint a, b;
  int dots = 0;
};

Word range_word(const std::vector<Orientation>& v, int from, int to) {  // 1-based, inclusive
  std::vector<Orientation> out;
  for (int i = from; i <= to; ++i) out.push_back(v[static_cast<size_t>(i - 1)]);
  return Word{std::move(out)};
}

}  // namespace

SliceWord to_slices(const BasisDiagram& d) {
  using Side = BoundaryPoint::Side;
  if (!d.bubbles.empty())
    throw std::invalid_argument("to_slices: diagrams with bubbles are unsupported");

  std::vector<Orientation> bot = d.matching.source.letters();
  std::vector<Orientation> top = d.matching.target.letters();
  std::vector<PeelString> strings;
  for (size_t s = 0; s < d.matching.pairs.size(); ++s) {
    PeelString ps{d.matching.pairs[s].first, d.matching.pairs[s].second,
                  s < d.dots.size() ? d.dots[s] : 0};
    strings.push_back(ps);
  }
  std::set<std::pair<int, int>> crossings = forced_crossings(d.matching);
  std::vector<bool> alive(strings.size(), true);

  auto crosses = [&](int a, int b) {
    return crossings.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  auto erase_crossing = [&](int a, int b) {
    crossings.erase({std::min(a, b), std::max(a, b)});
  };
  auto has_crossing = [&](int s) {
    for (const auto& [a, b] : crossings)
      if (a == s || b == s) return true;
    return false;
  };
  // string holding a given frontier position, and which of its two ends
  auto end_at = [&](Side side, int idx) -> std::pair<int, BoundaryPoint*> {
    for (size_t s = 0; s < strings.size(); ++s) {
      if (!alive[s]) continue;
      if (strings[s].a.side == side && strings[s].a.index == idx)
        return {static_cast<int>(s), &strings[s].a};
      if (strings[s].b.side == side && strings[s].b.index == idx)
        return {static_cast<int>(s), &strings[s].b};
    }
    return {-1, nullptr};
  };

  SliceWord top_slices;  // first entry = topmost
  SliceWord bot_slices;  // first entry = bottommost

  auto shift_after_removal = [&](Side side, int j) {
    // two boundary letters at j, j+1 were consumed
    for (size_t s = 0; s < strings.size(); ++s) {
      if (!alive[s]) continue;
      for (BoundaryPoint* p : {&strings[s].a, &strings[s].b})
        if (p->side == side && p->index > j + 1) p->index -= 2;
    }
    auto& w = (side == Side::Top) ? top : bot;
    w.erase(w.begin() + (j - 1), w.begin() + (j + 1));
  };

  bool progress = true;
  while (progress) {
    progress = false;

    // cups with adjacent endpoints peel off the top
    for (size_t s = 0; s < strings.size() && !progress; ++s) {
      if (!alive[s]) continue;
      const PeelString& ps = strings[s];
      if (ps.a.side != Side::Top || ps.b.side != Side::Top) continue;
      int j = std::min(ps.a.index, ps.b.index);
      if (std::max(ps.a.index, ps.b.index) != j + 1) continue;
      if (has_crossing(static_cast<int>(s)))
        throw std::logic_error("adjacent cup with a crossing");
      if (ps.dots > 0)
        throw std::invalid_argument("to_slices: dotted cups are unsupported");
      Orientation lj = top[static_cast<size_t>(j - 1)];
      Gen g = (lj == Orientation::Down) ? Gen::C : Gen::Cp;
      top_slices.push_back({range_word(top, 1, j - 1), g,
                            range_word(top, j + 2, static_cast<int>(top.size()))});
      alive[s] = false;
      shift_after_removal(Side::Top, j);
      progress = true;
    }
    if (progress) continue;

    // crossings adjacent at the top
    for (int j = 1; j + 1 <= static_cast<int>(top.size()) && !progress; ++j) {
      auto [sa, pa] = end_at(Side::Top, j);
      auto [sb, pb] = end_at(Side::Top, j + 1);
      if (sa < 0 || sb < 0 || sa == sb || !crosses(sa, sb)) continue;
      Orientation la = top[static_cast<size_t>(j - 1)];
      Orientation lb = top[static_cast<size_t>(j)];
      Gen g;
      if (la == Orientation::Up && lb == Orientation::Up) g = Gen::S;
      else if (la == Orientation::Down && lb == Orientation::Down) g = Gen::Sp;
      else if (la == Orientation::Down) g = Gen::T;   // target "du"
      else g = Gen::Tp;                               // target "ud"
      top_slices.push_back({range_word(top, 1, j - 1), g,
                            range_word(top, j + 2, static_cast<int>(top.size()))});
      pa->index = j + 1;
      pb->index = j;
      std::swap(top[static_cast<size_t>(j - 1)], top[static_cast<size_t>(j)]);
      erase_crossing(sa, sb);
      progress = true;
    }
    if (progress) continue;

    // caps with adjacent endpoints peel off the bottom
    for (size_t s = 0; s < strings.size() && !progress; ++s) {
      if (!alive[s]) continue;
      const PeelString& ps = strings[s];
      if (ps.a.side != Side::Bottom || ps.b.side != Side::Bottom) continue;
      int i = std::min(ps.a.index, ps.b.index);
      if (std::max(ps.a.index, ps.b.index) != i + 1) continue;
      if (has_crossing(static_cast<int>(s)))
        throw std::logic_error("adjacent cap with a crossing");
      if (ps.dots > 0)
        throw std::invalid_argument("to_slices: dotted caps are unsupported");
      Orientation li = bot[static_cast<size_t>(i - 1)];
      Gen g = (li == Orientation::Up) ? Gen::D : Gen::Dp;
      bot_slices.push_back({range_word(bot, 1, i - 1), g,
                            range_word(bot, i + 2, static_cast<int>(bot.size()))});
      alive[s] = false;
      shift_after_removal(Side::Bottom, i);
      progress = true;
    }
    if (progress) continue;

    // crossings adjacent at the bottom
    for (int i = 1; i + 1 <= static_cast<int>(bot.size()) && !progress; ++i) {
      auto [sa, pa] = end_at(Side::Bottom, i);
      auto [sb, pb] = end_at(Side::Bottom, i + 1);
      if (sa < 0 || sb < 0 || sa == sb || !crosses(sa, sb)) continue;
      Orientation la = bot[static_cast<size_t>(i - 1)];
      Orientation lb = bot[static_cast<size_t>(i)];
      Gen g;
      if (la == Orientation::Up && lb == Orientation::Up) g = Gen::S;
      else if (la == Orientation::Down && lb == Orientation::Down) g = Gen::Sp;
      else if (la == Orientation::Up) g = Gen::T;      // source "ud"
      else g = Gen::Tp;                                // source "du"
      bot_slices.push_back({range_word(bot, 1, i - 1), g,
                            range_word(bot, i + 2, static_cast<int>(bot.size()))});
      pa->index = i + 1;
      pb->index = i;
      std::swap(bot[static_cast<size_t>(i - 1)], bot[static_cast<size_t>(i)]);
      erase_crossing(sa, sb);
      progress = true;
    }
  }

  if (!crossings.empty()) throw std::logic_error("to_slices: unpeeled crossings remain");
  if (bot != top) throw std::logic_error("to_slices: frontier mismatch");
  SliceWord dot_slices;
  for (size_t s = 0; s < strings.size(); ++s) {
    if (!alive[s]) continue;
    const PeelString& ps = strings[s];
    if (ps.a.side == ps.b.side || ps.a.index != ps.b.index)
      throw std::logic_error("to_slices: non-identity residue");
    int col = ps.a.side == Side::Bottom ? ps.a.index : ps.b.index;
    Orientation lo = bot[static_cast<size_t>(col - 1)];
    for (int k = 0; k < ps.dots; ++k)
      dot_slices.push_back({range_word(bot, 1, col - 1),
                            lo == Orientation::Up ? Gen::X : Gen::Xp,
                            range_word(bot, col + 1, static_cast<int>(bot.size()))});
  }

  SliceWord out = std::move(bot_slices);
  for (auto& sl : dot_slices) out.push_back(std::move(sl));
  for (auto it = top_slices.rbegin(); it != top_slices.rend(); ++it) out.push_back(*it);
  return out;
}

BasisDiagram diagram_from_slices(const SliceWord& slices, const Word& source) {
  using Side = BoundaryPoint::Side;
  struct End {
    bool on_frontier = false;
    int index = 0;  // source index or frontier position
  };
  struct Str {
    End a, b;
  };
  std::vector<Str> strings;
  std::vector<Orientation> frontier = source.letters();
  for (int i = 1; i <= source.size(); ++i)
    strings.push_back({{false, i}, {true, i}});
  std::map<std::pair<int, int>, int> cross_count;
  auto add_cross = [&](int a, int b, int n) {
    if (n) cross_count[{std::min(a, b), std::max(a, b)}] += n;
  };
  auto frontier_end = [&](int pos) -> std::pair<int, End*> {
    for (size_t s = 0; s < strings.size(); ++s) {
      if (strings[s].a.on_frontier && strings[s].a.index == pos)
        return {static_cast<int>(s), &strings[s].a};
      if (strings[s].b.on_frontier && strings[s].b.index == pos)
        return {static_cast<int>(s), &strings[s].b};
    }
    throw std::logic_error("frontier position unmatched");
  };

  for (const Slice& sl : slices) {
    if (sl.source().letters() != frontier)
      throw std::invalid_argument("slice source does not match frontier");
    int p = sl.left.size() + 1;
    switch (sl.gen) {
      case Gen::S: case Gen::Sp: case Gen::T: case Gen::Tp: {
        auto [sa, ea] = frontier_end(p);
        auto [sb, eb] = frontier_end(p + 1);
        if (sa == sb) throw std::invalid_argument("self-crossing slice word");
        ea->index = p + 1;
        eb->index = p;
        std::swap(frontier[static_cast<size_t>(p - 1)], frontier[static_cast<size_t>(p)]);
        add_cross(sa, sb, 1);
        break;
      }
      case Gen::C: case Gen::Cp: {
        for (auto& st : strings)
          for (End* e : {&st.a, &st.b})
            if (e->on_frontier && e->index >= p) e->index += 2;
        strings.push_back({{true, p}, {true, p + 1}});
        auto tgt = gen_target(sl.gen).letters();
        frontier.insert(frontier.begin() + (p - 1), tgt.begin(), tgt.end());
        break;
      }
      case Gen::D: case Gen::Dp: {
        auto [sa, ea] = frontier_end(p);
        auto [sb, eb] = frontier_end(p + 1);
        if (sa == sb)
          throw std::invalid_argument("slice word closes a bubble; unsupported");
        // merge sb into sa: sa keeps its other end, gains sb's other end
        End other_a = (ea == &strings[static_cast<size_t>(sa)].a)
                          ? strings[static_cast<size_t>(sa)].b
                          : strings[static_cast<size_t>(sa)].a;
        End other_b = (eb == &strings[static_cast<size_t>(sb)].a)
                          ? strings[static_cast<size_t>(sb)].b
                          : strings[static_cast<size_t>(sb)].a;
        if (cross_count.count({std::min(sa, sb), std::max(sa, sb)}))
          throw std::invalid_argument("slice word creates a self-crossing");
        strings[static_cast<size_t>(sa)] = {other_a, other_b};
        // transfer sb's crossings to sa, then retire sb as a degenerate stub
        std::map<std::pair<int, int>, int> updated;
        for (const auto& [ab, n] : cross_count) {
          auto [x, y] = ab;
          if (x == sb) x = sa;
          if (y == sb) y = sa;
          if (x == y) throw std::invalid_argument("slice word creates a self-crossing");
          updated[{std::min(x, y), std::max(x, y)}] += n;
        }
        cross_count = std::move(updated);
        strings[static_cast<size_t>(sb)] = {{false, -1}, {false, -1}};
        for (auto& st : strings)
          for (End* e : {&st.a, &st.b})
            if (e->on_frontier && e->index > p + 1) e->index -= 2;
        frontier.erase(frontier.begin() + (p - 1), frontier.begin() + (p + 1));
        break;
      }
      case Gen::X: case Gen::Xp:
        throw std::invalid_argument("diagram_from_slices: dot slices unsupported");
    }
  }

  Matching m;
  m.source = source;
  m.target = Word{frontier};
  for (const Str& st : strings) {
    if (!st.a.on_frontier && st.a.index == -1) continue;  // retired
    auto pt = [&](const End& e) {
      return e.on_frontier ? BoundaryPoint{Side::Top, e.index}
                           : BoundaryPoint{Side::Bottom, e.index};
    };
    m.pairs.push_back({pt(st.a), pt(st.b)});
  }
  m.canonicalize();
  m.validate();
  for (const auto& [ab, n] : cross_count)
    if (n > 1) throw std::invalid_argument("slice word is not a reduced lift");
  auto forced = forced_crossings(m);
  // map string ids: pairs were re-sorted; rebuild counts keyed by canonical ids
  // by recomputing which original string is which canonical pair
  // (cheap: compare endpoint sets)
  if (static_cast<int>(cross_count.size()) != static_cast<int>(forced.size()))
    throw std::invalid_argument("slice word crossings disagree with the matching");
  return BasisDiagram{std::move(m), {}, {}};
}

}  // namespace heis
