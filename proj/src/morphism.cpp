#include "heis/morphism.hpp"

#include <algorithm>
#include <set>

#include "heis/oracle.hpp"
#include "heis/slices.hpp"

namespace heis {

Morphism Morphism::zero(Word src, Word tgt) {
  return Morphism{std::move(src), std::move(tgt), {}};
}

Morphism Morphism::identity(const Word& w) {
  return single(identity_diagram(w));
}

Morphism Morphism::single(BasisDiagram d, long long coeff) {
  Morphism m;
  m.source = d.matching.source;
  m.target = d.matching.target;
  if (coeff != 0) m.terms.emplace(std::move(d), coeff);
  return m;
}

void Morphism::add_term(const BasisDiagram& d, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(d, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

Morphism& Morphism::operator+=(const Morphism& other) {
  if (source != other.source || target != other.target)
    throw std::invalid_argument("morphism sum type mismatch");
  for (const auto& [d, c] : other.terms) add_term(d, c);
  return *this;
}

Morphism operator-(const Morphism& a, const Morphism& b) {
  Morphism out = a;
  out += -1 * b;
  return out;
}

Morphism operator*(long long k, const Morphism& m) {
  Morphism out{m.source, m.target, {}};
  if (k == 0) return out;
  for (const auto& [d, c] : m.terms) out.terms.emplace(d, k * c);
  return out;
}

GluedDiagram glue(const BasisDiagram& upper, const BasisDiagram& lower) {
  if (lower.matching.target != upper.matching.source)
    throw std::invalid_argument("glue: middle words differ");
  return GluedDiagram{lower, upper};
}

namespace {

using Side = BoundaryPoint::Side;

/// Mutable reduction state: the pieces are the original strings of the two
/// layers; junction links connect piece ends across (or, after surgery,
/// within) layers; the crossing set is mutated as relations are applied.
struct RState {
  struct Piece {
    int layer = 0;  // 0 lower, 1 upper
    BoundaryPoint a, b;
    bool alive = true;
  };
  Word x, y, z;
  std::vector<Piece> pieces;
  std::vector<int> partner;  // end index 2p+k -> partner end, -1 outer
  std::vector<int> jpos;     // Y position of the junction; 0 new, -1 outer
  std::set<std::pair<int, int>> crossings;  // piece pairs, min first

  BoundaryPoint end_point(int e) const {
    const Piece& p = pieces[static_cast<size_t>(e / 2)];
    return (e % 2 == 0) ? p.a : p.b;
  }
};

RState build_state(const GluedDiagram& gd) {
  RState st;
  st.x = gd.lower.matching.source;
  st.y = gd.lower.matching.target;
  st.z = gd.upper.matching.target;
  const auto& lo = gd.lower.matching.pairs;
  const auto& up = gd.upper.matching.pairs;
  for (const auto& pr : lo) st.pieces.push_back({0, pr.first, pr.second, true});
  for (const auto& pr : up) st.pieces.push_back({1, pr.first, pr.second, true});
  const int nlo = static_cast<int>(lo.size());
  st.partner.assign(st.pieces.size() * 2, -1);
  st.jpos.assign(st.pieces.size() * 2, -1);

  auto find_end = [&](int layer, Side side, int idx) {
    int from = layer == 0 ? 0 : nlo;
    int to = layer == 0 ? nlo : static_cast<int>(st.pieces.size());
    for (int p = from; p < to; ++p)
      for (int k = 0; k < 2; ++k) {
        BoundaryPoint bp = st.end_point(2 * p + k);
        if (bp.side == side && bp.index == idx) return 2 * p + k;
      }
    throw std::logic_error("interface point unmatched");
  };
  for (int j = 1; j <= st.y.size(); ++j) {
    int e1 = find_end(0, Side::Top, j);
    int e2 = find_end(1, Side::Bottom, j);
    st.partner[static_cast<size_t>(e1)] = e2;
    st.partner[static_cast<size_t>(e2)] = e1;
    st.jpos[static_cast<size_t>(e1)] = j;
    st.jpos[static_cast<size_t>(e2)] = j;
  }
  for (const auto& [a, b] : forced_crossings(gd.lower.matching))
    st.crossings.insert({a, b});
  for (const auto& [a, b] : forced_crossings(gd.upper.matching))
    st.crossings.insert({a + nlo, b + nlo});
  return st;
}

struct StringInfo {
  std::vector<int> strid;   // per piece, -1 if dead
  std::vector<bool> closed;  // per string
};

StringInfo trace_strings(const RState& st) {
  StringInfo si;
  si.strid.assign(st.pieces.size(), -1);
  for (size_t p = 0; p < st.pieces.size(); ++p) {
    if (!st.pieces[p].alive || si.strid[p] >= 0) continue;
    int s = static_cast<int>(si.closed.size());
    bool has_outer = false;
    std::vector<int> stack = {static_cast<int>(p)};
    si.strid[p] = s;
    while (!stack.empty()) {
      int q = stack.back();
      stack.pop_back();
      for (int k = 0; k < 2; ++k) {
        int e = st.partner[static_cast<size_t>(2 * q + k)];
        if (e < 0) {
          has_outer = true;
          continue;
        }
        int r = e / 2;
        if (si.strid[static_cast<size_t>(r)] < 0) {
          si.strid[static_cast<size_t>(r)] = s;
          stack.push_back(r);
        }
      }
    }
    si.closed.push_back(!has_outer);
  }
  return si;
}

bool is_cup_piece(const RState& st, int p) {
  const auto& pc = st.pieces[static_cast<size_t>(p)];
  return pc.layer == 0 && pc.a.side == Side::Top && pc.b.side == Side::Top;
}

bool is_cap_piece(const RState& st, int p) {
  const auto& pc = st.pieces[static_cast<size_t>(p)];
  return pc.layer == 1 && pc.a.side == Side::Bottom && pc.b.side == Side::Bottom;
}

/// Ways from piece a to piece b inside one string, as the sequence of exit
/// ends whose junctions are traversed; one way for open strings, up to two
/// for closed ones. a == b yields the empty way.
std::vector<std::vector<int>> junction_paths(const RState& st, int a, int b) {
  std::vector<std::vector<int>> out;
  if (a == b) {
    out.push_back({});
    return out;
  }
  for (int k0 = 0; k0 < 2; ++k0) {
    std::vector<int> js;
    int exit_end = 2 * a + k0;
    bool found = false;
    while (true) {
      int e2 = st.partner[static_cast<size_t>(exit_end)];
      if (e2 < 0) break;
      js.push_back(exit_end);
      int q = e2 / 2;
      if (q == b) {
        found = true;
        break;
      }
      if (q == a) break;
      exit_end = e2 ^ 1;
    }
    if (found) out.push_back(js);
  }
  return out;
}

void emit_terminal(const RState& st, long long coeff, Morphism& acc,
                   const StringInfo& si) {
  // remaining crossing-free closed strings were deleted; anything left is
  // outside the case analysis
  for (size_t p = 0; p < st.pieces.size(); ++p)
    if (st.pieces[p].alive && si.closed[static_cast<size_t>(si.strid[p])])
      throw UnsupportedReduction("closed string survived reduction");

  // trace each open string between its two outer endpoints
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> spans;  // per string id
  std::vector<int> span_string;
  std::set<int> done;
  auto outer_point = [&](int e) {
    BoundaryPoint bp = st.end_point(e);
    // lower bottoms live on X, upper tops on Z; junction ends never reach here
    return bp;
  };
  for (size_t p = 0; p < st.pieces.size(); ++p) {
    if (!st.pieces[p].alive) continue;
    for (int k = 0; k < 2; ++k) {
      int e0 = 2 * static_cast<int>(p) + k;
      if (st.partner[static_cast<size_t>(e0)] != -1) continue;
      int s = si.strid[p];
      if (done.count(s)) continue;
      done.insert(s);
      int e = e0;
      while (true) {
        int other = e ^ 1;
        int nxt = st.partner[static_cast<size_t>(other)];
        if (nxt < 0) {
          spans.push_back({outer_point(e0), outer_point(other)});
          span_string.push_back(s);
          break;
        }
        e = nxt;
      }
    }
  }

  Matching m;
  m.source = st.x;
  m.target = st.z;
  m.pairs = spans;
  m.canonicalize();
  m.validate();

  // residual crossings are single per string pair; the emitted basis
  // diagram carries exactly the forced crossings of its matching, so only
  // excess (even) crossings would invalidate emission, and step 5 has
  // already ruled those out
  std::set<std::pair<int, int>> seen_pairs;
  for (const auto& [p, q] : st.crossings) {
    int sp = si.strid[static_cast<size_t>(p)];
    int sq = si.strid[static_cast<size_t>(q)];
    if (!seen_pairs.insert({std::min(sp, sq), std::max(sp, sq)}).second)
      throw UnsupportedReduction("string pair crossing twice at emission");
  }

  BasisDiagram bd{std::move(m), {}, {}};
  if (!is_restricted(bd))
    throw InternalNonClosure("reduction emitted a non-restricted diagram");
  acc.add_term(bd, coeff);
}

void reduce_state(RState st, long long coeff, Morphism& acc) {
  while (true) {
    StringInfo si = trace_strings(st);

    // 1. crossing within one string: counterclockwise curl, term vanishes
    for (const auto& [p, q] : st.crossings)
      if (si.strid[static_cast<size_t>(p)] == si.strid[static_cast<size_t>(q)])
        return;

    // 2. lower cup joined to upper cap inside an open string: zero
    for (size_t p = 0; p < st.pieces.size(); ++p) {
      if (!st.pieces[p].alive || !is_cup_piece(st, static_cast<int>(p))) continue;
      if (si.closed[static_cast<size_t>(si.strid[p])]) continue;
      for (int k = 0; k < 2; ++k) {
        int e = st.partner[static_cast<size_t>(2 * p + k)];
        if (e >= 0 && is_cap_piece(st, e / 2)) return;
      }
    }

    // 4. delete crossing-free closed strings (counterclockwise circles)
    {
      std::vector<bool> has_cross(si.closed.size(), false);
      for (const auto& [p, q] : st.crossings) {
        has_cross[static_cast<size_t>(si.strid[static_cast<size_t>(p)])] = true;
        has_cross[static_cast<size_t>(si.strid[static_cast<size_t>(q)])] = true;
      }
      bool removed = false;
      for (size_t p = 0; p < st.pieces.size(); ++p) {
        int s = st.pieces[p].alive ? si.strid[p] : -1;
        if (s >= 0 && si.closed[static_cast<size_t>(s)] &&
            !has_cross[static_cast<size_t>(s)]) {
          st.pieces[p].alive = false;
          removed = true;
        }
      }
      if (removed) continue;
    }

    // 5. resolve one doubly-crossing string pair: walk the bigon between
    // the two crossings along both strings and read the two interface
    // letters traversed; d left of u means the crossings cancel, u left of
    // d means an identity child plus a turnback child with coefficient -1
    {
      std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_pair;
      for (const auto& [p, q] : st.crossings) {
        int sp = si.strid[static_cast<size_t>(p)];
        int sq = si.strid[static_cast<size_t>(q)];
        by_pair[{std::min(sp, sq), std::max(sp, sq)}].push_back({p, q});
      }
      bool resolved = false;
      bool pending = false;
      for (const auto& [ss, cl] : by_pair) {
        if (cl.size() < 2) continue;
        pending = true;
        if (cl.size() > 2) continue;
        int x1 = cl[0].first, y1 = cl[0].second;
        int x2 = cl[1].first, y2 = cl[1].second;
        if (si.strid[static_cast<size_t>(x1)] != ss.first) std::swap(x1, y1);
        if (si.strid[static_cast<size_t>(x2)] != ss.first) std::swap(x2, y2);
        for (const auto& ps : junction_paths(st, x1, x2)) {
          for (const auto& pt : junction_paths(st, y1, y2)) {
            // interface traversals: junction ends at original positions
            std::vector<std::pair<int, int>> trav;  // (position, exit end)
            size_t from_s = 0;
            for (int e : ps)
              if (st.jpos[static_cast<size_t>(e)] > 0) {
                trav.push_back({st.jpos[static_cast<size_t>(e)], e});
                ++from_s;
              }
            for (int e : pt)
              if (st.jpos[static_cast<size_t>(e)] > 0)
                trav.push_back({st.jpos[static_cast<size_t>(e)], e});
            if (trav.empty()) {
              // empty bigon: the two crossings cancel by planar isotopy
              st.crossings.erase(cl[0]);
              st.crossings.erase(cl[1]);
              resolved = true;
              break;
            }
            if (trav.size() != 2) continue;
            Orientation la = st.y.at(trav[0].first);
            Orientation lb = st.y.at(trav[1].first);
            if (la == lb) continue;
            Orientation left = (trav[0].first < trav[1].first) ? la : lb;
            if (left == Orientation::Up && from_s != 1)
              continue;  // both traversals on one strand: no turnback shape
            st.crossings.erase(cl[0]);
            st.crossings.erase(cl[1]);
            if (left == Orientation::Up) {
              // anti pattern: identity child plus turnback child
              reduce_state(st, coeff, acc);
              int jp = trav[0].first, jq = trav[1].first;
              // lower ends of the two junctions join into a cap, upper ends
              // into a cup
              auto lower_end = [&](int e) {
                int e2 = st.partner[static_cast<size_t>(e)];
                return st.pieces[static_cast<size_t>(e / 2)].layer == 0 ? e : e2;
              };
              int ep1 = lower_end(trav[0].second);
              int eq1 = lower_end(trav[1].second);
              int ep2 = st.partner[static_cast<size_t>(ep1)];
              int eq2 = st.partner[static_cast<size_t>(eq1)];
              int p1 = ep1 / 2, q1 = eq1 / 2, p2 = ep2 / 2, q2 = eq2 / 2;
              st.partner[static_cast<size_t>(ep1)] = eq1;
              st.partner[static_cast<size_t>(eq1)] = ep1;
              st.partner[static_cast<size_t>(ep2)] = eq2;
              st.partner[static_cast<size_t>(eq2)] = ep2;
              for (int e : {ep1, eq1, ep2, eq2})
                st.jpos[static_cast<size_t>(e)] = 0;
              // the reconnection arcs cross every strand still passing
              // through the interface strictly between the two junctions;
              // toggling keeps the parity right for pieces with several
              // interface ends in that span
              int lo_j = std::min(jp, jq), hi_j = std::max(jp, jq);
              auto toggle = [&](int r, int t) {
                auto key = std::make_pair(std::min(r, t), std::max(r, t));
                if (!st.crossings.erase(key)) st.crossings.insert(key);
              };
              for (size_t e = 0; e < st.partner.size(); ++e) {
                int j = st.jpos[e];
                if (j <= lo_j || j >= hi_j || st.partner[e] < 0) continue;
                int r = static_cast<int>(e) / 2;
                if (!st.pieces[static_cast<size_t>(r)].alive) continue;
                if (st.pieces[static_cast<size_t>(r)].layer == 0)
                  toggle(r, r == p1 ? q1 : p1);
                else
                  toggle(r, r == p2 ? q2 : p2);
              }
              coeff = -coeff;
            }
            resolved = true;
            break;
          }
          if (resolved) break;
        }
        if (resolved) break;
      }
      if (resolved) continue;
      if (pending)
        throw UnsupportedReduction(
            "doubly-crossing pair outside the implemented bigon patterns");
    }

    emit_terminal(st, coeff, acc, si);
    return;
  }
}

}  // namespace

Morphism reduce(const GluedDiagram& gd) {
  if (!is_restricted(gd.lower) || !is_restricted(gd.upper))
    throw NonRestrictedInput("reduce requires restricted layers");
  Morphism acc = Morphism::zero(gd.lower.matching.source, gd.upper.matching.target);
  reduce_state(build_state(gd), 1, acc);
  return acc;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.target != g.source) throw std::invalid_argument("compose type mismatch");
  Morphism acc = Morphism::zero(f.source, g.target);
  for (const auto& [df, cf] : f.terms)
    for (const auto& [dg, cg] : g.terms) {
      Morphism r = reduce(glue(dg, df));
      for (const auto& [d, c] : r.terms) acc.add_term(d, c * cf * cg);
    }
  return acc;
}

Morphism hcompose(const Morphism& a, const Morphism& b) {
  Morphism acc = Morphism::zero(tensor(a.source, b.source), tensor(a.target, b.target));
  const int sb = a.source.size();
  const int tb = a.target.size();
  for (const auto& [da, ca] : a.terms)
    for (const auto& [db, cb] : b.terms) {
      Matching m;
      m.source = acc.source;
      m.target = acc.target;
      m.pairs = da.matching.pairs;
      for (auto pr : db.matching.pairs) {
        for (BoundaryPoint* p : {&pr.first, &pr.second})
          p->index += (p->side == Side::Bottom) ? sb : tb;
        m.pairs.push_back(pr);
      }
      m.canonicalize();
      acc.add_term(BasisDiagram{std::move(m), {}, {}}, ca * cb);
    }
  return acc;
}

Morphism reduce_mod(Morphism m, long long p) {
  for (auto it = m.terms.begin(); it != m.terms.end();) {
    long long c = ((it->second % p) + p) % p;
    if (c == 0)
      it = m.terms.erase(it);
    else
      (it++)->second = c;
  }
  return m;
}

bool morphisms_equal(const Morphism& f, const Morphism& g, int max_level) {
  if (f.source != g.source || f.target != g.target) return false;
  for (int n = 0; n <= max_level; ++n) {
    auto eval = [&](const Morphism& m) {
      auto mat = oracle::SparseMat::zero(oracle::space_for(m.target, n).dim,
                                         oracle::space_for(m.source, n).dim);
      for (const auto& [d, c] : m.terms)
        mat = oracle::mat_add(mat, oracle::mat_scale(oracle::eval_diagram(d, n), c));
      return mat;
    };
    if (!(eval(f) == eval(g))) return false;
  }
  return true;
}

MorphismMatrix MorphismMatrix::identity(const SumObject& obj) {
  MorphismMatrix m;
  m.source = obj;
  m.target = obj;
  m.entries.resize(obj.size());
  for (size_t r = 0; r < obj.size(); ++r)
    for (size_t c = 0; c < obj.size(); ++c)
      m.entries[r].push_back(r == c ? Morphism::identity(obj[r])
                                    : Morphism::zero(obj[c], obj[r]));
  return m;
}

MorphismMatrix matrix_compose(const MorphismMatrix& a, const MorphismMatrix& b) {
  if (a.source != b.target) throw std::invalid_argument("matrix compose mismatch");
  MorphismMatrix out;
  out.source = b.source;
  out.target = a.target;
  out.entries.resize(a.target.size());
  for (size_t r = 0; r < a.target.size(); ++r)
    for (size_t c = 0; c < b.source.size(); ++c) {
      Morphism acc = Morphism::zero(b.source[c], a.target[r]);
      for (size_t k = 0; k < a.source.size(); ++k)
        acc += compose(a.at(r, k), b.at(k, c));
      out.entries[r].push_back(std::move(acc));
    }
  return out;
}

bool matrix_is_identity(const MorphismMatrix& m) {
  if (m.source != m.target) return false;
  for (size_t r = 0; r < m.target.size(); ++r)
    for (size_t c = 0; c < m.source.size(); ++c) {
      const Morphism& e = m.at(r, c);
      if (r == c ? !(e == Morphism::identity(m.source[c])) : !e.is_zero())
        return false;
    }
  return true;
}

Morphism gen_c() { return Morphism::single(gen_diagram(Gen::C)); }
Morphism gen_dp() { return Morphism::single(gen_diagram(Gen::Dp)); }
Morphism gen_t() { return Morphism::single(gen_diagram(Gen::T)); }
Morphism gen_tp() { return Morphism::single(gen_diagram(Gen::Tp)); }

std::pair<MorphismMatrix, MorphismMatrix> heisenberg_iso(const Word& left,
                                                         const Word& right) {
  auto frame = [&](const Morphism& m) {
    return hcompose(Morphism::identity(left), hcompose(m, Morphism::identity(right)));
  };
  Word ud = tensor(tensor(left, Word::parse("ud")), right);
  Word du = tensor(tensor(left, Word::parse("du")), right);
  Word unit = tensor(left, right);

  MorphismMatrix fwd;  // [t c] : ud + 1 -> du
  fwd.source = {ud, unit};
  fwd.target = {du};
  fwd.entries = {{frame(gen_t()), frame(gen_c())}};

  MorphismMatrix bwd;  // [t' ; d'] : du -> ud + 1
  bwd.source = {du};
  bwd.target = {ud, unit};
  bwd.entries = {{frame(gen_tp())}, {frame(gen_dp())}};
  return {fwd, bwd};
}

Decomposition decompose_object(const Word& w) {
  Decomposition out;
  out.summands = {w};
  out.forward = MorphismMatrix::identity({w});
  out.backward = MorphismMatrix::identity({w});

  while (true) {
    size_t which = out.summands.size();
    int pos = -1;
    for (size_t s = 0; s < out.summands.size(); ++s) {
      const Word& cur = out.summands[s];
      for (int i = 1; i + 1 <= cur.size(); ++i)
        if (cur.at(i) == Orientation::Down && cur.at(i + 1) == Orientation::Up) {
          which = s;
          pos = i;
          break;
        }
      if (pos > 0) break;
    }
    if (pos < 0) break;

    const Word cur = out.summands[which];
    std::vector<Orientation> lls(cur.letters().begin(),
                                 cur.letters().begin() + (pos - 1));
    std::vector<Orientation> rls(cur.letters().begin() + (pos + 1),
                                 cur.letters().end());
    Word L{std::move(lls)}, R{std::move(rls)};
    auto [fwd, bwd] = heisenberg_iso(L, R);

    SumObject next;
    for (size_t s = 0; s < out.summands.size(); ++s) {
      if (s == which) {
        next.push_back(bwd.target[0]);
        next.push_back(bwd.target[1]);
      } else {
        next.push_back(out.summands[s]);
      }
    }
    // step matrix: identity away from the rewritten summand
    MorphismMatrix step_f, step_b;
    step_f.source = out.summands;
    step_f.target = next;
    step_b.source = next;
    step_b.target = out.summands;
    step_f.entries.assign(next.size(), {});
    step_b.entries.assign(out.summands.size(), {});
    for (size_t r = 0; r < next.size(); ++r)
      for (size_t c = 0; c < out.summands.size(); ++c)
        step_f.entries[r].push_back(Morphism::zero(out.summands[c], next[r]));
    for (size_t r = 0; r < out.summands.size(); ++r)
      for (size_t c = 0; c < next.size(); ++c)
        step_b.entries[r].push_back(Morphism::zero(next[c], out.summands[r]));
    for (size_t s = 0, rshift = 0; s < out.summands.size(); ++s) {
      if (s == which) {
        step_f.entries[s][s] = bwd.entries[0][0];
        step_f.entries[s + 1][s] = bwd.entries[1][0];
        step_b.entries[s][s] = fwd.entries[0][0];
        step_b.entries[s][s + 1] = fwd.entries[0][1];
        rshift = 1;
      } else {
        step_f.entries[s + rshift][s] = Morphism::identity(out.summands[s]);
        step_b.entries[s][s + rshift] = Morphism::identity(out.summands[s]);
      }
    }
    out.forward = matrix_compose(step_f, out.forward);
    out.backward = matrix_compose(out.backward, step_b);
    out.summands = std::move(next);
  }

  for (const Word& s : out.summands) {
    auto sim = as_simple(s);
    if (!sim) throw std::logic_error("decompose terminated on a non-simple");
    ++out.multiplicities[*sim];
  }
  return out;
}

}  // namespace heis
