#include "heis/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace heis::oracle {

int perm_apply(const Perm& p, int x) {
  return x < static_cast<int>(p.size()) ? p[static_cast<size_t>(x)] : x;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  int k = static_cast<int>(std::max(a.size(), b.size()));
  Perm out(static_cast<size_t>(k));
  for (int x = 0; x < k; ++x)
    out[static_cast<size_t>(x)] = perm_apply(a, perm_apply(b, x));
  return out;
}

Perm perm_inv(const Perm& p) {
  Perm out(p.size());
  for (size_t x = 0; x < p.size(); ++x)
    out[static_cast<size_t>(p[x])] = static_cast<int>(x);
  return out;
}

Perm perm_identity(int k) {
  Perm out(static_cast<size_t>(k));
  for (int x = 0; x < k; ++x) out[static_cast<size_t>(x)] = x;
  return out;
}

Perm transposition(int a, int b, int k) {
  Perm out = perm_identity(k);
  std::swap(out[static_cast<size_t>(a)], out[static_cast<size_t>(b)]);
  return out;
}

Perm coset_rep(int i, int r) {
  Perm out(static_cast<size_t>(r));
  for (int x = 0; x < r - 1; ++x) out[static_cast<size_t>(x)] = x < i ? x : x + 1;
  out[static_cast<size_t>(r - 1)] = i;
  return out;
}

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Perm perm_unrank(int n, std::int64_t r) {
  std::vector<int> avail(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) avail[static_cast<size_t>(x)] = x;
  Perm p;
  for (int k = n - 1; k >= 0; --k) {
    std::int64_t f = factorial(k);
    auto i = static_cast<size_t>(r / f);
    r %= f;
    p.push_back(avail[i]);
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return p;
}

std::int64_t perm_rank(const Perm& p) {
  int n = static_cast<int>(p.size());
  std::vector<int> avail(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) avail[static_cast<size_t>(x)] = x;
  std::int64_t r = 0;
  for (int k = 0; k < n; ++k) {
    auto it = std::find(avail.begin(), avail.end(), p[static_cast<size_t>(k)]);
    r += (it - avail.begin()) * factorial(n - 1 - k);
    avail.erase(it);
  }
  return r;
}

}  // namespace

SparseMat SparseMat::zero(std::int64_t r, std::int64_t c) {
  SparseMat m;
  m.rows = r;
  m.cols = c;
  m.col.resize(static_cast<size_t>(c));
  return m;
}

SparseMat SparseMat::identity(std::int64_t n) {
  SparseMat m = zero(n, n);
  for (std::int64_t j = 0; j < n; ++j) m.col[static_cast<size_t>(j)] = {{j, 1}};
  return m;
}

SparseMat mat_mul(const SparseMat& a, const SparseMat& b) {
  if (a.cols != b.rows) throw std::logic_error("matrix shape mismatch in mat_mul");
  SparseMat out = SparseMat::zero(a.rows, b.cols);
  for (std::int64_t j = 0; j < b.cols; ++j) {
    std::map<std::int64_t, std::int64_t> acc;
    for (const auto& [k, bk] : b.col[static_cast<size_t>(j)])
      for (const auto& [r, ark] : a.col[static_cast<size_t>(k)]) acc[r] += ark * bk;
    auto& cj = out.col[static_cast<size_t>(j)];
    for (const auto& [r, v] : acc)
      if (v != 0) cj.push_back({r, v});
  }
  return out;
}

SparseMat mat_add(const SparseMat& a, const SparseMat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::logic_error("matrix shape mismatch in mat_add");
  SparseMat out = SparseMat::zero(a.rows, a.cols);
  for (std::int64_t j = 0; j < a.cols; ++j) {
    std::map<std::int64_t, std::int64_t> acc;
    for (const auto& [r, v] : a.col[static_cast<size_t>(j)]) acc[r] += v;
    for (const auto& [r, v] : b.col[static_cast<size_t>(j)]) acc[r] += v;
    auto& cj = out.col[static_cast<size_t>(j)];
    for (const auto& [r, v] : acc)
      if (v != 0) cj.push_back({r, v});
  }
  return out;
}

SparseMat mat_scale(const SparseMat& a, std::int64_t k) {
  SparseMat out = a;
  if (k == 0) return SparseMat::zero(a.rows, a.cols);
  for (auto& cj : out.col)
    for (auto& [r, v] : cj) v *= k;
  return out;
}

bool mat_is_zero(const SparseMat& a) {
  return std::all_of(a.col.begin(), a.col.end(),
                     [](const auto& cj) { return cj.empty(); });
}

bool operator==(const SparseMat& a, const SparseMat& b) {
  return a.rows == b.rows && a.cols == b.cols && a.col == b.col;
}

Space space_for(const Word& w, int n) {
  Space sp;
  sp.base_level = n;
  int level = n;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    if (*it == Orientation::Up) {
      ++level;
      sp.u_ranks.push_back(level);
    } else {
      --level;
      if (level < 0) sp.valid = false;
    }
  }
  sp.level = level;
  if (sp.valid) {
    sp.dim = factorial(n);
    for (int r : sp.u_ranks) sp.dim *= r;
  }
  return sp;
}

std::int64_t encode_label(const Space& sp, const Label& lbl) {
  std::int64_t idx = 0;
  for (size_t k = lbl.reps.size(); k-- > 0;)
    idx = idx * sp.u_ranks[k] + lbl.reps[k];
  return idx * factorial(sp.base_level) + perm_rank(lbl.base);
}

Label decode_label(const Space& sp, std::int64_t index) {
  Label lbl;
  std::int64_t nf = factorial(sp.base_level);
  lbl.base = perm_unrank(sp.base_level, index % nf);
  index /= nf;
  for (int r : sp.u_ranks) {
    lbl.reps.push_back(static_cast<int>(index % r));
    index /= r;
  }
  return lbl;
}

Label act(const Space& sp, Perm tau, Label lbl) {
  for (size_t k = lbl.reps.size(); k-- > 0;) {
    int r = sp.u_ranks[k];
    Perm h = perm_mul(tau, coset_rep(lbl.reps[k], r));
    int rep = perm_apply(h, r - 1);
    lbl.reps[k] = rep;
    tau = perm_mul(perm_inv(coset_rep(rep, r)), h);
  }
  lbl.base = perm_mul(tau, lbl.base);
  while (lbl.base.size() < static_cast<size_t>(sp.base_level))
    lbl.base.push_back(static_cast<int>(lbl.base.size()));
  lbl.base.resize(static_cast<size_t>(sp.base_level));
  return lbl;
}

SparseMat slice_matrix(const Slice& s, int n) {
  Space full_src = space_for(s.source(), n);
  Space full_tgt = space_for(s.target(), n);
  if (full_src.dim == 0 || full_tgt.dim == 0)
    return SparseMat::zero(full_tgt.dim, full_src.dim);

  Word zone_src = tensor(gen_source(s.gen), s.right);
  Word zone_tgt = tensor(gen_target(s.gen), s.right);
  Space zsrc = space_for(zone_src, n);
  Space ztgt = space_for(zone_tgt, n);
  Space rsp = space_for(s.right, n);
  const int m = rsp.level;

  SparseMat phi = SparseMat::zero(ztgt.dim, zsrc.dim);
  for (std::int64_t j = 0; j < zsrc.dim; ++j) {
    Label lbl = decode_label(zsrc, j);
    auto& cj = phi.col[static_cast<size_t>(j)];
    switch (s.gen) {
      case Gen::S: {
        int i1 = lbl.reps[lbl.reps.size() - 2];
        int i2 = lbl.reps.back();
        Perm h = perm_mul(perm_mul(coset_rep(i2, m + 2), coset_rep(i1, m + 1)),
                          transposition(m, m + 1, m + 2));
        int j2 = perm_apply(h, m + 1);
        Perm h1 = perm_mul(perm_inv(coset_rep(j2, m + 2)), h);
        int j1 = perm_apply(h1, m);
        Perm mu = perm_mul(perm_inv(coset_rep(j1, m + 1)), h1);
        Label rest{lbl.base, {lbl.reps.begin(), lbl.reps.end() - 2}};
        rest = act(rsp, mu, std::move(rest));
        rest.reps.push_back(j1);
        rest.reps.push_back(j2);
        cj.push_back({encode_label(ztgt, rest), 1});
        break;
      }
      case Gen::C: {
        lbl.reps.push_back(m);
        cj.push_back({encode_label(ztgt, lbl), 1});
        break;
      }
      case Gen::Cp: {
        std::map<std::int64_t, std::int64_t> acc;
        for (int i = 0; i < m; ++i) {
          Label out = act(rsp, perm_inv(coset_rep(i, m)), lbl);
          out.reps.push_back(i);
          acc[encode_label(ztgt, out)] += 1;
        }
        for (const auto& [r, v] : acc) cj.push_back({r, v});
        break;
      }
      case Gen::D: {
        int rep = lbl.reps.back();
        Label rest{lbl.base, {lbl.reps.begin(), lbl.reps.end() - 1}};
        rest = act(rsp, coset_rep(rep, m), std::move(rest));
        cj.push_back({encode_label(ztgt, rest), 1});
        break;
      }
      case Gen::Dp: {
        int rep = lbl.reps.back();
        if (rep == m) {
          Label rest{lbl.base, {lbl.reps.begin(), lbl.reps.end() - 1}};
          cj.push_back({encode_label(ztgt, rest), 1});
        }
        break;
      }
      default:
        throw std::logic_error("expand derived generators before evaluation");
    }
  }

  std::int64_t mult = full_src.dim / zsrc.dim;
  if (mult * ztgt.dim != full_tgt.dim)
    throw std::logic_error("context multiplier mismatch");
  if (mult == 1) {
    phi.rows = full_tgt.dim;
    return phi;
  }
  SparseMat out = SparseMat::zero(full_tgt.dim, full_src.dim);
  for (std::int64_t a = 0; a < mult; ++a)
    for (std::int64_t j = 0; j < zsrc.dim; ++j) {
      auto& cj = out.col[static_cast<size_t>(a * zsrc.dim + j)];
      for (const auto& [r, v] : phi.col[static_cast<size_t>(j)])
        cj.push_back({a * ztgt.dim + r, v});
    }
  return out;
}

SparseMat eval_slices(const SliceWord& sw, const Word& source, int n) {
  SparseMat m = SparseMat::identity(space_for(source, n).dim);
  Word cur = source;
  for (const Slice& sl : sw) {
    if (sl.source() != cur)
      throw std::logic_error("slice word is not composable at level " +
                             std::to_string(n));
    m = mat_mul(slice_matrix(sl, n), m);
    cur = sl.target();
  }
  return m;
}

SparseMat eval_diagram(const BasisDiagram& d, int n) {
  return eval_slices(expand_to_atoms(to_slices(d)), d.matching.source, n);
}

std::vector<std::pair<std::string, bool>> relations_selftest(int max_level) {
  using SW = SliceWord;
  auto W = [](const char* s) { return Word::parse(s); };
  auto ev = [&](const SW& sw, const Word& src, int n) {
    return eval_slices(expand_to_atoms(sw), src, n);
  };
  auto eq = [&](const SW& a, const SW& b, const Word& src) {
    for (int n = 0; n <= max_level; ++n)
      if (!(ev(a, src, n) == ev(b, src, n))) return false;
    return true;
  };

  std::vector<std::pair<std::string, bool>> out;
  const Word e = W("1");

  out.emplace_back("s.s = id(uu)",
                   eq({{e, Gen::S, e}, {e, Gen::S, e}}, {}, W("uu")));
  out.emplace_back(
      "braid relation on uuu",
      eq({{e, Gen::S, W("u")}, {W("u"), Gen::S, e}, {e, Gen::S, W("u")}},
         {{W("u"), Gen::S, e}, {e, Gen::S, W("u")}, {W("u"), Gen::S, e}},
         W("uuu")));
  out.emplace_back("(d*id_u).(id_u*c) = id(u)",
                   eq({{W("u"), Gen::C, e}, {e, Gen::D, W("u")}}, {}, W("u")));
  out.emplace_back("(id_d*d).(c*id_d) = id(d)",
                   eq({{e, Gen::C, W("d")}, {W("d"), Gen::D, e}}, {}, W("d")));
  out.emplace_back("t'.t = id(ud)",
                   eq({{e, Gen::T, e}, {e, Gen::Tp, e}}, {}, W("ud")));
  {
    bool ok = true;
    for (int n = 0; n <= max_level && ok; ++n) {
      SparseMat lhs = ev({{e, Gen::Tp, e}, {e, Gen::T, e}}, W("du"), n);
      SparseMat turnback = ev({{e, Gen::Dp, e}, {e, Gen::C, e}}, W("du"), n);
      SparseMat rhs =
          mat_add(SparseMat::identity(lhs.cols), mat_scale(turnback, -1));
      ok = lhs == rhs;
    }
    out.emplace_back("t.t' = id(du) - c.d'", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n <= max_level && ok; ++n)
      ok = mat_is_zero(ev(
          {{e, Gen::C, W("u")}, {W("d"), Gen::S, e}, {e, Gen::Dp, W("u")}},
          W("u"), n));
    out.emplace_back("left curl = 0", ok);
  }
  out.emplace_back("d'.c = id(1)",
                   eq({{e, Gen::C, e}, {e, Gen::Dp, e}}, {}, W("1")));

  // derived consequences
  out.emplace_back("s'.s' = id(dd)",
                   eq({{e, Gen::Sp, e}, {e, Gen::Sp, e}}, {}, W("dd")));
  out.emplace_back("(id_u*d').(c'*id_u) = id(u)",
                   eq({{e, Gen::Cp, W("u")}, {W("u"), Gen::Dp, e}}, {}, W("u")));
  out.emplace_back("(d'*id_d).(id_d*c') = id(d)",
                   eq({{W("d"), Gen::Cp, e}, {e, Gen::Dp, W("d")}}, {}, W("d")));
  {
    bool some_nonzero = false;
    for (int n = 0; n <= max_level; ++n)
      if (!mat_is_zero(ev({{e, Gen::X, e}, {e, Gen::X, e}}, W("u"), n)))
        some_nonzero = true;
    out.emplace_back("x.x != 0", some_nonzero);
  }
  return out;
}

}  // namespace heis::oracle
