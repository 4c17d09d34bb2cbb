#include "heis/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "heis/weyl.hpp"

namespace heis {

std::map<Simple, long long> SplitObject::summands() const {
  std::map<Simple, long long> out;
  for (const auto& [deg, ms] : degrees)
    for (const auto& [s, c] : ms) out[s] += c;
  return out;
}

SplitObject split(const Word& w, long long degree) {
  return split(std::vector<Word>{w}, degree);
}

SplitObject split(const std::vector<Word>& summands, long long degree) {
  WeylElement e = k0(summands);
  SplitObject out;
  if (e.is_zero()) return out;
  auto& ms = out.degrees[degree];
  for (const auto& [ij, c] : e.coeffs())
    ms[Simple{ij.first, ij.second}] = static_cast<long long>(c);
  return out;
}

IdealDescriptor IdealDescriptor::right_chain(int i) {
  if (i < 0) throw std::invalid_argument("chain index must be nonnegative");
  return i == 0 ? whole() : IdealDescriptor{Form::RightChain, i};
}

IdealDescriptor IdealDescriptor::left_chain(int j) {
  if (j < 0) throw std::invalid_argument("chain index must be nonnegative");
  return j == 0 ? whole() : IdealDescriptor{Form::LeftChain, j};
}

bool IdealDescriptor::contains(const Simple& s) const {
  switch (form) {
    case Form::Zero: return false;
    case Form::Whole: return true;
    case Form::RightChain: return s.ups >= index;
    case Form::LeftChain: return s.downs >= index;
  }
  return false;
}

std::string IdealDescriptor::str() const {
  switch (form) {
    case Form::Zero: return "zero";
    case Form::Whole: return "whole";
    case Form::RightChain: return "right-chain(" + std::to_string(index) + ")";
    case Form::LeftChain: return "left-chain(" + std::to_string(index) + ")";
  }
  return "?";
}

IdealDescriptor ideal_generated(Side side, const std::vector<SplitObject>& gens) {
  bool any = false;
  int min_ups = 0, min_downs = 0;
  for (const SplitObject& g : gens)
    for (const auto& [s, c] : g.summands()) {
      if (c == 0) continue;
      if (!any) {
        min_ups = s.ups;
        min_downs = s.downs;
        any = true;
      } else {
        min_ups = std::min(min_ups, s.ups);
        min_downs = std::min(min_downs, s.downs);
      }
    }
  if (!any) return IdealDescriptor::zero();
  switch (side) {
    case Side::Right: return IdealDescriptor::right_chain(min_ups);
    case Side::Left: return IdealDescriptor::left_chain(min_downs);
    case Side::TwoSided: return IdealDescriptor::whole();
  }
  return IdealDescriptor::zero();
}

bool ideal_member(Side, const IdealDescriptor& ideal, const SplitObject& x) {
  for (const auto& [s, c] : x.summands())
    if (c != 0 && !ideal.contains(s)) return false;
  return true;
}

std::vector<IdealDescriptor> enumerate_ideals(Side side, int L) {
  std::set<IdealDescriptor> found;
  found.insert(IdealDescriptor::zero());
  std::vector<Word> words = {Word{}};
  for (int len = 1; len <= L; ++len) {
    std::vector<Word> next;
    for (const Word& w : words)
      if (w.size() == len - 1)
        for (Orientation o : {Orientation::Up, Orientation::Down}) {
          auto ls = w.letters();
          ls.push_back(o);
          next.push_back(Word{std::move(ls)});
        }
    for (const Word& w : next) found.insert(ideal_generated(side, {split(w)}));
    words.insert(words.end(), next.begin(), next.end());
  }
  found.insert(ideal_generated(side, {split(Word{})}));

  // chain order: whole, then ascending cutoff, then zero
  std::vector<IdealDescriptor> out(found.begin(), found.end());
  auto key = [](const IdealDescriptor& d) {
    switch (d.form) {
      case IdealDescriptor::Form::Zero: return 1 << 30;
      case IdealDescriptor::Form::Whole: return 0;
      default: return d.index;
    }
  };
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });

  // verify strictly decreasing inclusion on simples with degrees <= L
  for (size_t k = 0; k + 1 < out.size(); ++k) {
    bool strict = false;
    for (int a = 0; a <= L; ++a)
      for (int b = 0; b <= L; ++b) {
        Simple s{a, b};
        if (out[k + 1].contains(s) && !out[k].contains(s))
          throw std::logic_error("ideal enumeration is not a chain");
        if (out[k].contains(s) && !out[k + 1].contains(s)) strict = true;
      }
    if (!strict) throw std::logic_error("ideal chain inclusion is not strict");
  }
  return out;
}

std::set<Simple> brute_force_ideal(Side side, const std::vector<Word>& gens,
                                   int tensor_len, int bound) {
  std::vector<Word> tensors = {Word{}};
  for (size_t k = 0; k < tensors.size(); ++k) {
    const Word w = tensors[k];
    if (w.size() >= tensor_len) continue;
    for (Orientation o : {Orientation::Up, Orientation::Down}) {
      auto ls = w.letters();
      ls.push_back(o);
      tensors.push_back(Word{std::move(ls)});
    }
  }

  std::set<Simple> members;
  std::vector<Simple> queue;
  auto add = [&](const Simple& s) {
    if (s.ups > bound || s.downs > bound) return;
    if (members.insert(s).second) queue.push_back(s);
  };
  for (const Word& g : gens)
    for (const auto& [s, c] : split(g).summands())
      if (c != 0) add(s);

  while (!queue.empty()) {
    Simple s = queue.back();
    queue.pop_back();
    for (const Word& y : tensors) {
      if (side != Side::Left)
        for (const auto& [t, c] : split(tensor(s.word(), y)).summands())
          if (c != 0) add(t);
      if (side != Side::Right)
        for (const auto& [t, c] : split(tensor(y, s.word())).summands())
          if (c != 0) add(t);
    }
  }
  return members;
}

SpcReport spc_report(int sample_length) {
  SpcReport rep;
  rep.sample_length = sample_length;

  std::vector<Word> sample = {Word{}};
  for (size_t k = 0; k < sample.size(); ++k) {
    const Word w = sample[k];
    if (w.size() >= sample_length) continue;
    for (Orientation o : {Orientation::Up, Orientation::Down}) {
      auto ls = w.letters();
      ls.push_back(o);
      sample.push_back(Word{std::move(ls)});
    }
  }

  auto lattice = enumerate_ideals(Side::TwoSided, sample_length);
  rep.two_sided_lattice_is_trivial =
      lattice == std::vector<IdealDescriptor>{IdealDescriptor::whole(),
                                              IdealDescriptor::zero()};

  rep.zero_ideal_prime = true;
  rep.completely_prime = true;
  rep.supports_correct = true;
  rep.tensor_product_property = true;
  IdealDescriptor zero = IdealDescriptor::zero();

  // supp(x) over the one-point spectrum is {*} iff x is not in the zero ideal
  auto supported = [&](const SplitObject& x) {
    return !ideal_member(Side::TwoSided, zero, x);
  };

  rep.supports_correct = supported(split(sample[1])) && !supported(SplitObject{});
  for (const Word& w : sample)
    if (!supported(split(w))) rep.supports_correct = false;

  for (const Word& a : sample)
    for (const Word& b : sample) {
      WeylElement ka = k0(a), kb = k0(b);
      if (ka * kb == WeylElement{} && !(ka == WeylElement{}) &&
          !(kb == WeylElement{}))
        rep.completely_prime = false;
      SplitObject prod = split(tensor(a, b));
      bool lhs = supported(prod);
      bool rhs = supported(split(a)) && supported(split(b));
      if (lhs != rhs) rep.tensor_product_property = false;
      if (!lhs && rhs) rep.zero_ideal_prime = false;
    }
  return rep;
}

QuasiSupport quasi_support_points(int L) {
  QuasiSupport qs;
  for (int m = 1; m <= L; ++m) qs.points.push_back(IdealDescriptor::right_chain(m));
  qs.points.push_back(IdealDescriptor::zero());

  // truncated chain lattice; meets computed by simple-set intersection
  std::vector<IdealDescriptor> lattice = {IdealDescriptor::whole()};
  lattice.insert(lattice.end(), qs.points.begin(), qs.points.end());
  auto simple_set = [&](const IdealDescriptor& d) {
    std::set<Simple> out;
    for (int a = 0; a <= L; ++a)
      for (int b = 0; b <= 1; ++b)
        if (d.contains(Simple{a, b})) out.insert(Simple{a, b});
    return out;
  };
  qs.all_meet_prime = true;
  for (const IdealDescriptor& p : qs.points) {
    auto ps = simple_set(p);
    for (const IdealDescriptor& a : lattice)
      for (const IdealDescriptor& b : lattice) {
        auto sa = simple_set(a), sb = simple_set(b);
        std::set<Simple> meet;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                              std::inserter(meet, meet.begin()));
        if (meet == ps && !(a == p) && !(b == p)) qs.all_meet_prime = false;
      }
  }

  for (int n = 0; n < L; ++n) {
    SplitObject x = split(Simple{n, 0}.word());
    std::vector<IdealDescriptor> open;
    for (const IdealDescriptor& p : qs.points)
      if (!ideal_member(Side::Right, p, x)) open.push_back(p);
    qs.opens.push_back({n, open});
  }
  return qs;
}

}  // namespace heis
