#include "heis/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "heis/slices.hpp"

namespace heis {

namespace {

std::string letters_row(const Word& w) {
  if (w.empty()) return "1";
  std::string row;
  for (int i = 0; i < w.size(); ++i) {
    if (i) row += ' ';
    row += static_cast<char>(w.at(i + 1));
  }
  return row;
}

std::string slice_row(const Slice& sl) {
  const Word src = sl.source();
  const Word tgt = sl.target();
  int width = 2 * std::max(src.size(), tgt.size()) - 1;
  std::string row(static_cast<size_t>(std::max(width, 1)), ' ');
  int p = sl.left.size();
  auto put = [&](int col, char ch) { row[static_cast<size_t>(col)] = ch; };
  // identity strands flank the generator
  for (int i = 0; i < p; ++i) put(2 * i, '|');
  int gsrc = gen_source(sl.gen).size();
  int after = src.size() - p - gsrc;  // right identities, in source columns
  for (int i = 0; i < after; ++i) put(width - 1 - 2 * i, '|');
  switch (sl.gen) {
    case Gen::S:
    case Gen::Sp:
    case Gen::T:
    case Gen::Tp:
      put(2 * p, '\\');
      put(2 * p + 2, '/');
      break;
    case Gen::C:
    case Gen::Cp:
      put(2 * p + 1, 'u');
      break;
    case Gen::D:
    case Gen::Dp:
      put(2 * p + 1, 'n');
      break;
    case Gen::X:
    case Gen::Xp:
      put(2 * p, '*');
      break;
  }
  while (!row.empty() && row.back() == ' ') row.pop_back();
  return row;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string bp_name(const BoundaryPoint& p) {
  return (p.side == BoundaryPoint::Side::Bottom ? "B" : "T") +
         std::to_string(p.index);
}

}  // namespace

std::string render_ascii(const BasisDiagram& d) {
  SliceWord sw = to_slices(d);
  std::vector<std::string> rows;
  rows.push_back(letters_row(d.matching.source));
  for (const Slice& sl : sw) rows.push_back(slice_row(sl));
  rows.push_back(letters_row(d.matching.target));
  std::string out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) out += *it + "\n";
  return out;
}

std::string render_ascii(const Morphism& m) {
  if (m.is_zero())
    return "0 : " + m.source.str() + " -> " + m.target.str() + "\n";
  std::string out;
  for (const auto& [d, c] : m.terms) {
    out += (c >= 0 ? "(+" : "(") + std::to_string(c) + ")\n";
    out += render_ascii(d);
  }
  return out;
}

std::string render_tikz(const BasisDiagram& d) {
  const Matching& m = d.matching;
  const double top = 2.0;
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.6,>=stealth]\n";
  for (const auto& [a, b] : m.pairs) {
    // the strand runs from its inward endpoint to its outward one
    auto inward = [&](const BoundaryPoint& p) {
      return p.side == BoundaryPoint::Side::Bottom
                 ? m.letter(p) == Orientation::Up
                 : m.letter(p) == Orientation::Down;
    };
    BoundaryPoint from = inward(a) ? a : b;
    BoundaryPoint to = inward(a) ? b : a;
    auto xy = [&](const BoundaryPoint& p) {
      return std::pair<double, double>{
          static_cast<double>(p.index - 1),
          p.side == BoundaryPoint::Side::Bottom ? 0.0 : top};
    };
    auto [x1, y1] = xy(from);
    auto [x2, y2] = xy(to);
    double bend = 0.4 + 0.3 * std::abs(x2 - x1);
    double c1y, c2y;
    if (y1 == y2) {
      double cy = y1 == 0.0 ? bend : top - bend;  // cap bulges up, cup dips down
      c1y = c2y = cy;
    } else {
      c1y = y1 == 0.0 ? 0.8 : top - 0.8;
      c2y = y2 == 0.0 ? 0.8 : top - 0.8;
    }
    os << "  \\draw[->] (" << coord(x1) << "," << coord(y1) << ") .. controls ("
       << coord(x1) << "," << coord(c1y) << ") and (" << coord(x2) << ","
       << coord(c2y) << ") .. (" << coord(x2) << "," << coord(y2) << ");\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string render_tikz(const Morphism& m) {
  if (m.is_zero()) return "% zero morphism " + m.source.str() + " -> " + m.target.str() + "\n";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : m.terms) {
    if (!first) out += "$+$\n";
    first = false;
    if (c != 1) out += "$" + std::to_string(c) + "\\,\\times$\n";
    out += render_tikz(d);
  }
  return out;
}

nlohmann::ordered_json to_json(const BasisDiagram& d) {
  nlohmann::ordered_json j;
  j["source"] = d.matching.source.str();
  j["target"] = d.matching.target.str();
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& [a, b] : d.matching.pairs)
    pairs.push_back({bp_name(a), bp_name(b)});
  j["pairs"] = pairs;
  j["dots"] = d.dots;
  j["bubbles"] = d.bubbles;
  return j;
}

nlohmann::ordered_json to_json(const Morphism& m) {
  nlohmann::ordered_json j;
  j["source"] = m.source.str();
  j["target"] = m.target.str();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [d, c] : m.terms)
    terms.push_back({{"coeff", c}, {"diagram", to_json(d)}});
  j["terms"] = terms;
  return j;
}

nlohmann::ordered_json to_json(const WeylElement& e) {
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& [ij, c] : e.coeffs()) {
    nlohmann::ordered_json t;
    t["i"] = ij.first;
    t["j"] = ij.second;
    if (c >= std::numeric_limits<long long>::min() &&
        c <= std::numeric_limits<long long>::max())
      t["c"] = static_cast<long long>(c);
    else
      t["c"] = c.str();
    coeffs.push_back(t);
  }
  nlohmann::ordered_json j;
  j["normal_form"] = e.str();
  j["coeffs"] = coeffs;
  return j;
}

nlohmann::ordered_json to_json(const IdealDescriptor& d) {
  nlohmann::ordered_json j;
  j["descriptor"] = d.str();
  switch (d.form) {
    case IdealDescriptor::Form::Zero: j["form"] = "zero"; break;
    case IdealDescriptor::Form::Whole: j["form"] = "whole"; break;
    case IdealDescriptor::Form::RightChain: j["form"] = "right-chain"; break;
    case IdealDescriptor::Form::LeftChain: j["form"] = "left-chain"; break;
  }
  if (d.index > 0) j["index"] = d.index;
  return j;
}

nlohmann::ordered_json to_json(const SplitObject& s) {
  auto degs = nlohmann::ordered_json::array();
  for (const auto& [deg, ms] : s.degrees) {
    auto summands = nlohmann::ordered_json::array();
    for (const auto& [simple, c] : ms)
      summands.push_back(
          {{"ups", simple.ups}, {"downs", simple.downs}, {"mult", c}});
    degs.push_back({{"degree", deg}, {"summands", summands}});
  }
  nlohmann::ordered_json j;
  j["degrees"] = degs;
  return j;
}

nlohmann::ordered_json report(const std::string& kind,
                              nlohmann::ordered_json payload) {
  nlohmann::ordered_json j;
  j["schema"] = "heis/1";
  j["kind"] = kind;
  j["data"] = std::move(payload);
  return j;
}

std::string render(const Morphism& m, const std::string& format) {
  if (format == "ascii") return render_ascii(m);
  if (format == "tikz") return render_tikz(m);
  if (format == "json") return report("morphism", to_json(m)).dump(2) + "\n";
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace heis
