#include "heis/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace heis {

WeylElement WeylElement::monomial(int i, int j, BigInt c) {
  WeylElement e;
  e.add_term(i, j, c);
  return e;
}

void WeylElement::add_term(int i, int j, const BigInt& c) {
  if (c == 0) return;
  auto key = std::make_pair(i, j);
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt WeylElement::coeff(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  for (const auto& [ij, c] : other.coeffs_) add_term(ij.first, ij.second, c);
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  std::vector<WeylWord> words;
  for (const auto& [ij_a, ca] : a.coeffs()) {
    for (const auto& [ij_b, cb] : b.coeffs()) {
      std::string w;
      w.append(static_cast<size_t>(ij_a.first), 'x');
      w.append(static_cast<size_t>(ij_a.second), 'd');
      w.append(static_cast<size_t>(ij_b.first), 'x');
      w.append(static_cast<size_t>(ij_b.second), 'd');
      words.push_back({std::move(w), ca * cb});
    }
  }
  return normal_order(words);
}

std::string WeylElement::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print in degree-descending order for readability
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [ij, c] = *it;
    BigInt abs = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = ij.first > 0 || ij.second > 0;
    if (abs != 1 || !has_var) os << abs;
    if (ij.first > 0) {
      os << "x";
      if (ij.first > 1) os << "^" << ij.first;
    }
    if (ij.second > 0) {
      os << "D";
      if (ij.second > 1) os << "^" << ij.second;
    }
  }
  return os.str();
}

WeylElement normal_order(const std::vector<WeylWord>& words) {
  // worklist of (letter word, coefficient); rewrite leftmost "dx" -> "xd" + 1
  WeylElement out;
  std::map<std::string, BigInt> work;
  for (const WeylWord& w : words) {
    for (char ch : w.letters)
      if (ch != 'x' && ch != 'd')
        throw std::invalid_argument("weyl word letters must be 'x' or 'd'");
    work[w.letters] += w.coefficient;
  }
  while (!work.empty()) {
    auto it = work.begin();
    std::string w = it->first;
    BigInt c = it->second;
    work.erase(it);
    if (c == 0) continue;
    size_t pos = w.find("dx");
    if (pos == std::string::npos) {
      size_t i = 0;
      while (i < w.size() && w[i] == 'x') ++i;
      out.add_term(static_cast<int>(i), static_cast<int>(w.size() - i), c);
      continue;
    }
    std::string swapped = w;
    swapped[pos] = 'x';
    swapped[pos + 1] = 'd';
    work[swapped] += c;
    std::string dropped = w;
    dropped.erase(pos, 2);
    work[dropped] += c;
  }
  return out;
}

WeylElement normal_order(const std::string& letters) {
  return normal_order(std::vector<WeylWord>{{letters, 1}});
}

WeylElement k0(const Word& w) {
  std::string letters;
  for (Orientation o : w.letters())
    letters.push_back(o == Orientation::Up ? 'x' : 'd');
  return normal_order(letters);
}

WeylElement k0(const std::vector<Word>& summands) {
  WeylElement out;
  for (const Word& w : summands) out += k0(w);
  return out;
}

bool iso_objects(const std::vector<Word>& a, const std::vector<Word>& b) {
  return k0(a) == k0(b);
}

}  // namespace heis
