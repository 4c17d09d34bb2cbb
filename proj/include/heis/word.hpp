#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace heis {

enum class Orientation : char { Up = 'u', Down = 'd' };

inline Orientation flip(Orientation o) {
  return o == Orientation::Up ? Orientation::Down : Orientation::Up;
}

/// An object of the category: a finite word in the two generating objects.
/// The empty word is the tensor unit and serializes as "1".
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Orientation> letters) : letters_(std::move(letters)) {}

  /// Parses "u"/"d" strings; "1" (or "") is the unit.
  static Word parse(const std::string& text) {
    if (text == "1") return Word{};
    std::vector<Orientation> ls;
    ls.reserve(text.size());
    for (char ch : text) {
      if (ch == 'u')
        ls.push_back(Orientation::Up);
      else if (ch == 'd')
        ls.push_back(Orientation::Down);
      else
        throw std::invalid_argument("word letters must be 'u' or 'd': " + text);
    }
    return Word{std::move(ls)};
  }

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  /// 1-based access, matching boundary-point indexing.
  Orientation at(int i) const { return letters_.at(static_cast<size_t>(i - 1)); }

  const std::vector<Orientation>& letters() const { return letters_; }

  std::string str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (Orientation o : letters_) s.push_back(static_cast<char>(o));
    return s;
  }

  int ups() const {
    int k = 0;
    for (Orientation o : letters_)
      if (o == Orientation::Up) ++k;
    return k;
  }
  int downs() const { return size() - ups(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Orientation> letters_;
};

inline Word tensor(const Word& a, const Word& b) {
  std::vector<Orientation> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return Word{std::move(ls)};
}

/// Reverse the word and flip every orientation.
inline Word dual_word(const Word& w) {
  std::vector<Orientation> ls(w.letters().rbegin(), w.letters().rend());
  for (Orientation& o : ls) o = flip(o);
  return Word{std::move(ls)};
}

/// A simple object: i up-strands followed by j down-strands.
struct Simple {
  int ups = 0;
  int downs = 0;

  Word word() const {
    std::vector<Orientation> ls;
    ls.reserve(static_cast<size_t>(ups + downs));
    for (int k = 0; k < ups; ++k) ls.push_back(Orientation::Up);
    for (int k = 0; k < downs; ++k) ls.push_back(Orientation::Down);
    return Word{std::move(ls)};
  }

  friend bool operator==(const Simple&, const Simple&) = default;
  friend auto operator<=>(const Simple&, const Simple&) = default;
};

/// Simple(i,j) iff w = u^i d^j, none otherwise.
inline std::optional<Simple> as_simple(const Word& w) {
  int i = 0;
  int n = w.size();
  while (i < n && w.at(i + 1) == Orientation::Up) ++i;
  for (int k = i + 1; k <= n; ++k)
    if (w.at(k) == Orientation::Up) return std::nullopt;
  return Simple{i, n - i};
}

}  // namespace heis
