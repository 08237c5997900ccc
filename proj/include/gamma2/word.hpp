#pragma once

// Words in the rank-g free group on gamma_1..gamma_g, kept freely reduced.
// A letter is a signed 1-based generator index; the empty word is the
// identity.  concat(u, v) is u's letters followed by v's.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gamma2/gf2.hpp"

namespace gamma2 {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        pos(pos) {}
};

struct Word {
  int genus = 0;
  std::vector<int> letters;  // freely reduced

  std::size_t length() const { return letters.size(); }
  bool is_identity() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
};

namespace detail {
inline void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}
inline void check_letter(int genus, int letter) {
  int a = letter < 0 ? -letter : letter;
  require(a >= 1 && a <= genus, "Word: letter out of range for genus");
}
}  // namespace detail

inline Word reduce(int genus, std::span<const int> letters) {
  Word w{genus, {}};
  w.letters.reserve(letters.size());
  for (int l : letters) {
    detail::check_letter(genus, l);
    detail::push_reduced(w.letters, l);
  }
  return w;
}

inline Word word(int genus, std::initializer_list<int> letters) {
  return reduce(genus, std::span<const int>(letters.begin(), letters.size()));
}

inline Word gen(int genus, int i) { return word(genus, {i}); }

inline Word identity_word(int genus) { return Word{genus, {}}; }

inline Word concat(const Word& u, const Word& v) {
  detail::require(u.genus == v.genus, "concat: genus mismatch");
  Word w = u;
  for (int l : v.letters) detail::push_reduced(w.letters, l);
  return w;
}

inline Word invert(const Word& u) {
  Word w{u.genus, {}};
  w.letters.reserve(u.letters.size());
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
    w.letters.push_back(-*it);
  return w;
}

inline Word pow(const Word& u, int e) {
  Word w = identity_word(u.genus);
  const Word& base = e >= 0 ? u : invert(u);
  for (int k = 0; k < (e >= 0 ? e : -e); ++k) w = concat(w, base);
  return w;
}

// Boundary relator gamma_1^2 gamma_2^2 ... gamma_g^2.
inline Word relator(int g) {
  detail::require(g >= 1, "relator: genus must be positive");
  Word w{g, {}};
  for (int i = 1; i <= g; ++i) {
    w.letters.push_back(i);
    w.letters.push_back(i);
  }
  return w;
}

// Text syntax: "g1 g2^-1 g1^2".
inline std::string format_word(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    int l = w.letters[i];
    std::size_t run = 1;
    while (i + run < w.letters.size() && w.letters[i + run] == l) ++run;
    if (!out.empty()) out += ' ';
    out += 'g';
    out += std::to_string(l < 0 ? -l : l);
    long long e = static_cast<long long>(run) * (l < 0 ? -1 : 1);
    if (e != 1) out += "^" + std::to_string(e);
    i += run;
  }
  return out;
}

inline Word parse_word(int genus, std::string_view text) {
  std::vector<int> letters;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto parse_int = [&](bool allow_sign) {
    std::size_t start = i;
    bool neg = false;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || text[i] < '0' || text[i] > '9')
      throw ParseError("expected integer", start);
    long long v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw ParseError("integer too large", start);
      ++i;
    }
    return neg ? -v : v;
  };
  skip_ws();
  if (i < text.size() && text[i] == '1' &&
      (i + 1 == text.size() || text[i + 1] == ' ')) {
    ++i;  // the identity token
    skip_ws();
  }
  while (i < text.size()) {
    if (text[i] != 'g') throw ParseError("expected generator token 'g<k>'", i);
    ++i;
    long long idx = parse_int(false);
    if (idx < 1 || idx > genus)
      throw ParseError("generator index out of range for genus", i);
    long long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = parse_int(true);
    }
    int letter = static_cast<int>(e < 0 ? -idx : idx);
    for (long long k = 0; k < (e < 0 ? -e : e); ++k)
      detail::push_reduced(letters, letter);
    skip_ws();
  }
  return Word{genus, std::move(letters)};
}

}  // namespace gamma2
