#pragma once

// Catalog of mapping classes: crosscap slides Y_{i;j}, point-pushes, squared
// twists about two-index curves (as slide composites) and formal squared
// twists about four-index curves.
//
// A mapping class is represented only by the substitution action of its
// INVERSE on the free group, which is exactly what the Johnson evaluation
// consumes.  Factor products follow the convention (phi psi) = "phi's
// diffeomorphism first", so the inverse action of a product composes the
// stored per-factor actions left factor outermost.  A factor with exponent
// -1 contributes its stored action in the forward slot; the value of the
// Johnson homomorphism is 2-torsion, so this changes nothing it is used for.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gamma2/endo.hpp"
#include "gamma2/tensor.hpp"
#include "gamma2/word.hpp"

namespace gamma2 {

struct FormalOnly : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GenKind { y_slide, push, t_square_pair, t_square_quad };

struct McgGen {
  GenKind kind = GenKind::y_slide;
  int genus = 0;
  int i = 0, j = 0, k = 0, l = 0;
  Word push_word;  // only for GenKind::push

  bool formal() const { return kind == GenKind::t_square_quad; }

  static McgGen y_slide(int g, int i, int j) {
    detail::require(1 <= i && i <= g && 1 <= j && j <= g && i != j,
                    "y_slide: need distinct indices in 1..g");
    return {GenKind::y_slide, g, i, j, 0, 0, {}};
  }
  static McgGen push(Word w) {
    return {GenKind::push, w.genus, 0, 0, 0, 0, std::move(w)};
  }
  static McgGen t_square_pair(int g, int i, int j) {
    detail::require(1 <= i && i <= g && 1 <= j && j <= g && i != j,
                    "t_square_pair: need distinct indices in 1..g");
    return {GenKind::t_square_pair, g, i, j, 0, 0, {}};
  }
  static McgGen t_square_quad(int g, int i, int j, int k, int l) {
    detail::require(1 <= i && i < j && j < k && k < l && l <= g,
                    "t_square_quad: need ascending indices in 1..g");
    return {GenKind::t_square_quad, g, i, j, k, l, {}};
  }

  bool operator==(const McgGen&) const = default;
};

struct McgFactor {
  McgGen gen;
  int exponent = 1;  // +1 or -1
  bool operator==(const McgFactor&) const = default;
};

struct McgExpr {
  int genus = 0;
  std::vector<McgFactor> factors;

  bool formal() const {
    for (const McgFactor& f : factors)
      if (f.gen.formal()) return true;
    return false;
  }
  bool operator==(const McgExpr&) const = default;
};

inline McgExpr expr_of(McgGen g, int exponent = 1) {
  McgExpr e{g.genus, {}};
  e.factors.push_back({std::move(g), exponent});
  return e;
}

inline McgExpr expr_mul(const McgExpr& a, const McgExpr& b) {
  detail::require(a.genus == b.genus, "expr_mul: genus mismatch");
  McgExpr out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

inline McgExpr expr_inverse(const McgExpr& x) {
  McgExpr out{x.genus, {}};
  for (auto it = x.factors.rbegin(); it != x.factors.rend(); ++it)
    out.factors.push_back({it->gen, -it->exponent});
  return out;
}

// y^-1 x y
inline McgExpr expr_conjugate(const McgExpr& x, const McgExpr& y) {
  return expr_mul(expr_mul(expr_inverse(y), x), y);
}

namespace detail {
inline Word squares_run(int g, int from, int to, int exp_sign) {
  // product of gamma_k^(2*exp_sign) for k = from..to (empty when from > to)
  Word w = identity_word(g);
  for (int k = from; k <= to; ++k)
    w = concat(w, pow(gen(g, k), 2 * exp_sign));
  return w;
}
}  // namespace detail

// Substitution action of Y_{i;j}^{-1} on the free-group generators.
inline SubstEndo y_slide_inverse_endo(int g, int i, int j) {
  detail::require(i != j && 1 <= i && i <= g && 1 <= j && j <= g,
                  "y_slide_inverse_endo: bad indices");
  SubstEndo e = identity_endo(g);
  const Word gi = gen(g, i), gj = gen(g, j);
  if (i < j) {
    // u = gamma_{i+1}^2..gamma_{j-1}^2 gamma_j gamma_{j-1}^-2..gamma_{i+1}^-2
    Word u = detail::squares_run(g, i + 1, j - 1, +1);
    u = concat(u, gj);
    for (int k = j - 1; k >= i + 1; --k) u = concat(u, pow(gen(g, k), -2));
    e.images[static_cast<std::size_t>(i - 1)] =
        concat(concat(invert(u), invert(gi)), u);
    const Word a = detail::squares_run(g, i + 1, j, +1);
    e.images[static_cast<std::size_t>(j - 1)] =
        concat(concat(concat(gj, invert(a)), pow(gi, 2)), a);
  } else {
    // v = gamma_i^-2..gamma_{j+1}^-2 gamma_j gamma_{j+1}^2..gamma_i^2
    Word v = identity_word(g);
    for (int k = i; k >= j + 1; --k) v = concat(v, pow(gen(g, k), -2));
    v = concat(v, gj);
    v = concat(v, detail::squares_run(g, j + 1, i, +1));
    e.images[static_cast<std::size_t>(i - 1)] =
        concat(concat(invert(v), invert(gi)), v);
    const Word b = detail::squares_run(g, j + 1, i - 1, +1);
    e.images[static_cast<std::size_t>(j - 1)] =
        concat(concat(concat(gj, b), pow(gi, 2)), invert(b));
  }
  return e;
}

// Inverse action of the point-push along w: conjugation u -> w^-1 u w, so
// that the push itself conjugates by w.
inline SubstEndo push_inverse_endo(const Word& w) {
  SubstEndo e = identity_endo(w.genus);
  for (Word& img : e.images) img = concat(concat(invert(w), img), w);
  return e;
}

inline SubstEndo inverse_endo(const McgGen& gen) {
  switch (gen.kind) {
    case GenKind::y_slide:
      return y_slide_inverse_endo(gen.genus, gen.i, gen.j);
    case GenKind::push:
      return push_inverse_endo(gen.push_word);
    case GenKind::t_square_pair:
      // T^2_{i,j} = Y_{i;j}^{-1} Y_{j;i}
      return compose(y_slide_inverse_endo(gen.genus, gen.i, gen.j),
                     y_slide_inverse_endo(gen.genus, gen.j, gen.i));
    case GenKind::t_square_quad:
      throw FormalOnly("four-index squared twist carries no free-group action");
  }
  throw std::logic_error("inverse_endo: unreachable");
}

inline SubstEndo inverse_endo(const McgExpr& x) {
  SubstEndo acc = identity_endo(x.genus);
  for (const McgFactor& f : x.factors) acc = compose(acc, inverse_endo(f.gen));
  return acc;
}

enum class GenSet { all_quads, pinned_quads };

// The generating families: crosscap slides Y_{i;j} with i <= g-1, j != i,
// plus squared quad twists -- every ascending quadruple, or only those
// pinned at the first index.
inline std::vector<McgExpr> theorem_generators(int g, GenSet which) {
  detail::require(g >= 4, "theorem_generators: genus must be at least 4");
  std::vector<McgExpr> out;
  for (int i = 1; i <= g - 1; ++i)
    for (int j = 1; j <= g; ++j)
      if (j != i) out.push_back(expr_of(McgGen::y_slide(g, i, j)));
  if (which == GenSet::pinned_quads) {
    for (int j = 2; j <= g; ++j)
      for (int k = j + 1; k <= g; ++k)
        for (int l = k + 1; l <= g; ++l)
          out.push_back(expr_of(McgGen::t_square_quad(g, 1, j, k, l)));
  } else {
    for (int i = 1; i <= g; ++i)
      for (int j = i + 1; j <= g; ++j)
        for (int k = j + 1; k <= g; ++k)
          for (int l = k + 1; l <= g; ++l)
            out.push_back(expr_of(McgGen::t_square_quad(g, i, j, k, l)));
  }
  return out;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

struct GeneratorCount {
  long long count = 0;      // (g-1)^2 + C(g-1,3)
  long long predicted = 0;  // C(g,3) + C(g,2)
  bool equal = false;
};

inline GeneratorCount generator_count_identity(int g) {
  detail::require(g >= 4, "generator_count_identity: genus must be at least 4");
  GeneratorCount c;
  c.count = static_cast<long long>(g - 1) * (g - 1) + binomial(g - 1, 3);
  c.predicted = binomial(g, 3) + binomial(g, 2);
  c.equal = c.count == c.predicted;
  return c;
}

// Grammar:
//   expr := term (('*'|'.') term)*          ('.' also as the UTF-8 midpoint)
//   term := gen ('^' '-'? int)?
//   gen  := 'Y(i,j)' | 'T2(i,j)' | 'T2(i,j,k,l)' | 'push(word)'
namespace detail {
class ExprParser {
 public:
  ExprParser(int genus, std::string_view text) : g_(genus), s_(text) {}

  McgExpr parse() {
    McgExpr e{g_, {}};
    skip_ws();
    if (eof()) throw ParseError("empty expression", 0);
    parse_term(e);
    skip_ws();
    while (!eof()) {
      if (!eat_separator())
        throw ParseError("expected '*' between factors", pos_);
      skip_ws();
      parse_term(e);
      skip_ws();
    }
    return e;
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  bool eat_separator() {
    if (!eof() && peek() == '*') {
      ++pos_;
      return true;
    }
    // UTF-8 midpoint 0xC2 0xB7
    if (pos_ + 1 < s_.size() && static_cast<unsigned char>(s_[pos_]) == 0xC2 &&
        static_cast<unsigned char>(s_[pos_ + 1]) == 0xB7) {
      pos_ += 2;
      return true;
    }
    return false;
  }
  long long parse_int(bool allow_sign) {
    std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && !eof() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    if (eof() || peek() < '0' || peek() > '9')
      throw ParseError("expected integer", start);
    long long v = 0;
    while (!eof() && peek() >= '0' && peek() <= '9') {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }
  void expect(char c) {
    if (eof() || peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  int parse_index() {
    skip_ws();
    long long v = parse_int(false);
    if (v < 1 || v > g_)
      throw ParseError("index out of range for genus", pos_);
    return static_cast<int>(v);
  }

  McgGen parse_gen() {
    skip_ws();
    std::size_t start = pos_;
    if (!eof() && peek() == 'Y') {
      ++pos_;
      expect('(');
      int i = parse_index();
      skip_ws();
      expect(',');
      int j = parse_index();
      skip_ws();
      expect(')');
      if (i == j) throw ParseError("slide indices must differ", start);
      return McgGen::y_slide(g_, i, j);
    }
    if (pos_ + 1 < s_.size() && peek() == 'T' && s_[pos_ + 1] == '2') {
      pos_ += 2;
      expect('(');
      std::vector<int> idx;
      idx.push_back(parse_index());
      skip_ws();
      while (!eof() && peek() == ',') {
        ++pos_;
        idx.push_back(parse_index());
        skip_ws();
      }
      expect(')');
      if (idx.size() == 2) {
        if (idx[0] == idx[1])
          throw ParseError("twist indices must differ", start);
        return McgGen::t_square_pair(g_, idx[0], idx[1]);
      }
      if (idx.size() == 4) {
        if (!(idx[0] < idx[1] && idx[1] < idx[2] && idx[2] < idx[3]))
          throw ParseError("twist indices must be strictly ascending", start);
        return McgGen::t_square_quad(g_, idx[0], idx[1], idx[2], idx[3]);
      }
      throw ParseError("T2 takes two or four indices", start);
    }
    if (s_.substr(pos_, 5) == "push(") {
      pos_ += 5;
      std::size_t close = s_.find(')', pos_);
      if (close == std::string_view::npos)
        throw ParseError("unterminated push(...)", start);
      std::string_view inner = s_.substr(pos_, close - pos_);
      Word w;
      try {
        w = parse_word(g_, inner);
      } catch (const ParseError& pe) {
        throw ParseError(std::string("in push word: ") + pe.what(),
                         pos_ + pe.pos);
      }
      pos_ = close + 1;
      return McgGen::push(std::move(w));
    }
    throw ParseError("expected 'Y(', 'T2(' or 'push('", pos_);
  }

  void parse_term(McgExpr& e) {
    McgGen gen = parse_gen();
    long long exp = 1;
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      skip_ws();
      exp = parse_int(true);
    }
    const int sign = exp < 0 ? -1 : 1;
    for (long long k = 0; k < (exp < 0 ? -exp : exp); ++k)
      e.factors.push_back({gen, sign});
  }

  int g_;
  std::string_view s_;
  std::size_t pos_ = 0;
};
}  // namespace detail

inline McgExpr parse_expr(int genus, std::string_view text) {
  detail::require(genus >= 1, "parse_expr: genus must be positive");
  return detail::ExprParser(genus, text).parse();
}

inline std::string format_expr(const McgExpr& x) {
  if (x.factors.empty()) return "1";
  std::string out;
  for (const McgFactor& f : x.factors) {
    if (!out.empty()) out += " * ";
    switch (f.gen.kind) {
      case GenKind::y_slide:
        out += "Y(" + std::to_string(f.gen.i) + "," + std::to_string(f.gen.j) + ")";
        break;
      case GenKind::t_square_pair:
        out += "T2(" + std::to_string(f.gen.i) + "," + std::to_string(f.gen.j) + ")";
        break;
      case GenKind::t_square_quad:
        out += "T2(" + std::to_string(f.gen.i) + "," + std::to_string(f.gen.j) +
               "," + std::to_string(f.gen.k) + "," + std::to_string(f.gen.l) + ")";
        break;
      case GenKind::push:
        out += "push(" + format_word(f.gen.push_word) + ")";
        break;
    }
    if (f.exponent == -1) out += "^-1";
  }
  return out;
}

// Homology class of the four-index twist curve.
inline HClass quad_class(const McgGen& q) {
  detail::require(q.kind == GenKind::t_square_quad, "quad_class: not a quad");
  return HClass::basis(q.genus, q.i) + HClass::basis(q.genus, q.j) +
         HClass::basis(q.genus, q.k) + HClass::basis(q.genus, q.l);
}

}  // namespace gamma2
