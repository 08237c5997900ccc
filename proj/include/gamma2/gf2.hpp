#pragma once

// Exact linear algebra over the two-element field.
//
// Vectors are machine-word packed bit arrays; all elimination is XOR based.
// Subspaces are kept in reduced row-echelon form with ordered pivots, so
// subspace equality is plain row-list equality.  Ambient dimensions are
// carried explicitly and checked on every binary operation.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gamma2 {

namespace detail {
inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}
}  // namespace detail

// Fixed-length bit vector; unused tail bits of the last word stay zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

  static BitVec unit(std::size_t len, std::size_t pos) {
    BitVec v(len);
    v.set(pos);
    return v;
  }

  std::size_t len() const { return len_; }

  bool get(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void clear(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    detail::require(len_ == o.len_, "BitVec: length mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  bool is_zero() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }

  // Index of the lowest set bit, or npos when zero.
  static constexpr std::size_t npos = ~std::size_t(0);
  std::size_t lowest_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return (k << 6) + std::countr_zero(w_[k]);
    return npos;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : w_) n += std::popcount(w);
    return n;
  }

  // Parity of the overlap |this AND other|.
  int dot(const BitVec& o) const {
    detail::require(len_ == o.len_, "BitVec: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f((k << 6) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  bool operator==(const BitVec&) const = default;

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> w_;
};

// A list of equal-length rows; no echelon invariant.
struct BitMatrix {
  std::size_t ncols = 0;
  std::vector<BitVec> rows;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t ncols) : ncols(ncols) {}

  void add_row(BitVec v) {
    detail::require(v.len() == ncols, "BitMatrix: row length mismatch");
    rows.push_back(std::move(v));
  }
  std::size_t nrows() const { return rows.size(); }

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.add_row(BitVec::unit(n, i));
    return m;
  }

  bool operator==(const BitMatrix&) const = default;
};

// Forward elimination with a column -> row index. No back substitution, so
// insertion cost stays proportional to the pivot collisions actually hit;
// that is what keeps the genus-32 tensor ranks cheap.
class Echelon {
 public:
  explicit Echelon(std::size_t ambient, std::size_t tag_width = 0)
      : ambient_(ambient), tagw_(tag_width), row_at_(ambient, -1) {}

  struct InsertResult {
    bool added;
    BitVec tag;  // combination of previously inserted vectors (incl. own tag)
  };

  InsertResult insert(BitVec v, BitVec tag) {
    detail::require(v.len() == ambient_, "Echelon: ambient mismatch");
    for (;;) {
      std::size_t p = v.lowest_set();
      if (p == BitVec::npos) return {false, std::move(tag)};
      std::int64_t r = row_at_[p];
      if (r < 0) {
        row_at_[p] = static_cast<std::int64_t>(rows_.size());
        rows_.push_back(std::move(v));
        tags_.push_back(tag);
        return {true, std::move(tag)};
      }
      v ^= rows_[static_cast<std::size_t>(r)];
      if (tagw_) tag ^= tags_[static_cast<std::size_t>(r)];
    }
  }

  bool insert(BitVec v) { return insert(std::move(v), BitVec(tagw_)).added; }

  // Residue of v modulo the rows, plus the combination used.
  std::pair<BitVec, BitVec> reduce(BitVec v) const {
    detail::require(v.len() == ambient_, "Echelon: ambient mismatch");
    BitVec comb(tagw_);
    for (;;) {
      std::size_t p = v.lowest_set();
      if (p == BitVec::npos) break;
      std::int64_t r = row_at_[p];
      if (r < 0) break;
      v ^= rows_[static_cast<std::size_t>(r)];
      if (tagw_) comb ^= tags_[static_cast<std::size_t>(r)];
    }
    return {std::move(v), std::move(comb)};
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<BitVec>& tags() const { return tags_; }

 private:
  std::size_t ambient_;
  std::size_t tagw_;
  std::vector<BitVec> rows_, tags_;
  std::vector<std::int64_t> row_at_;
};

inline std::size_t rank(const BitMatrix& m) {
  Echelon e(m.ncols);
  for (const BitVec& r : m.rows) e.insert(r);
  return e.rank();
}

// Row space of a matrix in canonical form: reduced row-echelon, pivots
// strictly increasing, no zero rows.  Two subspaces are equal iff their
// canonical bases are identical row lists.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<BitVec>& vectors) {
    Subspace s(ambient);
    for (const BitVec& v : vectors) s.insert(v);
    return s;
  }
  static Subspace span(const BitMatrix& m) { return span(m.ncols, m.rows); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<BitVec>& basis() const { return rows_; }

  bool contains(const BitVec& v) const {
    detail::require(v.len() == ambient_, "Subspace: ambient mismatch");
    BitVec t = v;
    for (const BitVec& r : rows_) {
      if (t.get(r.lowest_set())) t ^= r;
    }
    return t.is_zero();
  }

  bool operator==(const Subspace&) const = default;

 private:
  void insert(BitVec v) {
    detail::require(v.len() == ambient_, "Subspace: ambient mismatch");
    for (const BitVec& r : rows_)
      if (v.get(r.lowest_set())) v ^= r;
    if (v.is_zero()) return;
    std::size_t p = v.lowest_set();
    for (BitVec& r : rows_)
      if (r.get(p)) r ^= v;
    auto it = rows_.begin();
    while (it != rows_.end() && it->lowest_set() < p) ++it;
    rows_.insert(it, std::move(v));
  }

  std::size_t ambient_ = 0;
  std::vector<BitVec> rows_;
};

inline BitMatrix rref(const BitMatrix& m) {
  Subspace s = Subspace::span(m);
  BitMatrix out(m.ncols);
  for (const BitVec& r : s.basis()) out.add_row(r);
  return out;
}

inline bool span_membership(const BitVec& v, const Subspace& s) {
  return s.contains(v);
}

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
};

// Zassenhaus: eliminate rows [a|a] and [b|0]; echelon rows whose left half
// is nonzero carry a sum basis, rows with zero left half carry the
// intersection in the right half.
inline SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
  detail::require(a.ambient() == b.ambient(), "subspace_ops: ambient mismatch");
  const std::size_t n = a.ambient();
  Echelon e(2 * n);
  auto joined = [n](const BitVec& left, const BitVec* right) {
    BitVec v(2 * n);
    left.for_each_set([&](std::size_t i) { v.set(i); });
    if (right) right->for_each_set([&](std::size_t i) { v.set(n + i); });
    return v;
  };
  for (const BitVec& r : a.basis()) e.insert(joined(r, &r));
  for (const BitVec& r : b.basis()) e.insert(joined(r, nullptr));

  std::vector<BitVec> sum_rows, inter_rows;
  for (const BitVec& row : e.rows()) {
    BitVec left(n), right(n);
    row.for_each_set([&](std::size_t i) {
      if (i < n)
        left.set(i);
      else
        right.set(i - n);
    });
    if (left.is_zero())
      inter_rows.push_back(std::move(right));
    else
      sum_rows.push_back(std::move(left));
  }
  return {Subspace::span(n, sum_rows), Subspace::span(n, inter_rows)};
}

struct SumDecomposition {
  BitVec in_first;
  BitVec in_second;
};

// Decompose vectors of a+b against fixed subspaces a and b.  When the
// intersection is trivial the decomposition is unique, hence deterministic.
class SumSolver {
 public:
  SumSolver(const Subspace& a, const Subspace& b)
      : a_rows_(a.basis()),
        b_rows_(b.basis()),
        ech_(a.ambient(), a.dim() + b.dim()) {
    detail::require(a.ambient() == b.ambient(), "SumSolver: ambient mismatch");
    std::size_t tag = 0;
    for (const BitVec& r : a_rows_)
      ech_.insert(r, BitVec::unit(ech_tag_width(), tag++));
    for (const BitVec& r : b_rows_)
      ech_.insert(r, BitVec::unit(ech_tag_width(), tag++));
  }

  std::optional<SumDecomposition> solve(const BitVec& t) const {
    auto [residue, comb] = ech_.reduce(t);
    if (!residue.is_zero()) return std::nullopt;
    SumDecomposition d{BitVec(ech_.ambient()), BitVec(ech_.ambient())};
    comb.for_each_set([&](std::size_t k) {
      if (k < a_rows_.size())
        d.in_first ^= a_rows_[k];
      else
        d.in_second ^= b_rows_[k - a_rows_.size()];
    });
    return d;
  }

 private:
  std::size_t ech_tag_width() const { return a_rows_.size() + b_rows_.size(); }

  std::vector<BitVec> a_rows_, b_rows_;
  Echelon ech_;
};

inline std::optional<SumDecomposition> solve_in_sum(const BitVec& t,
                                                    const Subspace& a,
                                                    const Subspace& b) {
  detail::require(t.len() == a.ambient(), "solve_in_sum: ambient mismatch");
  return SumSolver(a, b).solve(t);
}

}  // namespace gamma2
