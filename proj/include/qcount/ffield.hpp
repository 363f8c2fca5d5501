#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcount/errors.hpp"

namespace qcount {

/// Prime field F_p.  The modulus is checked by trial division and capped at
/// 2^16 so that a product of two residues always fits a 64-bit accumulator
/// with room for desk-scale dot products.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 16)) throw DomainViolation("modulus outside 2..65535");
    for (std::uint32_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw DomainViolation("modulus is not prime");
    }
  }

  [[nodiscard]] std::uint32_t p() const { return p_; }

  [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  [[nodiscard]] std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  [[nodiscard]] std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) { return !(a == b); }

 private:
  std::uint32_t p_;
};

/// Multiplicative inverse by the extended Euclid algorithm.
inline std::uint32_t field_inv(const PrimeField& field, std::uint32_t x) {
  if (x == 0) throw DivisionByZero("no inverse of zero");
  if (x >= field.p()) throw DomainViolation("residue outside 0..p-1");
  std::int64_t r0 = field.p(), r1 = x, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t quotient = r0 / r1;
    r0 -= quotient * r1;
    std::swap(r0, r1);
    t0 -= quotient * t1;
    std::swap(t0, t1);
  }
  return static_cast<std::uint32_t>(t0 < 0 ? t0 + field.p() : t0);
}

/// Dense matrix over a prime field, row-major.  Rows and columns are
/// addressed 0-based through at(); pivot lists elsewhere speak 1-based
/// column numbers, matching the written convention for matrices.
class FMatrix {
 public:
  FMatrix(PrimeField field, int rows, int cols, std::vector<std::uint32_t> entries)
      : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0 ||
        entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
      throw ShapeMismatch("entry count differs from rows*cols");
    }
    for (std::uint32_t e : entries_) {
      if (e >= field_.p()) throw DomainViolation("entry outside 0..p-1");
    }
  }

  static FMatrix zero(PrimeField field, int rows, int cols) {
    return FMatrix(field, rows, cols,
                   std::vector<std::uint32_t>(
                       static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0));
  }

  static FMatrix identity(PrimeField field, int n) {
    FMatrix m = zero(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  [[nodiscard]] const PrimeField& field() const { return field_; }
  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }

  [[nodiscard]] std::uint32_t at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }

  void set(int r, int c, std::uint32_t v) {
    entries_[static_cast<std::size_t>(r) * cols_ + c] = v;
  }

  friend bool operator==(const FMatrix& a, const FMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }
  friend bool operator!=(const FMatrix& a, const FMatrix& b) { return !(a == b); }
  friend bool operator<(const FMatrix& a, const FMatrix& b) {
    return a.entries_ < b.entries_;
  }

  /// "0 1 1 0 0 1 2; 0 0 0 1 0 2 0; 0 0 0 0 1 0 1"
  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
      if (r > 0) out += "; ";
      for (int c = 0; c < cols_; ++c) {
        if (c > 0) out += " ";
        out += std::to_string(at(r, c));
      }
    }
    return out;
  }

 private:
  PrimeField field_;
  int rows_;
  int cols_;
  std::vector<std::uint32_t> entries_;
};

inline FMatrix multiply(const FMatrix& a, const FMatrix& b) {
  if (a.field() != b.field()) throw DomainViolation("mixed fields");
  if (a.cols() != b.rows()) throw ShapeMismatch("inner dimensions differ");
  FMatrix out = FMatrix::zero(a.field(), a.rows(), b.cols());
  std::uint32_t p = a.field().p();
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      std::uint64_t acc = 0;
      for (int t = 0; t < a.cols(); ++t) {
        acc = (acc + static_cast<std::uint64_t>(a.at(i, t)) * b.at(t, j)) % p;
      }
      out.set(i, j, static_cast<std::uint32_t>(acc));
    }
  }
  return out;
}

/// a on top of b.
inline FMatrix stack(const FMatrix& a, const FMatrix& b) {
  if (a.field() != b.field()) throw DomainViolation("mixed fields");
  if (a.cols() != b.cols()) throw ShapeMismatch("column counts differ");
  FMatrix out = FMatrix::zero(a.field(), a.rows() + b.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
  }
  for (int r = 0; r < b.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b.at(r, c));
  }
  return out;
}

struct RrefResult {
  FMatrix matrix;
  int rank = 0;
  std::vector<int> pivots;  // 1-based columns of the leading 1s, ascending
};

/// Gaussian elimination by elementary row operations: scan columns left to
/// right, pick the first usable pivot row, scale its leading entry to 1,
/// clear the rest of the column.  Zero rows sink to the bottom.
inline RrefResult rref_reduce(const FMatrix& m) {
  FMatrix a = m;
  const PrimeField& f = a.field();
  int rank = 0;
  std::vector<int> pivots;
  for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
    int pivot_row = -1;
    for (int r = rank; r < a.rows(); ++r) {
      if (a.at(r, col) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) {
      for (int c = 0; c < a.cols(); ++c) {
        std::uint32_t tmp = a.at(rank, c);
        a.set(rank, c, a.at(pivot_row, c));
        a.set(pivot_row, c, tmp);
      }
    }
    std::uint32_t scale = field_inv(f, a.at(rank, col));
    if (scale != 1) {
      for (int c = col; c < a.cols(); ++c) a.set(rank, c, f.mul(a.at(rank, c), scale));
    }
    for (int r = 0; r < a.rows(); ++r) {
      if (r == rank || a.at(r, col) == 0) continue;
      std::uint32_t factor = a.at(r, col);
      for (int c = col; c < a.cols(); ++c) {
        a.set(r, c, f.sub(a.at(r, c), f.mul(factor, a.at(rank, c))));
      }
    }
    pivots.push_back(col + 1);
    ++rank;
  }
  return {std::move(a), rank, std::move(pivots)};
}

inline int rank_of(const FMatrix& m) { return rref_reduce(m).rank; }

/// The three reduced-echelon conditions: every nonzero row leads with a 1,
/// each leading 1 is alone in its column, and the leading positions strictly
/// increase down the rows (zero rows only at the bottom).
inline bool is_rref(const FMatrix& m) {
  int prev_lead = -1;
  bool seen_zero_row = false;
  for (int r = 0; r < m.rows(); ++r) {
    int lead = -1;
    for (int c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != 0) {
        lead = c;
        break;
      }
    }
    if (lead < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (m.at(r, lead) != 1) return false;
    if (lead <= prev_lead) return false;
    for (int rr = 0; rr < m.rows(); ++rr) {
      if (rr != r && m.at(rr, lead) != 0) return false;
    }
    prev_lead = lead;
  }
  return true;
}

}  // namespace qcount
