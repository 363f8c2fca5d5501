#pragma once

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <cstddef>
#include <numeric>
#include <vector>

#include "qcount/errors.hpp"
#include "qcount/qcoeff.hpp"
#include "qcount/qpoly.hpp"

namespace qcount {

/// A value attached to every subset of a small ordered ground set.  Subsets
/// are bit patterns: bit i stands for ground()[i].  Ground size is capped at
/// 20 so tables stay addressable and dense.
template <typename T>
class SubsetFunction {
 public:
  explicit SubsetFunction(std::vector<int> ground) : ground_(std::move(ground)) {
    if (ground_.size() > 20) throw DomainViolation("ground set larger than 20");
    values_.resize(std::size_t{1} << ground_.size());
  }

  explicit SubsetFunction(int ground_size)
      : SubsetFunction(make_range(ground_size)) {}

  /// Bulk construction from a prebuilt table of 2^|ground| values.
  SubsetFunction(std::vector<int> ground, std::vector<T> values)
      : ground_(std::move(ground)), values_(std::move(values)) {
    if (ground_.size() > 20) throw DomainViolation("ground set larger than 20");
    if (values_.size() != std::size_t{1} << ground_.size()) {
      throw ShapeMismatch("table must hold one value per subset");
    }
  }

  [[nodiscard]] int ground_size() const { return static_cast<int>(ground_.size()); }
  [[nodiscard]] const std::vector<int>& ground() const { return ground_; }
  [[nodiscard]] std::size_t table_size() const { return values_.size(); }
  [[nodiscard]] const std::vector<T>& values() const { return values_; }

  [[nodiscard]] const T& at(std::uint32_t mask) const { return values_.at(mask); }
  [[nodiscard]] T& at(std::uint32_t mask) { return values_.at(mask); }

  friend bool operator==(const SubsetFunction& a, const SubsetFunction& b) {
    return a.ground_ == b.ground_ && a.values_ == b.values_;
  }
  friend bool operator!=(const SubsetFunction& a, const SubsetFunction& b) {
    return !(a == b);
  }

  template <typename U>
  friend SubsetFunction<U> zeta_transform(SubsetFunction<U> f);
  template <typename U>
  friend SubsetFunction<U> mobius_transform(SubsetFunction<U> f);

 private:
  static std::vector<int> make_range(int r) {
    if (r < 0) throw DomainViolation("ground size must be nonnegative");
    std::vector<int> g(static_cast<std::size_t>(r));
    std::iota(g.begin(), g.end(), 1);
    return g;
  }

  std::vector<int> ground_;
  std::vector<T> values_;
};

/// Subset sums: result(T) = sum of f(S) over S inside T.  One in-place pass
/// per ground element, O(2^r * r) ring additions; the naive double sum kept
/// as this routine's oracle lives in the test suite.
template <typename T>
SubsetFunction<T> zeta_transform(SubsetFunction<T> f) {
  std::vector<T>& v = f.values_;
  for (int i = 0; i < f.ground_size(); ++i) {
    std::size_t bit = std::size_t{1} << i;
    for (std::size_t base = 0; base < v.size(); base += bit << 1) {
      for (std::size_t off = 0; off < bit; ++off) {
        v[base + bit + off] = v[base + bit + off] + v[base + off];
      }
    }
  }
  return f;
}

/// Alternating-sign inverse of zeta_transform:
/// result(T) = sum of (-1)^{|T minus S|} f(S) over S inside T.
template <typename T>
SubsetFunction<T> mobius_transform(SubsetFunction<T> f) {
  std::vector<T>& v = f.values_;
  for (int i = 0; i < f.ground_size(); ++i) {
    std::size_t bit = std::size_t{1} << i;
    for (std::size_t base = 0; base < v.size(); base += bit << 1) {
      for (std::size_t off = 0; off < bit; ++off) {
        v[base + bit + off] = v[base + bit + off] - v[base + off];
      }
    }
  }
  return f;
}

namespace detail {

inline std::uint32_t positions_to_mask(int n, const std::vector<int>& positions) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    bool increasing = i == 0 || positions[i] > positions[i - 1];
    if (positions[i] < 1 || positions[i] > n - 1 || !increasing) {
      throw DomainViolation("positions must strictly increase within 1..n-1");
    }
    mask |= std::uint32_t{1} << (positions[i] - 1);
  }
  return mask;
}

inline std::vector<int> mask_to_positions(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask >> i; ++i) {
    if (mask >> i & 1u) out.push_back(i + 1);
  }
  return out;
}

}  // namespace detail

/// Number of permutations of {1..n} whose descent set is exactly T, by
/// alternating block-count sums over the subsets of T.
inline mpz_class descent_exact_count(int n, const std::vector<int>& t_set) {
  if (n < 1) throw DomainViolation("n must be positive");
  std::uint32_t mask = detail::positions_to_mask(n, t_set);
  int t_size = std::popcount(mask);
  mpz_class total = 0;
  for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
    DescentSpec spec(n, detail::mask_to_positions(sub));
    mpz_class term = classical_multinomial(spec);
    if ((t_size - std::popcount(sub)) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    if (sub == 0) break;
  }
  return total;
}

/// Inversion generating function of the permutations with descent set
/// exactly T: the alternating sum of chain coefficients over subsets of T.
/// A negative coefficient cannot occur; one appearing means a defect in the
/// summands, so it is thrown rather than returned.
inline QPolynomial descent_exact_polynomial(int n, const std::vector<int>& t_set) {
  if (n < 1) throw DomainViolation("n must be positive");
  std::uint32_t mask = detail::positions_to_mask(n, t_set);
  int t_size = std::popcount(mask);
  QPolynomial total;
  for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
    DescentSpec spec(n, detail::mask_to_positions(sub));
    QPolynomial term = qmultinom_chain(n, spec);
    if ((t_size - std::popcount(sub)) % 2 == 0) {
      total = total + term;
    } else {
      total = total - term;
    }
    if (sub == 0) break;
  }
  if (!total.all_nonnegative()) {
    throw NegativeCoefficient("exact-descent polynomial came out negative");
  }
  return total;
}

}  // namespace qcount
