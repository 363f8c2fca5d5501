#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qcount/errors.hpp"

namespace qcount {

/// Dense univariate polynomial in the indeterminate q with exact
/// arbitrary-precision integer coefficients.  Coefficient i is the
/// coefficient of q^i.  The sequence is always normalized: the last
/// stored coefficient is nonzero, and the zero polynomial is the
/// empty sequence.  Values are immutable after construction.
class QPolynomial {
 public:
  QPolynomial() = default;

  explicit QPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  QPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  /// The constant polynomial c.
  static QPolynomial constant(const mpz_class& c) {
    QPolynomial p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
  }

  static QPolynomial one() { return constant(1); }

  /// c * q^e.
  static QPolynomial monomial(const mpz_class& c, std::size_t e) {
    QPolynomial p;
    if (c != 0) {
      p.coeffs_.assign(e + 1, mpz_class(0));
      p.coeffs_[e] = c;
    }
    return p;
  }

  /// 1 + q + ... + q^(i-1), the q-analog of the integer i.
  static QPolynomial q_integer(std::size_t i) {
    QPolynomial p;
    p.coeffs_.assign(i, mpz_class(1));
    return p;
  }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  /// Degree of a nonzero polynomial.  The degree of zero is undefined.
  [[nodiscard]] std::size_t degree() const {
    if (is_zero()) throw Error("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
  }

  /// Coefficient of q^i; zero beyond the stored range.
  [[nodiscard]] const mpz_class& coefficient(std::size_t i) const {
    static const mpz_class kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
  }

  [[nodiscard]] const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  [[nodiscard]] bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  [[nodiscard]] bool all_positive() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpz_class& c) { return c > 0; });
  }

  [[nodiscard]] bool all_nonnegative() const {
    return std::none_of(coeffs_.begin(), coeffs_.end(),
                        [](const mpz_class& c) { return c < 0; });
  }

  /// Coefficients rise weakly then fall weakly.
  [[nodiscard]] bool is_unimodal() const {
    std::size_t i = 1;
    while (i < coeffs_.size() && coeffs_[i - 1] <= coeffs_[i]) ++i;
    while (i < coeffs_.size() && coeffs_[i - 1] >= coeffs_[i]) ++i;
    return i >= coeffs_.size();
  }

  /// Coefficient sequence equals its reverse.
  [[nodiscard]] bool is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
  }

  /// Exact evaluation at an integer point (Horner).
  [[nodiscard]] mpz_class eval_int(const mpz_class& x) const {
    mpz_class acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return QPolynomial(std::move(out));
  }

  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
    std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return QPolynomial(std::move(out));
  }

  friend QPolynomial operator-(const QPolynomial& a) {
    std::vector<mpz_class> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return QPolynomial(std::move(out));
  }

  /// Exact convolution product.
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return QPolynomial(std::move(out));
  }

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

  /// Canonical text form: "c0 + c1*q + c2*q^2 + ...", zero terms omitted,
  /// unit coefficients on q-powers suppressed.  The zero polynomial is "0".
  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const mpz_class& c = coeffs_[i];
      if (c == 0) continue;
      mpz_class mag = c < 0 ? mpz_class(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (i == 0) {
        out += mag.get_str();
      } else {
        if (mag != 1) {
          out += mag.get_str();
          out += "*";
        }
        out += "q";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  /// Coefficients as decimal strings, low-to-high; the canonical JSON payload.
  [[nodiscard]] std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<mpz_class> coeffs_;
};

/// Exact quotient num/den.  Long division with a divisibility check per
/// quotient coefficient; throws NonExactDivision if the remainder is
/// nonzero or any coefficient is non-integral, which signals a caller bug
/// since every quotient taken in this library is exact.
inline QPolynomial div_exact(const QPolynomial& num, const QPolynomial& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) {
    throw NonExactDivision("quotient degree would be negative");
  }
  std::vector<mpz_class> rem(num.coefficients());
  const std::vector<mpz_class>& d = den.coefficients();
  const mpz_class& lead = d.back();
  std::vector<mpz_class> quot(num.degree() - den.degree() + 1, mpz_class(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpz_class& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NonExactDivision("non-integral quotient coefficient at q^" + std::to_string(k));
    }
    mpz_class c = top / lead;
    quot[k] = c;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw NonExactDivision("nonzero remainder");
  }
  return QPolynomial(std::move(quot));
}

}  // namespace qcount
