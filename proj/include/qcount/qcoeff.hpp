#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "qcount/errors.hpp"
#include "qcount/partitions.hpp"
#include "qcount/perms.hpp"
#include "qcount/qpoly.hpp"

namespace qcount {

struct QBinomialQuery {
  int n = 0;
  int k = 0;
};

namespace detail {

inline void check_binomial_domain(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DomainViolation("need 0 <= k <= n");
}

inline QPolynomial q_factorial(int n) {
  QPolynomial out = QPolynomial::one();
  for (int i = 1; i <= n; ++i) out = out * QPolynomial::q_integer(i);
  return out;
}

}  // namespace detail

/// Quotient of q-factorials, fully expanded before the two exact divisions.
/// Monic of degree k(n-k) with positive coefficients.
inline QPolynomial qbinom_product(int n, int k) {
  detail::check_binomial_domain(n, k);
  QPolynomial quotient = div_exact(detail::q_factorial(n), detail::q_factorial(k));
  return div_exact(quotient, detail::q_factorial(n - k));
}

/// Generating function of the diagrams in the k-by-(n-k) box: the q^r
/// coefficient counts the partitions of r fitting there.
inline QPolynomial qbinom_partitions(int n, int k) {
  detail::check_binomial_domain(n, k);
  std::vector<mpz_class> coeffs;
  long top = static_cast<long>(k) * (n - k);
  coeffs.reserve(static_cast<std::size_t>(top) + 1);
  for (long r = 0; r <= top; ++r) coeffs.push_back(count_partitions(r, k, n - k));
  return QPolynomial(std::move(coeffs));
}

/// Inversion generating function over the permutations whose only possible
/// descent is at k.
inline QPolynomial qbinom_permutations(int n, int k, Budget budget = {}) {
  detail::check_binomial_domain(n, k);
  if (n == 0) return QPolynomial::one();
  std::vector<int> cuts;
  if (k > 0 && k < n) cuts.push_back(k);
  DescentPermStream stream{DescentSpec(n, cuts), budget};
  QPolynomial total;
  while (auto pi = stream.next()) {
    total = total + QPolynomial::monomial(1, inversion_count(*pi));
  }
  return total;
}

/// Telescoping product over the nested dimensions:
/// [s_2 over s_1] [s_3 over s_2] ... [n over s_{m-1}].
inline QPolynomial qmultinom_chain(int n, const DescentSpec& spec) {
  if (spec.n() != n) throw ShapeMismatch("spec made for a different n");
  QPolynomial out = QPolynomial::one();
  const std::vector<int>& cuts = spec.cuts();
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    int upper = i + 1 < cuts.size() ? cuts[i + 1] : n;
    out = out * qbinom_product(upper, cuts[i]);
  }
  return out;
}

/// Inversion generating function over all permutations with descents inside
/// the cuts.
inline QPolynomial qmultinom_permutations(int n, const DescentSpec& spec,
                                          Budget budget = {}) {
  if (spec.n() != n) throw ShapeMismatch("spec made for a different n");
  DescentPermStream stream{spec, budget};
  QPolynomial total;
  while (auto pi = stream.next()) {
    total = total + QPolynomial::monomial(1, inversion_count(*pi));
  }
  return total;
}

/// n! / (k_1! ... k_m!), the number of ways to deal {1..n} into blocks of
/// the given sizes; also the block-ascending permutation count.
inline mpz_class classical_multinomial(const DescentSpec& spec) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(spec.n()));
  for (int k : spec.parts()) {
    mpz_class part_factorial;
    mpz_fac_ui(part_factorial.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), part_factorial.get_mpz_t());
  }
  return out;
}

struct StructureReport {
  bool monic = false;
  long degree = -1;  // -1 for the zero polynomial
  long expected_degree = 0;
  bool palindromic = false;
  bool unimodal = false;
  bool all_positive = false;
};

/// Structural predicates of a coefficient against the block sizes that
/// produced it; the expected degree is the number of cross-block pairs,
/// sum over i<j of k_i k_j.
inline StructureReport structure_report_for_parts(const QPolynomial& p,
                                                  const std::vector<int>& parts) {
  StructureReport out;
  long expected = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      expected += static_cast<long>(parts[i]) * parts[j];
    }
  }
  out.expected_degree = expected;
  out.monic = p.is_monic();
  out.degree = p.is_zero() ? -1 : static_cast<long>(p.degree());
  out.palindromic = p.is_palindromic();
  out.unimodal = p.is_unimodal();
  out.all_positive = p.all_positive();
  return out;
}

inline StructureReport structure_report(const QPolynomial& p, int n,
                                        const DescentSpec& spec) {
  if (spec.n() != n) throw ShapeMismatch("spec made for a different n");
  return structure_report_for_parts(p, spec.parts());
}

inline StructureReport structure_report(const QPolynomial& p, const QBinomialQuery& query) {
  detail::check_binomial_domain(query.n, query.k);
  std::vector<int> parts;
  if (query.k > 0) parts.push_back(query.k);
  if (query.n - query.k > 0) parts.push_back(query.n - query.k);
  return structure_report_for_parts(p, parts);
}

}  // namespace qcount
