#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "qcount/errors.hpp"
#include "qcount/ffield.hpp"
#include "qcount/inclexcl.hpp"
#include "qcount/partitions.hpp"
#include "qcount/perms.hpp"
#include "qcount/qcoeff.hpp"
#include "qcount/qpoly.hpp"
#include "qcount/subspaces.hpp"

namespace qcount {

struct VerifyCheck {
  std::string name;
  bool passed = true;
  long cases = 0;    // input combinations actually checked
  long skipped = 0;  // combinations refused by the budget
  std::string counterexample;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  [[nodiscard]] bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.passed; });
  }
};

namespace detail {

inline void record_failure(VerifyCheck& check, std::string counterexample) {
  check.passed = false;
  check.counterexample = std::move(counterexample);
}

// The coefficient is checked by three formula routes against each other;
// the fourth route (subspace enumeration) lives in its own check because it
// specializes q.
inline VerifyCheck check_binomial_methods(int n_max, const Budget& budget) {
  VerifyCheck check;
  check.name = "binomial-methods";
  for (int n = 0; n <= n_max && check.passed; ++n) {
    for (int k = 0; k <= n && check.passed; ++k) {
      QPolynomial product = qbinom_product(n, k);
      QPolynomial partitions = qbinom_partitions(n, k);
      std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      if (product != partitions) {
        record_failure(check, where + ": product " + product.to_string() +
                                  " vs partitions " + partitions.to_string());
        break;
      }
      try {
        QPolynomial permutations = qbinom_permutations(n, k, budget);
        if (product != permutations) {
          record_failure(check, where + ": product " + product.to_string() +
                                    " vs permutations " + permutations.to_string());
          break;
        }
      } catch (const BudgetExceeded&) {
        ++check.skipped;
      }
      ++check.cases;
    }
  }
  return check;
}

inline VerifyCheck check_binomial_specialization(int n_max,
                                                 const std::vector<std::uint32_t>& q_list,
                                                 const Budget& budget) {
  VerifyCheck check;
  check.name = "binomial-specialization";
  for (std::uint32_t q : q_list) {
    PrimeField field(q);
    for (int n = 0; n <= n_max && check.passed; ++n) {
      for (int k = 0; k <= n && check.passed; ++k) {
        if (predicted_rref_count(n, k, field) > budget.max_objects) {
          ++check.skipped;
          continue;
        }
        mpz_class by_formula = qbinom_product(n, k).eval_int(q);
        mpz_class by_census = count_subspaces(n, k, field, budget);
        if (by_formula != by_census) {
          record_failure(check, "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                    " k=" + std::to_string(k) + ": formula " +
                                    by_formula.get_str() + " vs census " +
                                    by_census.get_str());
          break;
        }
        ++check.cases;
      }
    }
  }
  return check;
}

inline VerifyCheck check_multinomial_methods(int n_max, const Budget& budget) {
  VerifyCheck check;
  check.name = "multinomial-methods";
  for (int n = 1; n <= n_max && check.passed; ++n) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
      DescentSpec spec(n, mask_to_positions(mask));
      QPolynomial chain = qmultinom_chain(n, spec);
      try {
        QPolynomial perms = qmultinom_permutations(n, spec, budget);
        if (chain != perms) {
          record_failure(check, "n=" + std::to_string(n) + " cuts mask=" +
                                    std::to_string(mask) + ": chain " + chain.to_string() +
                                    " vs permutations " + perms.to_string());
          break;
        }
        ++check.cases;
      } catch (const BudgetExceeded&) {
        ++check.skipped;
      }
    }
  }
  return check;
}

inline VerifyCheck check_flag_specialization(int n_max,
                                             const std::vector<std::uint32_t>& q_list,
                                             const Budget& budget) {
  VerifyCheck check;
  check.name = "flag-specialization";
  // Chain enumeration materializes every flag; n = 6 over F_2 already means
  // two million chains, so the sweep stops at 5 regardless of n_max.
  int cap = std::min(n_max, 5);
  for (std::uint32_t q : q_list) {
    PrimeField field(q);
    for (int n = 1; n <= cap && check.passed; ++n) {
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
        DescentSpec spec(n, mask_to_positions(mask));
        try {
          mpz_class by_census = count_flags(n, spec, field, budget);
          mpz_class by_formula = qmultinom_chain(n, spec).eval_int(q);
          if (by_formula != by_census) {
            record_failure(check, "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                      " cuts mask=" + std::to_string(mask) + ": formula " +
                                      by_formula.get_str() + " vs census " +
                                      by_census.get_str());
            break;
          }
          ++check.cases;
        } catch (const BudgetExceeded&) {
          ++check.skipped;
        }
      }
    }
  }
  return check;
}

inline VerifyCheck check_inversion_weight(int n_max) {
  VerifyCheck check;
  check.name = "inversion-weight-dictionary";
  for (int n = 0; n <= n_max && check.passed; ++n) {
    for (int k = 0; k <= n && check.passed; ++k) {
      BoxBound box{k, n - k};
      PartitionStream stream(box);
      while (auto lambda = stream.next()) {
        std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                            " lambda=" + lambda->to_string();
        if (path_to_diagram(diagram_to_path(*lambda, box)) != *lambda) {
          record_failure(check, where + ": path round trip broke");
          break;
        }
        long inv = inversion_count(diagram_to_permutation(*lambda, box));
        if (inv != lambda->weight()) {
          record_failure(check, where + ": inv " + std::to_string(inv) + " vs weight " +
                                    std::to_string(lambda->weight()));
          break;
        }
        ++check.cases;
      }
    }
  }
  return check;
}

inline VerifyCheck check_phi_lemma(int n_max, const Budget& budget) {
  VerifyCheck check;
  check.name = "composition-bijection";
  int cap = std::min(n_max, 7);
  for (int n = 1; n <= cap && check.passed; ++n) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
      DescentSpec spec(n, mask_to_positions(mask));
      std::string where = "n=" + std::to_string(n) + " cuts mask=" + std::to_string(mask);
      try {
        std::vector<Permutation> members;
        DescentPermStream stream(spec, budget);
        while (auto pi = stream.next()) members.push_back(*pi);

        bool broke = false;
        for (const Permutation& pi : members) {
          PhiFactors factors = factor_phi(pi, spec);
          int s = spec.cuts().empty() ? 0 : spec.cuts().back();
          if (compose_phi(factors.outer, factors.inner, s) != pi) {
            record_failure(check, where + " pi=" + pi.to_string() + ": round trip broke");
            broke = true;
            break;
          }
          long sum = inversion_count(factors.inner) + inversion_count(factors.outer);
          if (inversion_count(pi) != sum) {
            record_failure(check, where + " pi=" + pi.to_string() + ": inv " +
                                      std::to_string(inversion_count(pi)) +
                                      " vs split sum " + std::to_string(sum));
            broke = true;
            break;
          }
        }
        if (broke) break;

        if (!spec.cuts().empty()) {
          // Bijectivity of composition onto the descent class.
          int s = spec.cuts().back();
          std::vector<int> head_cuts(spec.cuts().begin(), spec.cuts().end() - 1);
          std::vector<Permutation> composed;
          DescentPermStream outer_stream(DescentSpec(n, {s}), budget);
          while (auto outer = outer_stream.next()) {
            DescentPermStream inner_stream(DescentSpec(s, head_cuts), budget);
            while (auto inner = inner_stream.next()) {
              composed.push_back(compose_phi(*outer, *inner, s));
            }
          }
          std::sort(composed.begin(), composed.end());
          if (std::adjacent_find(composed.begin(), composed.end()) != composed.end()) {
            record_failure(check, where + ": composition map is not injective");
            break;
          }
          std::vector<Permutation> expected = members;
          std::sort(expected.begin(), expected.end());
          if (composed != expected) {
            record_failure(check, where + ": composition image differs from the class");
            break;
          }
        }
        ++check.cases;
      } catch (const BudgetExceeded&) {
        ++check.skipped;
      }
    }
  }
  return check;
}

inline VerifyCheck check_descent_positivity(int n_max) {
  VerifyCheck check;
  check.name = "exact-descent-positivity";
  for (int n = 1; n <= n_max && check.passed; ++n) {
    QPolynomial total;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
      std::vector<int> t_set = mask_to_positions(mask);
      std::string where = "n=" + std::to_string(n) + " T mask=" + std::to_string(mask);
      QPolynomial poly;
      try {
        poly = descent_exact_polynomial(n, t_set);
      } catch (const NegativeCoefficient&) {
        record_failure(check, where + ": negative coefficient");
        break;
      }
      if (poly.eval_int(1) != descent_exact_count(n, t_set)) {
        record_failure(check, where + ": value at 1 differs from the count");
        break;
      }
      total = total + poly;
      ++check.cases;
    }
    if (check.passed && total != q_factorial(n)) {
      record_failure(check, "n=" + std::to_string(n) +
                                ": classes do not sum to the q-factorial");
    }
  }
  return check;
}

}  // namespace detail

/// Cross-method agreement suite: every identity the library implements,
/// checked on all inputs up to n_max, with enumeration oracles specialized
/// at the primes in q_list.  Combinations beyond the budget are skipped and
/// counted, never silently dropped.
inline VerifyReport run_verification(int n_max, const std::vector<std::uint32_t>& q_list,
                                     Budget budget = {}) {
  if (n_max < 0) throw DomainViolation("n_max must be nonnegative");
  VerifyReport report;
  report.checks.push_back(detail::check_binomial_methods(n_max, budget));
  report.checks.push_back(detail::check_binomial_specialization(n_max, q_list, budget));
  report.checks.push_back(detail::check_multinomial_methods(n_max, budget));
  report.checks.push_back(detail::check_flag_specialization(n_max, q_list, budget));
  report.checks.push_back(detail::check_inversion_weight(n_max));
  report.checks.push_back(detail::check_phi_lemma(n_max, budget));
  report.checks.push_back(detail::check_descent_positivity(n_max));
  return report;
}

}  // namespace qcount
