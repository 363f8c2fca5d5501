#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qcount/errors.hpp"
#include "qcount/ffield.hpp"
#include "qcount/partitions.hpp"
#include "qcount/perms.hpp"

namespace qcount {

/// A full-rank matrix in reduced echelon form: the canonical name of the
/// subspace spanned by its rows.  Pivots are recorded 1-based.
class RrefMatrix {
 public:
  explicit RrefMatrix(FMatrix matrix) : matrix_(std::move(matrix)) {
    if (!is_rref(matrix_)) throw DomainViolation("matrix is not in reduced echelon form");
    for (int r = 0; r < matrix_.rows(); ++r) {
      int lead = -1;
      for (int c = 0; c < matrix_.cols(); ++c) {
        if (matrix_.at(r, c) != 0) {
          lead = c;
          break;
        }
      }
      if (lead < 0) throw DomainViolation("zero row: matrix must have full rank");
      pivots_.push_back(lead + 1);
    }
  }

  [[nodiscard]] const FMatrix& matrix() const { return matrix_; }
  [[nodiscard]] const std::vector<int>& pivots() const { return pivots_; }
  [[nodiscard]] int rank() const { return matrix_.rows(); }
  [[nodiscard]] int n() const { return matrix_.cols(); }
  [[nodiscard]] const PrimeField& field() const { return matrix_.field(); }

  friend bool operator==(const RrefMatrix& a, const RrefMatrix& b) {
    return a.matrix_ == b.matrix_;
  }
  friend bool operator!=(const RrefMatrix& a, const RrefMatrix& b) { return !(a == b); }
  friend bool operator<(const RrefMatrix& a, const RrefMatrix& b) {
    return a.matrix_ < b.matrix_;
  }

 private:
  FMatrix matrix_;
  std::vector<int> pivots_;
};

/// Values for the free entries of an echelon matrix of a given shape,
/// row-major over the stars.
class StarFilling {
 public:
  StarFilling(Partition shape, std::vector<std::uint32_t> values)
      : shape_(std::move(shape)), values_(std::move(values)) {
    if (static_cast<long>(values_.size()) != shape_.weight()) {
      throw ShapeMismatch("filling length differs from the shape's weight");
    }
  }

  [[nodiscard]] const Partition& shape() const { return shape_; }
  [[nodiscard]] const std::vector<std::uint32_t>& values() const { return values_; }

 private:
  Partition shape_;
  std::vector<std::uint32_t> values_;
};

/// Nested subspaces of strictly increasing dimensions, each given by its
/// canonical echelon basis.  Containment is certified by rank: V is inside W
/// iff stacking V on W leaves the rank at dim W.
class FlagChain {
 public:
  FlagChain(PrimeField field, int n, std::vector<RrefMatrix> subspaces)
      : field_(field), n_(n), subspaces_(std::move(subspaces)) {
    for (std::size_t i = 0; i < subspaces_.size(); ++i) {
      if (subspaces_[i].field() != field_ || subspaces_[i].n() != n_) {
        throw ShapeMismatch("chain member in the wrong ambient space");
      }
      if (i > 0) {
        if (subspaces_[i - 1].rank() >= subspaces_[i].rank()) {
          throw DomainViolation("chain dimensions must strictly increase");
        }
        FMatrix stacked = stack(subspaces_[i - 1].matrix(), subspaces_[i].matrix());
        if (rank_of(stacked) != subspaces_[i].rank()) {
          throw DomainViolation("chain member not contained in its successor");
        }
      }
    }
  }

  [[nodiscard]] const PrimeField& field() const { return field_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<RrefMatrix>& subspaces() const { return subspaces_; }

 private:
  PrimeField field_;
  int n_;
  std::vector<RrefMatrix> subspaces_;
};

/// Row i keeps its entries right of the leading 1 and outside pivot columns;
/// with pivots p_1 < ... < p_k in an n-column matrix that leaves
/// n - p_i - (k - i) free entries, a weakly decreasing sequence.
inline Partition matrix_to_diagram(const RrefMatrix& r) {
  int k = r.rank();
  int n = r.n();
  std::vector<int> parts;
  for (int i = 1; i <= k; ++i) {
    int free_entries = n - r.pivots()[i - 1] - (k - i);
    if (free_entries > 0) parts.push_back(free_entries);
  }
  return Partition(std::move(parts));
}

/// The free entries of row i, in increasing column order, rows top to bottom.
inline StarFilling extract_filling(const RrefMatrix& r) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(r.n()) + 1, false);
  for (int p : r.pivots()) is_pivot[p] = true;
  std::vector<std::uint32_t> values;
  for (int i = 1; i <= r.rank(); ++i) {
    for (int c = r.pivots()[i - 1] + 1; c <= r.n(); ++c) {
      if (!is_pivot[c]) values.push_back(r.matrix().at(i - 1, c - 1));
    }
  }
  return {matrix_to_diagram(r), std::move(values)};
}

/// Unique echelon matrix with the given shape and free-entry values: row i
/// gets its leading 1 at column n - (k - i) - lambda_i, zeros in the other
/// pivot columns, and the filling row-major in the free columns.
inline RrefMatrix build_rref(const Partition& shape, const BoxBound& box,
                             const StarFilling& filling, const PrimeField& field) {
  if (filling.shape() != shape) throw ShapeMismatch("filling made for a different shape");
  if (!fits_in_box(shape, box)) throw DomainViolation("shape outside the box");
  for (std::uint32_t v : filling.values()) {
    if (v >= field.p()) throw DomainViolation("filling value outside 0..p-1");
  }
  int k = box.rows;
  int n = box.rows + box.cols;
  std::vector<int> pivots;
  for (int i = 1; i <= k; ++i) {
    pivots.push_back(n - (k - i) - shape.part(static_cast<std::size_t>(i)));
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(n) + 1, false);
  for (int p : pivots) is_pivot[p] = true;
  FMatrix m = FMatrix::zero(field, k, n);
  std::size_t next_value = 0;
  for (int i = 1; i <= k; ++i) {
    m.set(i - 1, pivots[i - 1] - 1, 1);
    for (int c = pivots[i - 1] + 1; c <= n; ++c) {
      if (!is_pivot[c]) m.set(i - 1, c - 1, filling.values()[next_value++]);
    }
  }
  return RrefMatrix(std::move(m));
}

/// Number of rank-k echelon matrices with n columns over F_q, computed from
/// the shape census (q^{|lambda|} fillings per shape) without enumeration.
/// Serves as the budget predictor for the streams below.
inline mpz_class predicted_rref_count(int n, int k, const PrimeField& field) {
  mpz_class total = 0;
  mpz_class power = 1;
  for (long r = 0; r <= static_cast<long>(k) * (n - k); ++r) {
    total += count_partitions(r, k, n - k) * power;
    power *= field.p();
  }
  return total;
}

/// Streams every rank-k echelon matrix exactly once: pivot sets in ascending
/// colexicographic order, and for each pivot set the fillings in
/// lexicographic order of their row-major value tuples.
class RrefStream {
 public:
  RrefStream(int n, int k, PrimeField field, Budget budget = {})
      : n_(n), k_(k), field_(field), box_{k, n - k} {
    if (k < 0 || k > n) throw DomainViolation("need 0 <= k <= n");
    if (predicted_rref_count(n, k, field) > budget.max_objects) {
      throw BudgetExceeded("predicted echelon count above the object cap");
    }
    pivots_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots_[i] = i + 1;
    load_shape();
  }

  std::optional<RrefMatrix> next() {
    if (done_) return std::nullopt;
    RrefMatrix out =
        build_rref(shape_, box_, StarFilling(shape_, values_), field_);
    advance();
    return out;
  }

 private:
  // Shape of the free region for the current pivot set; resets the filling.
  void load_shape() {
    std::vector<int> parts;
    for (int i = 1; i <= k_; ++i) {
      int free_entries = n_ - pivots_[i - 1] - (k_ - i);
      if (free_entries > 0) parts.push_back(free_entries);
    }
    shape_ = Partition(std::move(parts));
    values_.assign(static_cast<std::size_t>(shape_.weight()), 0);
  }

  // Colex successor: bump the lowest pivot with room before its neighbor,
  // dropping the ones below it back to 1,2,...
  bool next_pivot_set() {
    for (int j = 0; j < k_; ++j) {
      int ceiling = j + 1 < k_ ? pivots_[j + 1] : n_ + 1;
      if (pivots_[j] + 1 < ceiling) {
        ++pivots_[j];
        for (int t = 0; t < j; ++t) pivots_[t] = t + 1;
        return true;
      }
    }
    return false;
  }

  void advance() {
    // Odometer over the filling values, last position fastest.
    for (int i = static_cast<int>(values_.size()) - 1; i >= 0; --i) {
      if (values_[i] + 1 < field_.p()) {
        ++values_[i];
        std::fill(values_.begin() + i + 1, values_.end(), 0);
        return;
      }
      values_[i] = 0;
    }
    if (next_pivot_set()) {
      load_shape();
    } else {
      done_ = true;
    }
  }

  int n_;
  int k_;
  PrimeField field_;
  BoxBound box_;
  std::vector<int> pivots_;
  Partition shape_;
  std::vector<std::uint32_t> values_;
  bool done_ = false;
};

/// Definitional subspace count: walk the echelon stream and count.  The
/// formula-based shortcut stays in predicted_rref_count; this one earns its
/// keep by actually enumerating.
inline mpz_class count_subspaces(int n, int k, PrimeField field, Budget budget = {}) {
  RrefStream stream(n, k, field, budget);
  mpz_class count = 0;
  while (stream.next()) ++count;
  return count;
}

/// All chains of nested subspaces with the given dimensions, built top-down:
/// choose the outermost subspace V with basis R, enumerate chains inside F^s
/// recursively, then push them into the ambient space through R (row spaces
/// of M.R for each inner member M).
inline std::vector<FlagChain> enumerate_flags(int n, const std::vector<int>& dims,
                                              PrimeField field, Budget budget = {}) {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    bool increasing = i == 0 || dims[i] > dims[i - 1];
    if (dims[i] < 1 || dims[i] > n || !increasing) {
      throw DomainViolation("dimensions must strictly increase within 1..n");
    }
  }
  mpz_class predicted = 1;
  int ambient = n;
  for (std::size_t i = dims.size(); i-- > 0;) {
    predicted *= predicted_rref_count(ambient, dims[i], field);
    ambient = dims[i];
  }
  if (predicted > budget.max_objects) {
    throw BudgetExceeded("predicted chain count above the object cap");
  }

  if (dims.empty()) return {FlagChain(field, n, {})};

  int s = dims.back();
  std::vector<int> rest(dims.begin(), dims.end() - 1);
  std::vector<FlagChain> inner = enumerate_flags(s, rest, field, budget);

  std::vector<FlagChain> out;
  RrefStream stream(n, s, field, budget);
  while (auto top = stream.next()) {
    for (const FlagChain& chain : inner) {
      std::vector<RrefMatrix> members;
      members.reserve(chain.subspaces().size() + 1);
      for (const RrefMatrix& m : chain.subspaces()) {
        RrefResult ambient_form = rref_reduce(multiply(m.matrix(), top->matrix()));
        members.emplace_back(std::move(ambient_form.matrix));
      }
      members.push_back(*top);
      out.emplace_back(field, n, std::move(members));
    }
  }
  return out;
}

/// Number of flags with dimension vector spec.cuts(); every chain is
/// materialized and containment-checked, making this the definitional oracle
/// for the q-multinomial at q = p.
inline mpz_class count_flags(int n, const DescentSpec& spec, PrimeField field,
                             Budget budget = {}) {
  if (spec.n() != n) throw ShapeMismatch("spec made for a different n");
  return mpz_class(enumerate_flags(n, spec.cuts(), field, budget).size());
}

}  // namespace qcount
