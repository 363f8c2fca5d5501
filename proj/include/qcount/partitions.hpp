#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcount/errors.hpp"

namespace qcount {

/// Integer partition: weakly decreasing positive parts, stored without
/// trailing zeros.  The empty partition is valid.  A partition doubles as
/// a Ferrers diagram with left-justified rows; the bounding box is kept
/// separate so the same diagram can be viewed in different boxes.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
        throw Error("parts must be weakly decreasing and positive");
      }
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] std::size_t num_parts() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }

  /// |lambda|, the number of cells.
  [[nodiscard]] long weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  /// Part i (1-based), zero beyond the last part.
  [[nodiscard]] int part(std::size_t i) const {
    return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

  /// "(3,2,2)", "()" for the empty partition.
  [[nodiscard]] std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

 private:
  std::vector<int> parts_;
};

/// A k-rows-by-c-columns bounding box for Ferrers diagrams.
struct BoxBound {
  int rows = 0;
  int cols = 0;
};

inline bool fits_in_box(const Partition& lambda, const BoxBound& box) {
  if (static_cast<std::size_t>(box.rows) < lambda.num_parts()) return false;
  return lambda.empty() || lambda.parts().front() <= box.cols;
}

/// Transpose of the Ferrers diagram.
inline Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(lambda.parts().front(), 0);
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

/// Complement inside a box: cell-wise complement rotated back to a
/// partition.  Requires fits_in_box(lambda, box).
inline Partition complement_in_box(const Partition& lambda, const BoxBound& box) {
  if (!fits_in_box(lambda, box)) throw Error("partition does not fit in the box");
  std::vector<int> out(box.rows);
  for (int i = 0; i < box.rows; ++i) {
    out[i] = box.cols - lambda.part(static_cast<std::size_t>(box.rows - i));
  }
  return Partition(std::move(out));
}

/// Streams every partition fitting in a box exactly once, in ascending
/// lexicographic order of the padded part sequence (lambda_1,...,lambda_rows).
/// The order is part of the contract; golden files and cross-module zips
/// rely on it.
class PartitionStream {
 public:
  explicit PartitionStream(BoxBound box) : box_(box), padded_(box.rows, 0) {}

  std::optional<Partition> next() {
    if (done_) return std::nullopt;
    std::vector<int> parts;
    for (int p : padded_) {
      if (p > 0) parts.push_back(p);
    }
    Partition out{std::move(parts)};
    advance();
    return out;
  }

 private:
  void advance() {
    // Lexicographic successor: bump the rightmost position that stays
    // weakly decreasing, zero everything after it.
    for (int i = box_.rows - 1; i >= 0; --i) {
      int bound = i == 0 ? box_.cols : std::min(box_.cols, padded_[i - 1]);
      if (padded_[i] < bound) {
        ++padded_[i];
        std::fill(padded_.begin() + i + 1, padded_.end(), 0);
        return;
      }
    }
    done_ = true;
  }

  BoxBound box_;
  std::vector<int> padded_;
  bool done_ = false;
};

/// Number of partitions of r with at most max_parts parts, each at most
/// max_part.  Dynamic programming on (part bound, weight); the recurrence
/// splits on whether a part equal to the bound occurs.  Enumeration-based
/// counting is kept in the tests as this routine's oracle.
inline mpz_class count_partitions(long r, int max_parts, int max_part) {
  if (r < 0) return 0;
  if (r == 0) return 1;
  if (r > static_cast<long>(max_parts) * max_part) return 0;
  // table[a][w] = partitions of w with at most `parts_left` parts each <= a,
  // rolled over the number-of-parts dimension.
  std::vector<std::vector<mpz_class>> table(
      static_cast<std::size_t>(max_part) + 1,
      std::vector<mpz_class>(static_cast<std::size_t>(r) + 1, mpz_class(0)));
  for (int a = 0; a <= max_part; ++a) table[a][0] = 1;
  for (int parts_left = 1; parts_left <= max_parts; ++parts_left) {
    auto prev = table;
    for (int a = 1; a <= max_part; ++a) {
      for (long w = 1; w <= r; ++w) {
        table[a][w] = table[a - 1][w];
        if (w >= a) table[a][w] += prev[a][w - a];
      }
    }
  }
  return table[max_part][r];
}

}  // namespace qcount
