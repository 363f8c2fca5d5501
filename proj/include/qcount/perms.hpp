#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcount/errors.hpp"
#include "qcount/partitions.hpp"

namespace qcount {

enum class Step { Vertical, Horizontal };

/// Monotone path across a grid, read as a step sequence.  In a k-rows-by-c-
/// columns box a path has k Vertical and c Horizontal steps; the class itself
/// does not fix a box.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  [[nodiscard]] const std::vector<Step>& steps() const { return steps_; }
  [[nodiscard]] std::size_t length() const { return steps_.size(); }

  [[nodiscard]] int num_vertical() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Vertical));
  }

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.steps_ == b.steps_;
  }
  friend bool operator!=(const LatticePath& a, const LatticePath& b) { return !(a == b); }

  /// "HHVHV": one letter per step.
  [[nodiscard]] std::string to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out += s == Step::Vertical ? 'V' : 'H';
    return out;
  }

 private:
  std::vector<Step> steps_;
};

/// Permutation of {1..n} in one-line notation: images_[i-1] = pi(i).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1]) {
        throw Error("images must be a rearrangement of 1..n");
      }
      seen[v - 1] = true;
    }
  }

  Permutation(std::initializer_list<int> images)
      : Permutation(std::vector<int>(images)) {}

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] const std::vector<int>& images() const { return images_; }

  /// pi(i), 1-based.
  [[nodiscard]] int operator()(int i) const {
    if (i < 1 || i > size()) throw DomainViolation("point outside 1..n");
    return images_[i - 1];
  }

  [[nodiscard]] Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

  /// "(13524)" for n <= 9, "(1,3,11,...)" with commas above that.
  [[nodiscard]] std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i > 0 && images_.size() > 9) out += ",";
      out += std::to_string(images_[i]);
    }
    return out + ")";
  }

 private:
  std::vector<int> images_;
};

/// (sigma.compose(tau))(i) = sigma(tau(i)).
inline Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw ShapeMismatch("composing different degrees");
  std::vector<int> out(sigma.size());
  for (int i = 1; i <= tau.size(); ++i) out[i - 1] = sigma(tau(i));
  return Permutation(std::move(out));
}

/// Extend a permutation of {1..m} to {1..n} fixing everything above m.
inline Permutation embed(const Permutation& pi, int n) {
  if (n < pi.size()) throw DomainViolation("cannot embed into a smaller degree");
  std::vector<int> out(n);
  for (int i = 1; i <= pi.size(); ++i) out[i - 1] = pi(i);
  std::iota(out.begin() + pi.size(), out.end(), pi.size() + 1);
  return Permutation(std::move(out));
}

/// Cut positions S = (s_1,...,s_{m-1}) splitting {1..n} into m blocks.
/// Permutations with descent set inside S are exactly those ascending on
/// every block.
class DescentSpec {
 public:
  DescentSpec(int n, std::vector<int> cuts) : n_(n), cuts_(std::move(cuts)) {
    if (n_ < 1) throw Error("n must be positive");
    for (std::size_t i = 0; i < cuts_.size(); ++i) {
      bool increasing = i == 0 || cuts_[i] > cuts_[i - 1];
      if (cuts_[i] < 1 || cuts_[i] > n_ - 1 || !increasing) {
        throw Error("cuts must be strictly increasing within 1..n-1");
      }
    }
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<int>& cuts() const { return cuts_; }
  [[nodiscard]] int num_blocks() const { return static_cast<int>(cuts_.size()) + 1; }

  /// Block sizes (k_1,...,k_m), a composition of n.
  [[nodiscard]] std::vector<int> parts() const {
    std::vector<int> out;
    int prev = 0;
    for (int s : cuts_) {
      out.push_back(s - prev);
      prev = s;
    }
    out.push_back(n_ - prev);
    return out;
  }

 private:
  int n_;
  std::vector<int> cuts_;
};

/// Boundary walk of the Ferrers diagram, top-right corner to bottom-left:
/// standing at the top-left corner of a starred cell means move down,
/// otherwise move right.  After d down-steps and r right-steps the cell in
/// question is in row d+1, and it is starred iff that row still reaches past
/// the r columns already consumed from the right.
inline LatticePath diagram_to_path(const Partition& lambda, const BoxBound& box) {
  if (!fits_in_box(lambda, box)) throw DomainViolation("diagram outside the box");
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(box.rows) + box.cols);
  int down = 0;
  int right = 0;
  while (down < box.rows || right < box.cols) {
    if (down < box.rows && lambda.part(static_cast<std::size_t>(down) + 1) >= box.cols - right) {
      steps.push_back(Step::Vertical);
      ++down;
    } else {
      steps.push_back(Step::Horizontal);
      ++right;
    }
  }
  return LatticePath(std::move(steps));
}

/// 1-based positions of the Vertical steps.
inline std::vector<int> path_to_subset(const LatticePath& path) {
  std::vector<int> out;
  for (std::size_t i = 0; i < path.length(); ++i) {
    if (path.steps()[i] == Step::Vertical) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

/// Inverse of diagram_to_path; the box is implicit in the step counts.
/// The d-th vertical step at position v_d leaves lambda_d = cols - (v_d - d)
/// cells in row d.
inline Partition path_to_diagram(const LatticePath& path) {
  std::vector<int> verticals = path_to_subset(path);
  int cols = static_cast<int>(path.length()) - static_cast<int>(verticals.size());
  std::vector<int> parts;
  for (std::size_t d = 1; d <= verticals.size(); ++d) {
    parts.push_back(cols - (verticals[d - 1] - static_cast<int>(d)));
  }
  return Partition(std::move(parts));
}

/// Horizontal step indices in increasing order, then vertical step indices
/// in increasing order.  The result has at most one descent, at position
/// cols = n - rows.
inline Permutation diagram_to_permutation(const Partition& lambda, const BoxBound& box) {
  LatticePath path = diagram_to_path(lambda, box);
  std::vector<int> images;
  images.reserve(path.length());
  for (std::size_t i = 0; i < path.length(); ++i) {
    if (path.steps()[i] == Step::Horizontal) images.push_back(static_cast<int>(i) + 1);
  }
  for (std::size_t i = 0; i < path.length(); ++i) {
    if (path.steps()[i] == Step::Vertical) images.push_back(static_cast<int>(i) + 1);
  }
  return Permutation(std::move(images));
}

struct InversionData {
  long count = 0;
  std::vector<std::pair<int, int>> pairs;  // (i, j) with i < j, pi(i) > pi(j)
};

inline InversionData inversions(const Permutation& pi) {
  InversionData out;
  for (int i = 1; i <= pi.size(); ++i) {
    for (int j = i + 1; j <= pi.size(); ++j) {
      if (pi(i) > pi(j)) out.pairs.emplace_back(i, j);
    }
  }
  out.count = static_cast<long>(out.pairs.size());
  return out;
}

inline long inversion_count(const Permutation& pi) {
  long count = 0;
  for (int i = 1; i <= pi.size(); ++i) {
    for (int j = i + 1; j <= pi.size(); ++j) {
      if (pi(i) > pi(j)) ++count;
    }
  }
  return count;
}

/// D(pi) = {i in 1..n-1 : pi(i) > pi(i+1)}, ascending.
inline std::vector<int> descent_set(const Permutation& pi) {
  std::vector<int> out;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi(i) > pi(i + 1)) out.push_back(i);
  }
  return out;
}

/// Streams the permutations whose descent set lies inside the given cuts, in
/// lexicographic order of one-line notation, without touching the rest of
/// the symmetric group.  Each permutation is determined by which values land
/// in each block (values within a block appear in increasing order), so the
/// stream walks value-set choices block by block, lexicographically.
class DescentPermStream {
 public:
  explicit DescentPermStream(DescentSpec spec, Budget budget = {})
      : spec_(std::move(spec)), sizes_(spec_.parts()) {
    if (spec_.n() > budget.max_perm_n) {
      throw BudgetExceeded("degree above the permutation cap");
    }
    mpz_class predicted = 1;
    int remaining = spec_.n();
    for (int k : sizes_) {
      mpz_class choose;
      mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(remaining),
                   static_cast<unsigned long>(k));
      predicted *= choose;
      remaining -= k;
    }
    if (predicted > budget.max_objects) {
      throw BudgetExceeded("predicted permutation count above the object cap");
    }
    reset_from_block(0);
  }

  std::optional<Permutation> next() {
    if (done_) return std::nullopt;
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(spec_.n()));
    for (std::size_t b = 0; b < sizes_.size(); ++b) {
      for (int idx : combos_[b]) images.push_back(pools_[b][idx]);
    }
    Permutation out{std::move(images)};
    advance();
    return out;
  }

 private:
  // Set blocks from `block` onward to their lexicographically first choice.
  void reset_from_block(std::size_t block) {
    pools_.resize(sizes_.size());
    combos_.resize(sizes_.size());
    for (std::size_t b = block; b < sizes_.size(); ++b) {
      if (b == 0) {
        pools_[0].resize(static_cast<std::size_t>(spec_.n()));
        std::iota(pools_[0].begin(), pools_[0].end(), 1);
      } else {
        pools_[b].clear();
        std::vector<bool> taken(pools_[b - 1].size(), false);
        for (int idx : combos_[b - 1]) taken[idx] = true;
        for (std::size_t i = 0; i < pools_[b - 1].size(); ++i) {
          if (!taken[i]) pools_[b].push_back(pools_[b - 1][i]);
        }
      }
      combos_[b].resize(static_cast<std::size_t>(sizes_[b]));
      std::iota(combos_[b].begin(), combos_[b].end(), 0);
    }
  }

  // Lexicographic successor of a k-combination of {0..pool_size-1}.
  static bool next_combination(std::vector<int>& combo, std::size_t pool_size) {
    int k = static_cast<int>(combo.size());
    for (int j = k - 1; j >= 0; --j) {
      if (combo[j] < static_cast<int>(pool_size) - (k - j)) {
        ++combo[j];
        for (int t = j + 1; t < k; ++t) combo[t] = combo[t - 1] + 1;
        return true;
      }
    }
    return false;
  }

  void advance() {
    // The last block is forced; blocks before it form an odometer with the
    // rightmost free block fastest.
    for (int b = static_cast<int>(sizes_.size()) - 2; b >= 0; --b) {
      if (next_combination(combos_[b], pools_[b].size())) {
        reset_from_block(static_cast<std::size_t>(b) + 1);
        return;
      }
    }
    done_ = true;
  }

  DescentSpec spec_;
  std::vector<int> sizes_;
  std::vector<std::vector<int>> pools_;   // values available to each block
  std::vector<std::vector<int>> combos_;  // ascending indices into the pool
  bool done_ = false;
};

/// outer(inner(.)) where inner is read as an element of the subgroup
/// permuting the first inner_degree points.  inner may be handed over in
/// degree inner_degree or already padded; either way it must fix every point
/// above inner_degree.
inline Permutation compose_phi(const Permutation& outer, const Permutation& inner,
                               int inner_degree) {
  if (inner_degree < 0 || inner_degree > outer.size()) {
    throw DomainViolation("inner degree outside 0..n");
  }
  for (int i = inner_degree + 1; i <= inner.size(); ++i) {
    if (inner(i) != i) {
      throw DomainViolation("inner moves a point above its declared degree");
    }
  }
  std::vector<int> out(static_cast<std::size_t>(outer.size()));
  for (int i = 1; i <= outer.size(); ++i) {
    int mid = i <= inner.size() ? inner(i) : i;
    out[i - 1] = outer(mid);
  }
  return Permutation(std::move(out));
}

struct PhiFactors {
  Permutation inner;  // degree s_{m-1}, descents inside the remaining cuts
  Permutation outer;  // degree n, at most one descent, at s_{m-1}
};

/// Inverse of compose_phi along the last cut s = s_{m-1}: outer is the unique
/// permutation with descents inside {s} whose first s values are the set
/// pi({1..s}) in increasing order, and inner = outer^{-1} o pi restricted to
/// the first s points.
inline PhiFactors factor_phi(const Permutation& pi, const DescentSpec& spec) {
  if (pi.size() != spec.n()) throw ShapeMismatch("permutation degree differs from spec");
  std::vector<int> descents = descent_set(pi);
  const std::vector<int>& cuts = spec.cuts();
  if (!std::includes(cuts.begin(), cuts.end(), descents.begin(), descents.end())) {
    throw DescentViolation("descent set not inside the cuts");
  }
  if (cuts.empty()) return {Permutation{}, pi};  // pi is the identity here

  int s = cuts.back();
  std::vector<int> head(pi.images().begin(), pi.images().begin() + s);
  std::vector<int> tail(pi.images().begin() + s, pi.images().end());
  std::sort(head.begin(), head.end());
  std::sort(tail.begin(), tail.end());
  std::vector<int> outer_images = head;
  outer_images.insert(outer_images.end(), tail.begin(), tail.end());
  Permutation outer{std::move(outer_images)};

  Permutation outer_inv = outer.inverse();
  std::vector<int> inner_images(static_cast<std::size_t>(s));
  for (int i = 1; i <= s; ++i) inner_images[i - 1] = outer_inv(pi(i));
  return {Permutation{std::move(inner_images)}, std::move(outer)};
}

}  // namespace qcount
