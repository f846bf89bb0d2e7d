#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <vector>

#include "multibetti/matrix.hpp"
#include "multibetti/subset.hpp"

namespace multibetti {

// Matroid given by a rank oracle on subsets of {0, .., n-1}. Values are
// immutable; copies share the oracle. Enumeration operations are exhaustive
// and therefore capped at n <= 20.
//
// The T-flat notions used below: level(A) = |A| - rank(A) - 1, and A is a
// T-flat exactly when its complement is a proper flat of the dual matroid.
class Matroid {
 public:
  using RankFn = std::function<std::size_t(SubsetMask)>;

  Matroid(std::size_t n, RankFn rank_fn)
      : n_(n), rank_fn_(std::move(rank_fn)), full_rank_(rank_fn_(SubsetMask::full(n_))) {}

  std::size_t size() const { return n_; }
  std::size_t full_rank() const { return full_rank_; }

  std::size_t rank_of(SubsetMask a) const {
    if (!a.is_subset_of(SubsetMask::full(n_)))
      throw Error("subset index out of range for ground set of size " + std::to_string(n_));
    return rank_fn_(a);
  }

  int level(SubsetMask a) const {
    return static_cast<int>(a.count()) - static_cast<int>(rank_of(a)) - 1;
  }

  bool is_flat(SubsetMask a) const {
    const std::size_t r = rank_of(a);
    for (std::size_t x = 0; x < n_; ++x) {
      if (a.test(x)) continue;
      if (rank_of(a.with(x)) == r) return false;
    }
    return true;
  }

  // Dual rank: r*(A) = |A| - r(S) + r(S \ A). Applying it twice recovers the
  // original oracle exactly.
  Matroid dual() const {
    const std::size_t n = n_;
    const std::size_t r = full_rank_;
    RankFn base = rank_fn_;
    return Matroid(n, [n, r, base](SubsetMask a) {
      return a.count() - r + base(a.complement_within(n));
    });
  }

  bool is_tflat(SubsetMask a) const {
    if (!a.is_subset_of(SubsetMask::full(n_)))
      throw Error("subset index out of range for ground set of size " + std::to_string(n_));
    if (a.empty()) return false;  // complement must be a proper flat of the dual
    return dual().is_flat(a.complement_within(n_));
  }

  // Inclusion-minimal dependent sets, listed by cardinality then lex order.
  // A circuit C has rank |C| - 1 and every one-element deletion independent.
  std::vector<SubsetMask> circuits() const {
    require_enumerable();
    std::vector<SubsetMask> out;
    const std::size_t top = std::min(n_, full_rank_ + 1);
    for (std::size_t k = 1; k <= top; ++k) {
      for_each_subset_of_size(n_, k, [&](SubsetMask c) {
        if (rank_of(c) != k - 1) return;
        for (std::size_t x = 0; x < n_; ++x) {
          if (!c.test(x)) continue;
          if (rank_of(c.without(x)) != k - 1) return;
        }
        out.push_back(c);
      });
    }
    sort_canonically(out);
    return out;
  }

  // Flats of the given rank, found as closures of independent rho-subsets.
  // rho above the matroid rank yields an empty list.
  std::vector<SubsetMask> flats_of_rank(std::size_t rho) const {
    require_enumerable();
    if (rho > full_rank_) return {};
    std::set<SubsetMask> seen;
    for_each_subset_of_size(n_, rho, [&](SubsetMask x) {
      if (rank_of(x) != rho) return;
      SubsetMask closure = x;
      for (std::size_t e = 0; e < n_; ++e) {
        if (closure.test(e)) continue;
        if (rank_of(x.with(e)) == rho) closure = closure.with(e);
      }
      seen.insert(closure);
    });
    std::vector<SubsetMask> out(seen.begin(), seen.end());
    sort_canonically(out);
    return out;
  }

  std::vector<SubsetMask> tflats_of_level(std::size_t k) const {
    require_enumerable();
    const Matroid d = dual();
    std::vector<SubsetMask> out;
    // level k forces k + 1 <= |A| <= full_rank + k + 1
    const std::size_t lo = k + 1;
    const std::size_t hi = std::min(n_, full_rank_ + k + 1);
    for (std::size_t s = lo; s <= hi; ++s) {
      for_each_subset_of_size(n_, s, [&](SubsetMask a) {
        if (a.empty()) return;
        if (level(a) != static_cast<int>(k)) return;
        if (!d.is_flat(a.complement_within(n_))) return;
        out.push_back(a);
      });
    }
    sort_canonically(out);
    return out;
  }

 private:
  void require_enumerable() const {
    if (n_ > 20)
      throw GroundSetTooLarge("exhaustive matroid enumeration is capped at 20 elements, got " +
                              std::to_string(n_));
  }

  static void sort_canonically(std::vector<SubsetMask>& v) {
    std::sort(v.begin(), v.end(), canonical_subset_less);
  }

  std::size_t n_;
  RankFn rank_fn_;
  std::size_t full_rank_;
};

// Column matroid of an exact matrix. Zero columns become loops.
template <Field F>
Matroid matroid_from_matrix(const ExactMatrix<F>& m) {
  auto shared = std::make_shared<const ExactMatrix<F>>(m);
  const std::size_t n = shared->cols();
  return Matroid(n, [shared](SubsetMask a) {
    const auto idx = a.indices();
    ExactMatrix<F> sub(shared->field(), shared->rows(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < shared->rows(); ++i)
        sub.at(i, j) = shared->at(i, idx[j]);
    return rank(sub);
  });
}

}  // namespace multibetti
