#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "multibetti/errors.hpp"
#include "multibetti/subset.hpp"

namespace multibetti {

// A point of Z^m. Comparison operator< is lexicographic (for use as a map
// key); the componentwise partial order is exposed as leq().
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<int> c) : c_(std::move(c)) {}

  static DegreeVector zero(std::size_t m) { return DegreeVector(std::vector<int>(m, 0)); }
  static DegreeVector ones(std::size_t m) { return DegreeVector(std::vector<int>(m, 1)); }
  static DegreeVector unit(std::size_t m, std::size_t j) {
    std::vector<int> c(m, 0);
    c.at(j) = 1;
    return DegreeVector(std::move(c));
  }

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& coords() const { return c_; }

  DegreeVector operator+(const DegreeVector& o) const {
    DegreeVector r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
  }
  DegreeVector operator-(const DegreeVector& o) const {
    DegreeVector r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
  }
  DegreeVector plus_unit(std::size_t j, int step = 1) const {
    DegreeVector r = *this;
    r.c_[j] += step;
    return r;
  }

  bool leq(const DegreeVector& o) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] > o.c_[i]) return false;
    return true;
  }
  bool is_nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](int v) { return v >= 0; });
  }

  SubsetMask support() const {
    SubsetMask s;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] >= 1) s = s.with(i);
    return s;
  }

  static DegreeVector join(const DegreeVector& a, const DegreeVector& b) {
    DegreeVector r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = std::max(r.c_[i], b[i]);
    return r;
  }

  bool operator==(const DegreeVector&) const = default;
  bool operator<(const DegreeVector& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

 private:
  std::vector<int> c_;
};

// Keeps the divisibility-minimal elements: drops any vector that is
// componentwise >= another one. Ties (duplicates) keep a single copy.
// Output is sorted lexicographically.
inline std::vector<DegreeVector> divisibility_minimal(std::vector<DegreeVector> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<DegreeVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
      if (j != i && gens[j].leq(gens[i])) dominated = true;
    if (!dominated) out.push_back(gens[i]);
  }
  return out;
}

// Enumerates the box [lo, hi] in lexicographic order. fn(b) is called once
// per point; an empty coordinate list yields the single empty point.
template <class Fn>
void for_each_degree_in_box(const DegreeVector& lo, const DegreeVector& hi, Fn&& fn) {
  const std::size_t m = lo.size();
  for (std::size_t i = 0; i < m; ++i)
    if (lo[i] > hi[i]) return;
  DegreeVector b = lo;
  while (true) {
    fn(b);
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (b[i] < hi[i]) {
        b[i] += 1;
        for (std::size_t j = i + 1; j < m; ++j) b[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
    if (m == 0) return;
  }
}

}  // namespace multibetti
