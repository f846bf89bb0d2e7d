#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "multibetti/degree.hpp"
#include "multibetti/matrix.hpp"
#include "multibetti/matroid.hpp"

namespace multibetti {

enum class ViolationKind { Homogeneity, NonMinimal, ZeroColumn, DimensionMismatch };

struct Violation {
  ViolationKind kind;
  std::size_t row = 0;
  std::size_t col = 0;

  std::string to_string() const {
    switch (kind) {
      case ViolationKind::Homogeneity:
        return "Homogeneity(" + std::to_string(row) + "," + std::to_string(col) + ")";
      case ViolationKind::NonMinimal:
        return "NonMinimal(" + std::to_string(row) + "," + std::to_string(col) + ")";
      case ViolationKind::ZeroColumn:
        return "ZeroColumn(" + std::to_string(col) + ")";
      case ViolationKind::DimensionMismatch:
        return "DimensionMismatch";
    }
    return "Unknown";
  }
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const {
    if (ok()) return "valid";
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v.to_string();
    }
    return s;
  }
};

// Minimal multigraded presentation data: generator degrees g_t (rows),
// relation degrees e_j (columns) and the scalar coefficient matrix. The
// relation column j stands for sum_t coeffs[t][j] * x^(e_j - g_t) * gen_t.
//
// Structural invariants (checked by validate, required by every operation):
// a nonzero coefficient needs e_j >= g_t componentwise (homogeneity) and
// e_j != g_t (minimality); no column is all zero.
template <Field F>
class Presentation {
 public:
  Presentation(std::size_t vars, std::vector<DegreeVector> row_degrees,
               std::vector<DegreeVector> col_degrees, ExactMatrix<F> coeffs)
      : vars_(vars), row_degrees_(std::move(row_degrees)),
        col_degrees_(std::move(col_degrees)), coeffs_(std::move(coeffs)) {}

  std::size_t vars() const { return vars_; }
  std::size_t rows() const { return row_degrees_.size(); }
  std::size_t cols() const { return col_degrees_.size(); }
  const std::vector<DegreeVector>& row_degrees() const { return row_degrees_; }
  const std::vector<DegreeVector>& col_degrees() const { return col_degrees_; }
  const ExactMatrix<F>& coeffs() const { return coeffs_; }
  const F& field() const { return coeffs_.field(); }

  ValidationReport validate() const {
    ValidationReport rep;
    const F& k = field();
    bool dims_ok = coeffs_.rows() == rows() && coeffs_.cols() == cols();
    for (const auto& d : row_degrees_) dims_ok = dims_ok && d.size() == vars_;
    for (const auto& d : col_degrees_) dims_ok = dims_ok && d.size() == vars_;
    if (!dims_ok) {
      rep.violations.push_back({ViolationKind::DimensionMismatch, 0, 0});
      return rep;
    }
    for (std::size_t j = 0; j < cols(); ++j) {
      bool all_zero = true;
      for (std::size_t t = 0; t < rows(); ++t) {
        if (k.is_zero(coeffs_.at(t, j))) continue;
        all_zero = false;
        if (!row_degrees_[t].leq(col_degrees_[j]))
          rep.violations.push_back({ViolationKind::Homogeneity, t, j});
        else if (row_degrees_[t] == col_degrees_[j])
          rep.violations.push_back({ViolationKind::NonMinimal, t, j});
      }
      if (all_zero && rows() > 0)
        rep.violations.push_back({ViolationKind::ZeroColumn, 0, j});
      if (rows() == 0 && cols() > 0)
        rep.violations.push_back({ViolationKind::ZeroColumn, 0, j});
    }
    return rep;
  }

  void require_valid() const {
    const auto rep = validate();
    if (!rep.ok()) throw InvalidPresentation("invalid presentation: " + rep.to_string());
  }

 private:
  std::size_t vars_;
  std::vector<DegreeVector> row_degrees_;
  std::vector<DegreeVector> col_degrees_;
  ExactMatrix<F> coeffs_;
};

// R/I for a monomial ideal given by exponent vectors. Generators are
// divisibility-minimalized. No generators means the free module R. A zero
// exponent vector makes I the unit ideal, whose quotient is the zero module,
// returned as the empty presentation.
template <Field F>
Presentation<F> from_monomial_ideal(const F& field, std::size_t vars,
                                               std::vector<DegreeVector> gens) {
  for (const auto& g : gens) {
    if (g.size() != vars) throw Error("generator arity mismatch");
    if (!g.is_nonnegative()) throw NegativeDegrees("monomial generators must be nonnegative");
  }
  gens = divisibility_minimal(std::move(gens));
  if (!gens.empty() && gens.front() == DegreeVector::zero(vars))
    return Presentation<F>(vars, {}, {}, ExactMatrix<F>(field, 0, 0));
  ExactMatrix<F> coeffs(field, 1, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) coeffs.at(0, j) = field.one();
  return Presentation<F>(vars, {DegreeVector::zero(vars)}, std::move(gens), std::move(coeffs));
}

template <Field F>
Presentation<F> shift(const Presentation<F>& p, const DegreeVector& c) {
  if (c.size() != p.vars()) throw Error("shift arity mismatch");
  std::vector<DegreeVector> rows = p.row_degrees(), cols = p.col_degrees();
  for (auto& d : rows) d = d + c;
  for (auto& d : cols) d = d + c;
  return Presentation<F>(p.vars(), std::move(rows), std::move(cols), p.coeffs());
}

// Componentwise maximum of all generator and relation degrees. Every degree
// must be nonnegative; the value bounds the window of interesting degrees.
template <Field F>
DegreeVector determining_degree(const Presentation<F>& p) {
  p.require_valid();
  DegreeVector a = DegreeVector::zero(p.vars());
  for (const auto& d : p.row_degrees()) {
    if (!d.is_nonnegative()) throw NegativeDegrees("row degree below zero");
    a = DegreeVector::join(a, d);
  }
  for (const auto& d : p.col_degrees()) {
    if (!d.is_nonnegative()) throw NegativeDegrees("column degree below zero");
    a = DegreeVector::join(a, d);
  }
  return a;
}

template <Field F>
Matroid coefficient_matroid(const Presentation<F>& p) {
  p.require_valid();
  return matroid_from_matrix(p.coeffs());
}

// Rank of the presentation matrix over the fraction field. Since the matrix
// is a scalar matrix conjugated by monomial diagonal units, this equals the
// rank of the scalar coefficient matrix.
template <Field F>
std::size_t fraction_field_rank(const Presentation<F>& p) {
  p.require_valid();
  return rank(p.coeffs());
}

namespace detail {

// Sparse multivariate polynomial, monomial exponent -> coefficient.
template <Field F>
using Poly = std::map<DegreeVector, typename F::Elem>;

template <Field F>
void poly_add_term(const F& k, Poly<F>& p, const DegreeVector& mono,
                   const typename F::Elem& c) {
  if (k.is_zero(c)) return;
  auto it = p.find(mono);
  if (it == p.end()) {
    p.emplace(mono, c);
  } else {
    it->second = k.add(it->second, c);
    if (k.is_zero(it->second)) p.erase(it);
  }
}

}  // namespace detail

// Cross-check route for fraction_field_rank: expands minors of the actual
// monomial-entry matrix (entry (t,j) is coeffs[t][j] * x^(e_j - g_t)) and
// returns the largest size with a nonvanishing minor. Limited to 6 columns.
template <Field F>
std::size_t fraction_field_rank_by_minors(const Presentation<F>& p) {
  p.require_valid();
  if (p.cols() > 6) throw Error("minor expansion cross-check is limited to 6 columns");
  const F& k = p.field();
  const std::size_t rmax = std::min(p.rows(), p.cols());
  for (std::size_t sz = rmax; sz >= 1; --sz) {
    bool found = false;
    for_each_subset_of_size(p.rows(), sz, [&](SubsetMask rowset) {
      if (found) return;
      const auto rows = rowset.indices();
      for_each_subset_of_size(p.cols(), sz, [&](SubsetMask colset) {
        if (found) return;
        const auto cols = colset.indices();
        detail::Poly<F> det;
        std::vector<std::size_t> perm(sz);
        for (std::size_t i = 0; i < sz; ++i) perm[i] = i;
        do {
          std::size_t inversions = 0;
          for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = i + 1; j < sz; ++j)
              if (perm[i] > perm[j]) ++inversions;
          typename F::Elem c = (inversions % 2 == 0) ? k.one() : k.neg(k.one());
          DegreeVector mono = DegreeVector::zero(p.vars());
          bool zero = false;
          for (std::size_t i = 0; i < sz && !zero; ++i) {
            const std::size_t t = rows[i], j = cols[perm[i]];
            const auto& entry = p.coeffs().at(t, j);
            if (k.is_zero(entry)) {
              zero = true;
            } else {
              c = k.mul(c, entry);
              mono = mono + (p.col_degrees()[j] - p.row_degrees()[t]);
            }
          }
          if (!zero) detail::poly_add_term(k, det, mono, c);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!det.empty()) found = true;
      });
    });
    if (found) return sz;
  }
  return 0;
}

template <Field F>
std::size_t module_rank(const Presentation<F>& p) {
  return p.rows() - fraction_field_rank(p);
}

}  // namespace multibetti
