#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "multibetti/field.hpp"

namespace multibetti {

// Dense matrix over an exact field. 0 x n and n x 0 shapes are legal and have
// rank 0. Storage is row major; all operations are deterministic.
template <Field F>
class ExactMatrix {
 public:
  using Elem = typename F::Elem;

  ExactMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        e_(rows * cols, field_.zero()) {}

  static ExactMatrix identity(F field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  ExactMatrix transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  ExactMatrix operator*(const ExactMatrix& rhs) const {
    if (!field_.same(rhs.field_)) throw Error("field mismatch in matrix product");
    if (cols_ != rhs.rows_) throw Error("shape mismatch in matrix product");
    ExactMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& a = at(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, rhs.at(k, j)));
      }
    return out;
  }

  bool is_zero() const {
    for (const Elem& v : e_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  bool operator==(const ExactMatrix& rhs) const {
    if (!field_.same(rhs.field_) || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (!field_.eq(e_[i], rhs.e_[i])) return false;
    return true;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Elem> e_;
};

template <Field F>
struct RrefResult {
  ExactMatrix<F> mat;
  std::vector<std::size_t> pivot_cols;  // strictly increasing
};

// Reduced row echelon form. Pivot rows are chosen by lowest index, so the
// output is the unique RREF of the input.
template <Field F>
RrefResult<F> reduced_row_echelon(const ExactMatrix<F>& m) {
  ExactMatrix<F> a = m;
  const F& k = a.field();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
    std::size_t pivot = pr;
    while (pivot < a.rows() && k.is_zero(a.at(pivot, c))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != pr)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(pivot, j));
    const auto scale = k.inv(a.at(pr, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(pr, j) = k.mul(scale, a.at(pr, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pr || k.is_zero(a.at(i, c))) continue;
      const auto f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) = k.sub(a.at(i, j), k.mul(f, a.at(pr, j)));
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(a), std::move(pivots)};
}

namespace detail {

// Fraction-free elimination on an integer grid. Entries stay one-step
// divisible by the previous pivot, which keeps growth polynomial.
inline std::size_t bareiss_rank_grid(std::vector<BigInt>& a, std::size_t rows,
                                     std::size_t cols) {
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a[rank * cols + j], a[pivot * cols + j]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i * cols + j] =
            (a[rank * cols + c] * a[i * cols + j] - a[i * cols + c] * a[rank * cols + j]) / prev;
      a[i * cols + c] = 0;
    }
    prev = a[rank * cols + c];
    ++rank;
  }
  return rank;
}

inline std::size_t bareiss_rank(const ExactMatrix<RationalField>& m) {
  std::vector<BigInt> grid(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(m.at(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& v = m.at(i, j);
      grid[i * m.cols() + j] =
          boost::multiprecision::numerator(v) * (den / boost::multiprecision::denominator(v));
    }
  }
  return bareiss_rank_grid(grid, m.rows(), m.cols());
}

template <Field F>
std::size_t elimination_rank(const ExactMatrix<F>& m) {
  ExactMatrix<F> a = m;
  const F& k = a.field();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && k.is_zero(a.at(pivot, c))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a.at(rank, j), a.at(pivot, j));
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (k.is_zero(a.at(i, c))) continue;
      const auto f = k.div(a.at(i, c), a.at(rank, c));
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) = k.sub(a.at(i, j), k.mul(f, a.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

template <Field F>
std::size_t rank(const ExactMatrix<F>& m) {
  if constexpr (std::is_same_v<F, RationalField>) {
    return detail::bareiss_rank(m);
  } else {
    return detail::elimination_rank(m);
  }
}

// Canonical kernel basis read off the RREF: one column per free column f,
// with entry 1 at f and -R(pivot_row, f) at each pivot column. Column count
// is cols - rank.
template <Field F>
ExactMatrix<F> kernel_basis(const ExactMatrix<F>& m) {
  const auto r = reduced_row_echelon(m);
  const F& k = m.field();
  std::vector<std::size_t> free_cols;
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (p < r.pivot_cols.size() && r.pivot_cols[p] == c) {
        ++p;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  ExactMatrix<F> basis(k, m.cols(), free_cols.size());
  for (std::size_t s = 0; s < free_cols.size(); ++s) {
    basis.at(free_cols[s], s) = k.one();
    for (std::size_t t = 0; t < r.pivot_cols.size(); ++t)
      basis.at(r.pivot_cols[t], s) = k.neg(r.mat.at(t, free_cols[s]));
  }
  return basis;
}

// Quotient of the ambient coordinate space by the column span of a relation
// matrix. The canonical quotient basis is the classes of the ambient
// coordinates not pivotal in the RREF of the span, listed increasing.
// projection * section = id and projection * relations = 0.
template <Field F>
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  std::size_t dim = 0;
  ExactMatrix<F> projection;               // dim x ambient
  ExactMatrix<F> section;                  // ambient x dim
  std::vector<std::size_t> basis_indices;  // strictly increasing ambient indices
};

template <Field F>
QuotientSpace<F> quotient_space(const ExactMatrix<F>& relations) {
  const F& k = relations.field();
  const std::size_t ambient = relations.rows();
  const auto r = reduced_row_echelon(relations.transpose());

  std::vector<std::size_t> basis;
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient; ++c) {
      if (p < r.pivot_cols.size() && r.pivot_cols[p] == c) {
        ++p;
      } else {
        basis.push_back(c);
      }
    }
  }
  const std::size_t dim = basis.size();

  QuotientSpace<F> q{ambient, dim, ExactMatrix<F>(k, dim, ambient),
                     ExactMatrix<F>(k, ambient, dim), basis};
  for (std::size_t s = 0; s < dim; ++s) {
    q.projection.at(s, basis[s]) = k.one();
    q.section.at(basis[s], s) = k.one();
  }
  // A pivotal coordinate reduces to minus the free part of its RREF row.
  for (std::size_t t = 0; t < r.pivot_cols.size(); ++t)
    for (std::size_t s = 0; s < dim; ++s)
      q.projection.at(s, r.pivot_cols[t]) = k.neg(r.mat.at(t, basis[s]));
  return q;
}

}  // namespace multibetti
