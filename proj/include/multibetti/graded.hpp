#pragma once

#include <cstddef>
#include <vector>

#include "multibetti/presentation.hpp"

namespace multibetti {

// Degree-b slice of the presented module. Each generator t with g_t <= b
// contributes exactly one ambient basis monomial x^(b - g_t); the slice is
// the quotient of that ambient space by the relation columns that have
// arrived by degree b. Labels are listed by ascending generator index.
template <Field F>
struct GradedPiece {
  DegreeVector degree;
  std::vector<std::size_t> generators;   // ambient label -> generator index
  std::vector<DegreeVector> exponents;   // ambient label -> monomial exponent
  QuotientSpace<F> space;

  std::size_t dim() const { return space.dim; }
  // Position of the ambient label for generator t, or npos.
  std::size_t label_of_generator(std::size_t t) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == t) return i;
    return static_cast<std::size_t>(-1);
  }
};

template <Field F>
GradedPiece<F> graded_piece(const Presentation<F>& p, const DegreeVector& b) {
  p.require_valid();
  if (b.size() != p.vars()) throw Error("degree arity mismatch");
  const F& k = p.field();

  std::vector<std::size_t> generators;
  std::vector<DegreeVector> exponents;
  for (std::size_t t = 0; t < p.rows(); ++t) {
    if (!p.row_degrees()[t].leq(b)) continue;
    generators.push_back(t);
    exponents.push_back(b - p.row_degrees()[t]);
  }
  const std::size_t ambient = generators.size();

  std::vector<std::size_t> arrived;
  for (std::size_t j = 0; j < p.cols(); ++j)
    if (p.col_degrees()[j].leq(b)) arrived.push_back(j);

  ExactMatrix<F> relations(k, ambient, arrived.size());
  for (std::size_t c = 0; c < arrived.size(); ++c)
    for (std::size_t i = 0; i < ambient; ++i)
      relations.at(i, c) = p.coeffs().at(generators[i], arrived[c]);
  return GradedPiece<F>{b, std::move(generators), std::move(exponents),
                        quotient_space(relations)};
}

namespace detail {

// Matrix of multiplication by one variable between two graded pieces, in
// their canonical quotient bases. The variable only selects the target
// degree; on labels the map sends (t, delta) to (t, delta + unit).
template <Field F>
ExactMatrix<F> multiplication_between(const F& k, const GradedPiece<F>& src,
                                      const GradedPiece<F>& dst) {
  ExactMatrix<F> out(k, dst.dim(), src.dim());
  for (std::size_t s = 0; s < src.dim(); ++s) {
    const std::size_t label = src.space.basis_indices[s];
    const std::size_t t = src.generators[label];
    const std::size_t dst_label = dst.label_of_generator(t);
    for (std::size_t i = 0; i < dst.dim(); ++i)
      out.at(i, s) = dst.space.projection.at(i, dst_label);
  }
  return out;
}

}  // namespace detail

// x_var : L_b -> L_(b + u_var) in canonical bases.
template <Field F>
ExactMatrix<F> multiplication_map(const Presentation<F>& p, const DegreeVector& b,
                                  std::size_t var) {
  if (var >= p.vars()) throw Error("variable index out of range");
  const GradedPiece<F> src = graded_piece(p, b);
  const GradedPiece<F> dst = graded_piece(p, b.plus_unit(var));
  return detail::multiplication_between(p.field(), src, dst);
}

// Eagerly built table of graded pieces over a degree box. Build is
// sequential and deterministic; afterwards the table is read only, so
// lookups are safe to share across threads.
template <Field F>
class PieceTable {
 public:
  PieceTable(const Presentation<F>& p, DegreeVector lo, DegreeVector hi)
      : pres_(&p), lo_(std::move(lo)), hi_(std::move(hi)) {
    p.require_valid();
    const std::size_t m = p.vars();
    if (lo_.size() != m || hi_.size() != m) throw Error("box arity mismatch");
    strides_.assign(m, 1);
    std::size_t total = 1;
    for (std::size_t i = m; i-- > 0;) {
      const int w = hi_[i] - lo_[i] + 1;
      if (w <= 0) throw Error("empty piece-table box");
      strides_[i] = total;
      total *= static_cast<std::size_t>(w);
    }
    pieces_.reserve(total);
    for_each_degree_in_box(lo_, hi_, [&](const DegreeVector& b) {
      pieces_.push_back(graded_piece(p, b));
    });
  }

  const Presentation<F>& presentation() const { return *pres_; }
  const DegreeVector& lo() const { return lo_; }
  const DegreeVector& hi() const { return hi_; }

  bool contains(const DegreeVector& b) const {
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] < lo_[i] || b[i] > hi_[i]) return false;
    return true;
  }

  const GradedPiece<F>& at(const DegreeVector& b) const {
    if (!contains(b)) throw Error("degree outside piece-table box: " + b.to_string());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
      idx += static_cast<std::size_t>(b[i] - lo_[i]) * strides_[i];
    return pieces_[idx];
  }

  ExactMatrix<F> multiplication(const DegreeVector& b, std::size_t var) const {
    return detail::multiplication_between(pres_->field(), at(b), at(b.plus_unit(var)));
  }

 private:
  const Presentation<F>* pres_;
  DegreeVector lo_, hi_;
  std::vector<std::size_t> strides_;
  std::vector<GradedPiece<F>> pieces_;
};

}  // namespace multibetti
