#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "multibetti/bounds.hpp"
#include "multibetti/presentation.hpp"

namespace multibetti {

// Recipe for an r x n presentation whose coefficient matrix has uniform rank
// (every r columns independent) and whose column multidegrees are the
// all-ones vector spiked by `spike` in the column's own coordinate. Such an
// instance attains the Betti bound with equality at every index >= 2.
struct GenexSpec {
  std::size_t rank = 1;
  std::size_t cols = 1;
  int spike = 1;
};

namespace detail {

inline void check_genex_spec(const GenexSpec& s) {
  if (s.rank < 1 || s.rank > s.cols)
    throw Error("generic example needs 1 <= rank <= cols");
  if (s.spike < 1) throw Error("spike must be at least 1");
}

template <Field F>
std::vector<DegreeVector> spike_degrees(const GenexSpec& s) {
  std::vector<DegreeVector> cols;
  cols.reserve(s.cols);
  for (std::size_t j = 0; j < s.cols; ++j) {
    DegreeVector d = DegreeVector::ones(s.cols);
    d[j] += s.spike;
    cols.push_back(std::move(d));
  }
  return cols;
}

}  // namespace detail

// Deterministic instance: column j carries the Vandermonde column
// (1, t, .., t^(r-1)) at node t = j. Over F_p the nodes must stay distinct
// and every node difference must be a unit, which needs p > cols.
template <Field F>
Presentation<F> generic_presentation(const F& field, const GenexSpec& s) {
  detail::check_genex_spec(s);
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (field.modulus() <= s.cols)
      throw FieldTooSmall("need a prime above " + std::to_string(s.cols) +
                          " for distinct Vandermonde nodes, got " +
                          std::to_string(field.modulus()));
  }
  ExactMatrix<F> coeffs(field, s.rank, s.cols);
  for (std::size_t j = 0; j < s.cols; ++j) {
    typename F::Elem power = field.one();
    const typename F::Elem node = field.from_int(static_cast<long long>(j));
    for (std::size_t t = 0; t < s.rank; ++t) {
      coeffs.at(t, j) = power;
      power = field.mul(power, node);
    }
  }
  return Presentation<F>(s.cols, std::vector<DegreeVector>(s.rank, DegreeVector::zero(s.cols)),
                         detail::spike_degrees<F>(s), std::move(coeffs));
}

// Randomized fallback with the same degree scheme. The first row is drawn
// nonzero so columns stay structurally valid; uniformity of the resulting
// matroid is NOT guaranteed and must be checked by verify_sharpness.
template <Field F>
Presentation<F> generic_presentation_seeded(const F& field, const GenexSpec& s,
                                            std::uint64_t seed) {
  detail::check_genex_spec(s);
  std::mt19937_64 rng(seed);
  ExactMatrix<F> coeffs(field, s.rank, s.cols);
  for (std::size_t j = 0; j < s.cols; ++j) {
    for (std::size_t t = 0; t < s.rank; ++t) {
      long long v;
      if constexpr (std::is_same_v<F, PrimeField>) {
        std::uniform_int_distribution<long long> dist(
            t == 0 ? 1 : 0, static_cast<long long>(field.modulus()) - 1);
        v = dist(rng);
      } else {
        std::uniform_int_distribution<long long> dist(t == 0 ? 1 : -9, 9);
        v = dist(rng);
        if (t == 0 && v == 0) v = 1;
      }
      coeffs.at(t, j) = field.from_int(v);
    }
  }
  return Presentation<F>(s.cols, std::vector<DegreeVector>(s.rank, DegreeVector::zero(s.cols)),
                         detail::spike_degrees<F>(s), std::move(coeffs));
}

// Checks that the coefficient matroid is uniform (else NotUniform) and that
// every Betti number at index >= 2 equals the Buchsbaum-Rim-Taylor rank
// exactly. Equality failures are reported, never retried.
template <Field F>
VerificationReport verify_sharpness(const Presentation<F>& p, unsigned threads = 0) {
  p.require_valid();
  const std::size_t n = p.cols();
  const std::size_t r = fraction_field_rank(p);

  bool uniform = true;
  const Matroid mat = coefficient_matroid(p);
  for_each_subset_of_size(n, r, [&](SubsetMask cols) {
    if (uniform && mat.rank_of(cols) != r) uniform = false;
  });
  if (!uniform)
    throw NotUniform("coefficient matroid is not uniform of rank " + std::to_string(r));

  const auto table = betti_table(p, 0, threads);
  const auto totals = table.totals();

  VerificationReport rep;
  rep.kind = "sharpness";
  rep.profile = BoundProfile{p.rows(), n, module_rank(p)};
  rep.computed = totals;
  const long long lam = rep.profile.lambda();
  long long top = static_cast<long long>(totals.size()) - 1;
  if (lam > top) top = lam;
  bool ok = true;
  for (std::size_t i = 2; static_cast<long long>(i) <= top; ++i) {
    IndexCheck c;
    c.index = i;
    c.computed = i < totals.size() ? totals[i] : 0;
    c.bound = brt_rank(n, r, i);
    c.slack = c.bound - BigInt(c.computed);
    c.pass = c.slack == 0;  // sharpness asks for equality
    c.equality = c.pass;
    ok = ok && c.pass;
    rep.checks.push_back(std::move(c));
  }
  rep.sizes_ok = totals[0] == p.rows() && (totals.size() > 1 ? totals[1] : 0) == n;
  rep.pass = ok && rep.sizes_ok;
  return rep;
}

}  // namespace multibetti
