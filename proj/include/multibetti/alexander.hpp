#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "multibetti/degree.hpp"
#include "multibetti/errors.hpp"
#include "multibetti/koszul.hpp"
#include "multibetti/presentation.hpp"

namespace multibetti {

// Monomial ideal, stored as its unique minimal generating exponents.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t vars, std::vector<DegreeVector> gens)
      : vars_(vars) {
    for (const auto& g : gens) {
      if (g.size() != vars_) throw Error("generator arity mismatch");
      if (!g.is_nonnegative())
        throw NegativeDegrees("monomial exponents must be nonnegative");
    }
    gens_ = divisibility_minimal(std::move(gens));
  }

  std::size_t vars() const { return vars_; }
  const std::vector<DegreeVector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    return gens_.size() == 1 && gens_[0] == DegreeVector::zero(vars_);
  }

  bool contains(const DegreeVector& b) const {
    if (b.size() != vars_) throw Error("degree arity mismatch");
    if (!b.is_nonnegative()) return false;
    for (const auto& g : gens_)
      if (g.leq(b)) return true;
    return false;
  }

  bool operator==(const MonomialIdeal& o) const {
    return vars_ == o.vars_ && gens_ == o.gens_;
  }

 private:
  std::size_t vars_;
  std::vector<DegreeVector> gens_;
};

// a\b: coordinatewise a_j+1-b_j where b_j >= 1, and 0 where b_j = 0.
// Defined only inside the box 0 <= b <= a.
inline DegreeVector complement_degree(const DegreeVector& a, const DegreeVector& b) {
  if (a.size() != b.size()) throw Error("degree arity mismatch");
  std::vector<int> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (b[j] < 0 || b[j] > a[j])
      throw ConstraintViolated("degree leaves the box [0,a] at coordinate " +
                               std::to_string(j));
    out[j] = b[j] >= 1 ? a[j] + 1 - b[j] : 0;
  }
  return DegreeVector(std::move(out));
}

namespace detail {

inline void check_dual_inputs(const MonomialIdeal& ideal, const DegreeVector& a) {
  if (a.size() != ideal.vars()) throw Error("degree arity mismatch");
  if (!a.is_nonnegative()) throw NegativeDegrees("box corner must be nonnegative");
  for (const auto& g : ideal.generators())
    if (!g.leq(a))
      throw GeneratorExceedsA("generator " + g.to_string() +
                              " leaves the box [0," + a.to_string() + "]");
}

// Intersection of two monomial ideals: pairwise joins of generators.
inline MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  std::vector<DegreeVector> gens;
  gens.reserve(lhs.generators().size() * rhs.generators().size());
  for (const auto& f : lhs.generators())
    for (const auto& g : rhs.generators())
      gens.push_back(DegreeVector::join(f, g));
  return MonomialIdeal(lhs.vars(), std::move(gens));
}

// (x_j^{c_j} : c_j >= 1); the all-zero c gives the zero ideal.
inline MonomialIdeal frame_ideal(const DegreeVector& c) {
  std::vector<DegreeVector> gens;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] >= 1) {
      DegreeVector g = DegreeVector::zero(c.size());
      g[j] = c[j];
      gens.push_back(std::move(g));
    }
  return MonomialIdeal(c.size(), std::move(gens));
}

}  // namespace detail

// Alexander dual with respect to a, computed by scanning the box [0,a]:
// b lies in the dual exactly when a-b misses the ideal. Throws when any
// generator leaves [0,a] or the box has more than a million lattice points.
inline MonomialIdeal alexander_dual(const MonomialIdeal& ideal, const DegreeVector& a) {
  detail::check_dual_inputs(ideal, a);
  const std::size_t m = ideal.vars();

  std::uint64_t cells = 1;
  for (std::size_t j = 0; j < m; ++j) {
    cells *= static_cast<std::uint64_t>(a[j]) + 1;
    if (cells > 1000000)
      throw BoxTooLarge("box [0," + a.to_string() + "] exceeds 1e6 lattice points");
  }

  std::vector<DegreeVector> members;
  for_each_degree_in_box(DegreeVector::zero(m), a, [&](const DegreeVector& b) {
    if (!ideal.contains(a - b)) members.push_back(b);
  });
  return MonomialIdeal(m, std::move(members));
}

// Same dual as an intersection of frame ideals, one per generator. Used as
// an independent route; the zero ideal dualizes to the unit ideal.
inline MonomialIdeal alexander_dual_by_intersection(const MonomialIdeal& ideal,
                                                    const DegreeVector& a) {
  detail::check_dual_inputs(ideal, a);
  const std::size_t m = ideal.vars();
  MonomialIdeal acc(m, {DegreeVector::zero(m)});
  for (const auto& g : ideal.generators())
    acc = detail::intersect(acc, detail::frame_ideal(complement_degree(a, g)));
  return acc;
}

// Both routes, cross-checked against each other.
inline MonomialIdeal alexander_dual_checked(const MonomialIdeal& ideal,
                                            const DegreeVector& a) {
  MonomialIdeal box_route = alexander_dual(ideal, a);
  MonomialIdeal meet_route = alexander_dual_by_intersection(ideal, a);
  if (!(box_route == meet_route))
    throw Error("alexander dual routes disagree; this is a bug");
  return box_route;
}

struct ProbeMismatch {
  std::size_t index = 0;
  DegreeVector degree{std::vector<int>{}};
  std::size_t betti = 0;
  DegreeVector bass_degree{std::vector<int>{}};
  std::size_t bass = 0;
};

struct ProbeReport {
  DegreeVector a{std::vector<int>{}};
  std::size_t degrees_checked = 0;
  std::vector<ProbeMismatch> mismatches;
  std::vector<std::size_t> betti_totals;
  std::vector<std::size_t> bass_totals;
  bool totals_match = false;
  bool pass = false;
};

// Tests the degreewise pairing between a candidate module Q and a reference
// module P inside the box [0,a]: the Betti number of Q at (i, b) is compared
// with the Bass number of P at index i, prime supp(b), and degree a-b on the
// support (zero off it). Mismatches are reported, not thrown.
template <Field F>
ProbeReport miller_relation_probe(const Presentation<F>& candidate,
                                  const Presentation<F>& reference,
                                  const DegreeVector& a, unsigned threads = 0) {
  if (candidate.vars() != reference.vars()) throw Error("variable count mismatch");
  const std::size_t m = candidate.vars();
  if (a.size() != m) throw Error("degree arity mismatch");
  if (!a.is_nonnegative()) throw NegativeDegrees("box corner must be nonnegative");
  if (m > 6) throw Error("duality probe supports at most 6 variables");
  candidate.require_valid();
  reference.require_valid();

  const BettiTable betti = betti_table(candidate, 0, threads);
  const std::vector<BassTable> bass_all = all_bass_tables(reference, 0, threads);

  ProbeReport rep;
  rep.a = a;
  for_each_degree_in_box(DegreeVector::zero(m), a, [&](const DegreeVector& b) {
    ++rep.degrees_checked;
    const SubsetMask supp = b.support();
    const BassTable& bass = bass_all[supp.bits()];
    DegreeVector c = DegreeVector::zero(m);
    for (std::size_t j = 0; j < m; ++j)
      if (supp.test(j)) c[j] = a[j] - b[j];
    for (std::size_t i = 0; i <= m; ++i) {
      const std::size_t lhs = betti.at(i, b);
      const std::size_t rhs = bass.at(i, c);
      if (lhs != rhs) rep.mismatches.push_back(ProbeMismatch{i, b, lhs, c, rhs});
    }
  });
  rep.betti_totals = betti.totals();
  rep.bass_totals = summed_bass_totals(bass_all, m, true);
  rep.totals_match = trim_trailing_zeros(rep.betti_totals) ==
                     trim_trailing_zeros(rep.bass_totals);
  rep.pass = rep.mismatches.empty() && rep.totals_match;
  return rep;
}

}  // namespace multibetti
