#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "multibetti/graded.hpp"
#include "multibetti/parallel.hpp"

namespace multibetti {

struct BettiTable {
  // by_index[i] maps a degree to the multiplicity beta_{i,b}; zeros omitted.
  std::vector<std::map<DegreeVector, std::size_t>> by_index;

  std::size_t at(std::size_t i, const DegreeVector& b) const {
    if (i >= by_index.size()) return 0;
    const auto it = by_index[i].find(b);
    return it == by_index[i].end() ? 0 : it->second;
  }
  std::vector<std::size_t> totals() const {
    std::vector<std::size_t> t(by_index.size(), 0);
    for (std::size_t i = 0; i < by_index.size(); ++i)
      for (const auto& [b, v] : by_index[i]) t[i] += v;
    return t;
  }
};

// Bass numbers at one monomial prime (the variables in `prime`). Reported
// degrees carry the window coordinate on the prime's variables and 0 off
// them; off-prime directions are clamped during the computation.
struct BassTable {
  SubsetMask prime;
  std::vector<std::map<DegreeVector, std::size_t>> by_index;

  std::size_t at(std::size_t i, const DegreeVector& b) const {
    if (i >= by_index.size()) return 0;
    const auto it = by_index[i].find(b);
    return it == by_index[i].end() ? 0 : it->second;
  }
  std::vector<std::size_t> totals() const {
    std::vector<std::size_t> t(by_index.size(), 0);
    for (std::size_t i = 0; i < by_index.size(); ++i)
      for (const auto& [b, v] : by_index[i]) t[i] += v;
    return t;
  }
};

namespace detail {

inline DegreeVector mask_degree(std::size_t m, SubsetMask j) {
  DegreeVector d = DegreeVector::zero(m);
  for (const std::size_t idx : j.indices()) d[idx] = 1;
  return d;
}

// Submasks of `a` grouped by cardinality, each group in ascending numeric
// order. Group count is |a| + 1.
inline std::vector<std::vector<SubsetMask>> subsets_by_size(SubsetMask a) {
  const auto idx = a.indices();
  const std::size_t k = idx.size();
  std::vector<std::vector<SubsetMask>> out(k + 1);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << k); ++s) {
    SubsetMask mask;
    for (std::size_t bit = 0; bit < k; ++bit)
      if ((s >> bit) & 1u) mask = mask.with(idx[bit]);
    out[mask.count()].push_back(mask);
  }
  for (auto& group : out) std::sort(group.begin(), group.end());
  return out;
}

// Parity of the position of j inside rest | {j}: the number of members of
// rest below j.
inline bool koszul_sign_negative(SubsetMask rest, std::size_t j) {
  const std::uint32_t below = rest.bits() & ((std::uint32_t{1} << j) - 1);
  return (std::popcount(below) % 2) != 0;
}

template <Field F>
void add_signed_block(ExactMatrix<F>& dst, const ExactMatrix<F>& block, std::size_t row0,
                      std::size_t col0, bool negative) {
  const F& k = dst.field();
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      dst.at(row0 + i, col0 + j) =
          negative ? k.neg(block.at(i, j)) : block.at(i, j);
}

template <class Group>
std::size_t group_position(const Group& group, SubsetMask j) {
  return static_cast<std::size_t>(
      std::lower_bound(group.begin(), group.end(), j) - group.begin());
}

}  // namespace detail

// The degree-b slice of the module tensored with the exterior complex on all
// m variables: term i is the sum of pieces L_(b - eps_J) over |J| = i, and
// the boundary acts blockwise by signed variable multiplication. Homology of
// this chain gives beta_{i,b}.
template <Field F>
struct ChainAtDegree {
  DegreeVector degree;
  std::vector<std::size_t> dims;           // length m + 1
  std::vector<ExactMatrix<F>> boundary;    // boundary[i]: term i -> term i-1; [0] has 0 rows
};

template <Field F>
ChainAtDegree<F> tor_complex_at(const PieceTable<F>& pieces, const DegreeVector& b) {
  const auto& p = pieces.presentation();
  const std::size_t m = p.vars();
  const F& k = p.field();
  const auto groups = detail::subsets_by_size(SubsetMask::full(m));

  std::vector<std::size_t> dims(m + 1, 0);
  std::vector<std::vector<std::size_t>> offsets(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    offsets[i].reserve(groups[i].size());
    for (const SubsetMask j : groups[i]) {
      offsets[i].push_back(dims[i]);
      dims[i] += pieces.at(b - detail::mask_degree(m, j)).dim();
    }
  }

  std::vector<ExactMatrix<F>> boundary;
  boundary.reserve(m + 1);
  boundary.emplace_back(k, 0, dims[0]);
  for (std::size_t i = 1; i <= m; ++i) {
    ExactMatrix<F> di(k, dims[i - 1], dims[i]);
    for (std::size_t gi = 0; gi < groups[i].size(); ++gi) {
      const SubsetMask j = groups[i][gi];
      const DegreeVector src_deg = b - detail::mask_degree(m, j);
      const auto& src = pieces.at(src_deg);
      if (src.dim() == 0) continue;
      for (const std::size_t var : j.indices()) {
        const SubsetMask rest = j.without(var);
        const auto& dst = pieces.at(src_deg.plus_unit(var));
        if (dst.dim() == 0) continue;
        const auto block = detail::multiplication_between(k, src, dst);
        detail::add_signed_block(di, block, offsets[i - 1][detail::group_position(groups[i - 1], rest)],
                                 offsets[i][gi], detail::koszul_sign_negative(rest, var));
      }
    }
    boundary.push_back(std::move(di));
  }
  return ChainAtDegree<F>{b, std::move(dims), std::move(boundary)};
}

template <Field F>
std::vector<std::size_t> homology_dims(const ChainAtDegree<F>& c) {
  const std::size_t top = c.dims.size() - 1;
  std::vector<std::size_t> ranks(top + 2, 0);
  for (std::size_t i = 1; i <= top; ++i) ranks[i] = rank(c.boundary[i]);
  std::vector<std::size_t> h(top + 1, 0);
  for (std::size_t i = 0; i <= top; ++i) h[i] = c.dims[i] - ranks[i] - ranks[i + 1];
  return h;
}

// Dual-side complex at one prime: terms run over subsets J of the prime's
// variables, term i at base + eps_J, coboundary blocks are signed variable
// multiplications toward larger J. Cohomology gives the Bass numbers.
// Off-prime coordinates of `base` must already sit at the clamp value.
template <Field F>
struct CochainAtDegree {
  DegreeVector base;
  SubsetMask prime;
  std::vector<std::size_t> dims;            // length |prime| + 1
  std::vector<ExactMatrix<F>> coboundary;   // coboundary[i]: term i -> term i+1; last has 0 rows
};

template <Field F>
CochainAtDegree<F> ext_complex_at(const PieceTable<F>& pieces, SubsetMask prime,
                                  const DegreeVector& base) {
  const auto& p = pieces.presentation();
  const std::size_t m = p.vars();
  const F& k = p.field();
  const auto groups = detail::subsets_by_size(prime);
  const std::size_t top = groups.size() - 1;

  std::vector<std::size_t> dims(top + 1, 0);
  std::vector<std::vector<std::size_t>> offsets(top + 1);
  for (std::size_t i = 0; i <= top; ++i) {
    offsets[i].reserve(groups[i].size());
    for (const SubsetMask j : groups[i]) {
      offsets[i].push_back(dims[i]);
      dims[i] += pieces.at(base + detail::mask_degree(m, j)).dim();
    }
  }

  std::vector<ExactMatrix<F>> delta;
  delta.reserve(top + 1);
  for (std::size_t i = 0; i < top; ++i) {
    ExactMatrix<F> di(k, dims[i + 1], dims[i]);
    for (std::size_t gi = 0; gi < groups[i].size(); ++gi) {
      const SubsetMask j = groups[i][gi];
      const DegreeVector src_deg = base + detail::mask_degree(m, j);
      const auto& src = pieces.at(src_deg);
      if (src.dim() == 0) continue;
      for (const std::size_t var : prime.indices()) {
        if (j.test(var)) continue;
        const SubsetMask bigger = j.with(var);
        const auto& dst = pieces.at(src_deg.plus_unit(var));
        if (dst.dim() == 0) continue;
        const auto block = detail::multiplication_between(k, src, dst);
        detail::add_signed_block(di, block,
                                 offsets[i + 1][detail::group_position(groups[i + 1], bigger)],
                                 offsets[i][gi], detail::koszul_sign_negative(j, var));
      }
    }
    delta.push_back(std::move(di));
  }
  delta.emplace_back(k, 0, dims[top]);
  return CochainAtDegree<F>{base, prime, std::move(dims), std::move(delta)};
}

template <Field F>
std::vector<std::size_t> cohomology_dims(const CochainAtDegree<F>& c) {
  const std::size_t top = c.dims.size() - 1;
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t i = 0; i <= top; ++i) ranks[i] = rank(c.coboundary[i]);
  std::vector<std::size_t> h(top + 1, 0);
  for (std::size_t i = 0; i <= top; ++i)
    h[i] = c.dims[i] - ranks[i] - (i > 0 ? ranks[i - 1] : 0);
  return h;
}

// Betti table over the degree box [0, a] for a the determining degree.
// Degrees outside the box carry nothing; `margin` widens the box in every
// direction as a stability check. Throws MinimalityBroken when the computed
// beta_0 or beta_1 disagree with the presentation sizes.
template <Field F>
BettiTable betti_table(const Presentation<F>& p, unsigned margin = 0, unsigned threads = 0) {
  p.require_valid();
  const DegreeVector a = determining_degree(p);
  const std::size_t m = p.vars();
  const int w = static_cast<int>(margin);

  DegreeVector piece_lo = DegreeVector::zero(m), piece_hi = a;
  DegreeVector win_lo = DegreeVector::zero(m), win_hi = a;
  for (std::size_t i = 0; i < m; ++i) {
    piece_lo[i] = -w - 1;
    piece_hi[i] = a[i] + w;
    win_lo[i] = -w;
    win_hi[i] = a[i] + w;
  }
  const PieceTable<F> pieces(p, piece_lo, piece_hi);

  std::vector<DegreeVector> degrees;
  for_each_degree_in_box(win_lo, win_hi, [&](const DegreeVector& b) { degrees.push_back(b); });

  std::vector<std::vector<std::size_t>> slots(degrees.size());
  parallel_for(
      degrees.size(),
      [&](std::size_t idx) {
        const auto chain = tor_complex_at(pieces, degrees[idx]);
        const bool empty =
            std::all_of(chain.dims.begin(), chain.dims.end(), [](std::size_t d) { return d == 0; });
        slots[idx] = empty ? std::vector<std::size_t>(m + 1, 0) : homology_dims(chain);
      },
      threads);

  BettiTable table;
  table.by_index.assign(m + 1, {});
  for (std::size_t idx = 0; idx < degrees.size(); ++idx)
    for (std::size_t i = 0; i <= m; ++i)
      if (slots[idx][i] > 0) table.by_index[i][degrees[idx]] = slots[idx][i];

  const auto totals = table.totals();
  const std::size_t b1 = totals.size() > 1 ? totals[1] : 0;
  if (totals[0] != p.rows() || b1 != p.cols())
    throw MinimalityBroken("presentation is not minimal: computed (beta0, beta1) = (" +
                           std::to_string(totals[0]) + "," + std::to_string(b1) +
                           ") against sizes (" + std::to_string(p.rows()) + "," +
                           std::to_string(p.cols()) + ")");
  return table;
}

namespace detail {

template <Field F>
BassTable bass_table_from_pieces(const PieceTable<F>& pieces, SubsetMask prime,
                                 const DegreeVector& a, unsigned margin, unsigned threads) {
  const std::size_t m = a.size();
  const int w = static_cast<int>(margin);

  DegreeVector win_lo = a, win_hi = a;
  for (std::size_t i = 0; i < m; ++i) {
    if (prime.test(i)) {
      win_lo[i] = -1 - w;
      win_hi[i] = a[i] + w;
    }
  }
  std::vector<DegreeVector> bases;
  for_each_degree_in_box(win_lo, win_hi, [&](const DegreeVector& b) { bases.push_back(b); });

  const std::size_t top = prime.count();
  std::vector<std::vector<std::size_t>> slots(bases.size());
  parallel_for(
      bases.size(),
      [&](std::size_t idx) {
        const auto cochain = ext_complex_at(pieces, prime, bases[idx]);
        const bool empty = std::all_of(cochain.dims.begin(), cochain.dims.end(),
                                       [](std::size_t d) { return d == 0; });
        slots[idx] =
            empty ? std::vector<std::size_t>(top + 1, 0) : cohomology_dims(cochain);
      },
      threads);

  BassTable table;
  table.prime = prime;
  table.by_index.assign(top + 1, {});
  for (std::size_t idx = 0; idx < bases.size(); ++idx) {
    DegreeVector key = DegreeVector::zero(m);
    for (std::size_t i = 0; i < m; ++i)
      if (prime.test(i)) key[i] = bases[idx][i];
    for (std::size_t i = 0; i <= top; ++i)
      if (slots[idx][i] > 0) table.by_index[i][key] = slots[idx][i];
  }
  return table;
}

}  // namespace detail

// Bass numbers at the monomial prime spanned by the given variables.
// Directions outside the prime are clamped at the determining degree (the
// localization is degreewise constant there); the window on the prime's
// coordinates is [-1, a_j], widened by `margin` for stability checks.
template <Field F>
BassTable bass_at_prime(const Presentation<F>& p, SubsetMask prime, unsigned margin = 0,
                        unsigned threads = 0) {
  p.require_valid();
  if (!prime.is_subset_of(SubsetMask::full(p.vars())))
    throw Error("prime variable index out of range");
  const DegreeVector a = determining_degree(p);
  const std::size_t m = p.vars();
  const int w = static_cast<int>(margin);

  DegreeVector piece_lo = a, piece_hi = a;
  for (std::size_t i = 0; i < m; ++i) {
    if (prime.test(i)) {
      piece_lo[i] = -1 - w;
      piece_hi[i] = a[i] + 1 + w;
    }
  }
  const PieceTable<F> pieces(p, piece_lo, piece_hi);
  return detail::bass_table_from_pieces(pieces, prime, a, margin, threads);
}

// One Bass table per monomial prime, all 2^m of them in ascending mask
// order, starting with the zero prime (empty subset). m <= 6 enforced.
template <Field F>
std::vector<BassTable> all_bass_tables(const Presentation<F>& p, unsigned margin = 0,
                                       unsigned threads = 0) {
  p.require_valid();
  const std::size_t m = p.vars();
  if (m > 6) throw Error("the exhaustive prime loop is capped at 6 variables, got " +
                         std::to_string(m));
  const DegreeVector a = determining_degree(p);
  const int w = static_cast<int>(margin);

  DegreeVector piece_lo = a, piece_hi = a;
  for (std::size_t i = 0; i < m; ++i) {
    piece_lo[i] = -1 - w;
    piece_hi[i] = a[i] + 1 + w;
  }
  const PieceTable<F> pieces(p, piece_lo, piece_hi);

  const std::size_t count = std::size_t{1} << m;
  std::vector<BassTable> tables;
  tables.reserve(count);
  for (std::size_t bits = 0; bits < count; ++bits)
    tables.push_back(detail::bass_table_from_pieces(
        pieces, SubsetMask(static_cast<std::uint32_t>(bits)), a, margin, threads));
  return tables;
}

inline std::vector<std::size_t> summed_bass_totals(const std::vector<BassTable>& tables,
                                                   std::size_t vars,
                                                   bool include_zero_prime) {
  std::vector<std::size_t> out(vars + 1, 0);
  for (const auto& t : tables) {
    if (!include_zero_prime && t.prime.empty()) continue;
    const auto tt = t.totals();
    for (std::size_t i = 0; i < tt.size(); ++i) out[i] += tt[i];
  }
  return out;
}

// Total Bass numbers: per-index sums over every monomial prime. The zero
// prime (empty subset) is included by default and contributes exactly the
// module rank at index 0.
template <Field F>
std::vector<std::size_t> total_bass(const Presentation<F>& p, bool include_zero_prime = true,
                                    unsigned margin = 0, unsigned threads = 0) {
  return summed_bass_totals(all_bass_tables(p, margin, threads), p.vars(), include_zero_prime);
}

inline std::vector<std::size_t> trim_trailing_zeros(std::vector<std::size_t> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace multibetti
