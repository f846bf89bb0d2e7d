#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "multibetti/field.hpp"
#include "multibetti/koszul.hpp"

namespace multibetti {

// C(n, k) over arbitrary-precision integers, zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (long long i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    r /= BigInt(i);
  }
  return r;
}

// dim of the k-th symmetric power of an r-dimensional space: C(r+k-1, k).
inline BigInt symmetric_power_dim(long long r, long long k) {
  return binomial(r + k - 1, k);
}

// Upper bound for the i-th Betti number from the first two and the rank:
// C(beta1, beta0 - rank + i - 1) * C(beta0 - rank + i - 3, i - 2), i >= 2.
inline BigInt betti_bound(std::size_t beta0, std::size_t beta1, std::size_t rank,
                          std::size_t i) {
  if (i < 2) throw IndexTooSmall("betti_bound needs index >= 2, got " + std::to_string(i));
  if (rank > beta0) throw Error("module rank cannot exceed beta0");
  const long long rbar = static_cast<long long>(beta0) - static_cast<long long>(rank);
  const long long ii = static_cast<long long>(i);
  return binomial(static_cast<long long>(beta1), rbar + ii - 1) *
         binomial(rbar + ii - 3, ii - 2);
}

// Rank of the i-th term of the Buchsbaum-Rim-Taylor complex on an r x n
// uniform presentation: C(n, r+i-1) * C(r+i-3, i-2). Vanishes beyond
// lambda = n - r + 1.
inline BigInt brt_rank(std::size_t n, std::size_t r, std::size_t i) {
  if (i < 2) throw IndexTooSmall("brt_rank needs index >= 2, got " + std::to_string(i));
  if (r > n) throw Error("matrix rank cannot exceed the column count");
  const long long rr = static_cast<long long>(r), ii = static_cast<long long>(i);
  return binomial(static_cast<long long>(n), rr + ii - 1) * binomial(rr + ii - 3, ii - 2);
}

// Bound for total Bass numbers; the codimension shift d reduces it to the
// Betti-style bound at index i - d with rank 0.
inline BigInt bass_bound(std::size_t mu0, std::size_t mu1, std::size_t i, std::size_t d) {
  if (i < 2 + d)
    throw IndexTooSmall("bass_bound needs index >= 2 + d, got index " + std::to_string(i) +
                        " with d = " + std::to_string(d));
  return betti_bound(mu0, mu1, 0, i - d);
}

struct BoundProfile {
  std::size_t beta0 = 0;
  std::size_t beta1 = 0;
  std::size_t rank = 0;

  std::size_t rbar() const { return beta0 - rank; }
  // Largest index with a possibly nonzero bound.
  long long lambda() const {
    return static_cast<long long>(beta1) - static_cast<long long>(rbar()) + 1;
  }
};

struct IndexCheck {
  std::size_t index = 0;
  std::size_t computed = 0;
  BigInt bound;
  BigInt slack;  // bound - computed, negative on failure
  bool pass = false;
  bool equality = false;
};

struct VerificationReport {
  std::string kind;
  BoundProfile profile;
  std::vector<std::size_t> computed;  // per-index totals, starting at index 0
  std::vector<IndexCheck> checks;     // indices >= 2
  bool sizes_ok = true;
  bool pass = false;
};

namespace detail {

inline VerificationReport check_against_bound(std::string kind, BoundProfile profile,
                                              std::vector<std::size_t> computed) {
  VerificationReport rep;
  rep.kind = std::move(kind);
  rep.profile = profile;
  rep.computed = std::move(computed);
  const long long lam = profile.lambda();
  long long top = static_cast<long long>(rep.computed.size()) - 1;
  if (lam > top) top = lam;
  bool ok = true;
  for (std::size_t i = 2; static_cast<long long>(i) <= top; ++i) {
    IndexCheck c;
    c.index = i;
    c.computed = i < rep.computed.size() ? rep.computed[i] : 0;
    c.bound = betti_bound(profile.beta0, profile.beta1, profile.rank, i);
    c.slack = c.bound - BigInt(c.computed);
    c.pass = c.slack >= 0;
    c.equality = c.slack == 0;
    ok = ok && c.pass;
    rep.checks.push_back(std::move(c));
  }
  rep.pass = ok;
  return rep;
}

}  // namespace detail

// Computes the Betti table and checks every index >= 2 against the bound
// derived from (beta0, beta1, rank). Per-index slack is reported.
template <Field F>
VerificationReport verify_betti(const Presentation<F>& p, unsigned threads = 0) {
  const auto table = betti_table(p, 0, threads);
  const auto totals = table.totals();
  BoundProfile profile{p.rows(), p.cols(), module_rank(p)};
  auto rep = detail::check_against_bound("verify-betti", profile, totals);
  rep.sizes_ok = totals[0] == p.rows() && (totals.size() > 1 ? totals[1] : 0) == p.cols();
  rep.pass = rep.pass && rep.sizes_ok;
  return rep;
}

// Same for total Bass numbers; the profile is (mu0, mu1) with rank 0.
template <Field F>
VerificationReport verify_bass(const Presentation<F>& p, bool include_zero_prime = true,
                               unsigned threads = 0) {
  const auto totals = total_bass(p, include_zero_prime, 0, threads);
  BoundProfile profile{totals.empty() ? 0 : totals[0], totals.size() > 1 ? totals[1] : 0, 0};
  auto rep = detail::check_against_bound("verify-bass", profile, totals);
  return rep;
}

}  // namespace multibetti
