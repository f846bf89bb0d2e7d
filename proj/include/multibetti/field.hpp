#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "multibetti/errors.hpp"

namespace multibetti {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw Error("empty integer literal");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw Error("malformed integer literal '" + s + "'");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw Error("malformed integer literal '" + s + "'");
  return BigInt(s);
}

}  // namespace detail

// Exact rationals. The backing type keeps every value in lowest terms with a
// positive denominator, which is exactly the canonical form we serialize.
struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(v); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw Error("division by zero");
    return a / b;
  }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return div(one(), a); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool same(const RationalField&) const { return true; }

  std::string to_string(const Elem& a) const {
    const BigInt n = boost::multiprecision::numerator(a);
    const BigInt d = boost::multiprecision::denominator(a);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
  }

  // Accepts "p" or "p/q" with optional sign on either part; q must be nonzero.
  Elem parse(const std::string& s) const {
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Elem(detail::parse_bigint(s));
    BigInt num = detail::parse_bigint(s.substr(0, slash));
    BigInt den = detail::parse_bigint(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    if (den < 0) {  // the backing type insists on positive denominators
      num = -num;
      den = -den;
    }
    return Elem(num, den);
  }
};

// F_p with elements stored as reduced residues in [0, p). The modulus is a
// field-object property, not a per-element one; mixing moduli is an error.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2) throw Error("prime field modulus must be at least 2");
    if (p >= (std::uint64_t{1} << 31))
      throw Error("prime field modulus must be below 2^31");
  }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }  // p < 2^31, no overflow
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw Error("division by zero in prime field");
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      const std::int64_t q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) throw Error("modulus is not prime: no inverse exists");
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool same(const PrimeField& other) const { return p_ == other.p_; }

  std::string to_string(Elem a) const { return std::to_string(a); }

  // Accepts any decimal integer (sign allowed) and reduces mod p.
  Elem parse(const std::string& s) const {
    const BigInt v = detail::parse_bigint(s);
    BigInt r = v % BigInt(p_);
    if (r < 0) r += BigInt(p_);
    return static_cast<Elem>(r.convert_to<std::uint64_t>());
  }

 private:
  std::uint64_t p_;
};

template <class F>
concept Field = requires(const F f, const typename F::Elem& a, const typename F::Elem& b) {
  typename F::Elem;
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.eq(a, b) } -> std::convertible_to<bool>;
  { f.same(f) } -> std::convertible_to<bool>;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace multibetti
