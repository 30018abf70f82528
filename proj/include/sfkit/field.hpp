#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sfkit {

/// Description of a coefficient field as it appears in problem files.
struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  std::uint64_t modulus = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p) { return {Kind::prime_field, p}; }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The rational numbers. Elements are kept canonical by GMP
/// (reduced, positive denominator).
class RationalField {
 public:
  using Element = mpq_class;
  static constexpr bool is_prime_field = false;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw std::domain_error("division by zero");
    Element r(num, den);
    r.canonicalize();
    return r;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return Element(1) / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  /// Small random rational with numerator in [-bound, bound].
  Element random(std::mt19937_64& rng, long bound = 50) const {
    std::uniform_int_distribution<long> d(-bound, bound);
    return Element(d(rng));
  }

  std::string render(const Element& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }
  std::uint64_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  bool operator==(const RationalField&) const { return true; }
};

/// Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr bool is_prime_field = true;

  explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
      throw std::invalid_argument("modulus " + std::to_string(p) +
                                  " is not a prime below 2^31");
  }

  std::uint32_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_mpz(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    Element d = from_mpz(den);
    if (d == 0) throw std::domain_error("denominator vanishes modulo p");
    return mul(from_mpz(num), inv(d));
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool is_negative(Element) const { return false; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(std::uint64_t{a} * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Element random(std::mt19937_64& rng, long = 0) const {
    std::uniform_int_distribution<std::uint32_t> d(0, p_ - 1);
    return d(rng);
  }

  std::string render(Element a) const { return std::to_string(a); }
  std::string name() const { return "GF " + std::to_string(p_); }
  std::uint64_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace sfkit
