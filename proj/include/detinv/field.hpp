#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace detinv {

// Coefficient domains. Each one is a small value object that owns whatever
// context its elements need (the modulus for F_p) and exposes arithmetic as
// member functions, so the matrix and polynomial templates stay generic.

/// The integers, used as the coefficient ring of freshly parsed polynomials.
struct IntegerRing {
  using Element = mpz_class;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(const mpz_class& v) const { return v; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  bool operator==(const IntegerRing&) const = default;
};

/// Arbitrary-precision rationals.
struct RationalField {
  using Element = mpq_class;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(const mpz_class& v) const { return mpq_class(v); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return a * inv(b); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  /// a -= f * b
  void sub_mul(Element& a, const Element& f, const Element& b) const { a -= f * b; }
  std::string to_string(const Element& a) const { return a.get_str(); }

  /// Rescales a row to a primitive integer vector (same sign). Keeps entry
  /// growth in check during elimination; the row space is unchanged.
  void normalize_row(std::span<Element> row) const {
    mpz_class den = 1;
    mpz_class num = 0;
    for (const auto& e : row) {
      if (sgn(e) == 0) continue;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), e.get_num_mpz_t());
    }
    if (num == 0) return;
    if (den == 1 && num == 1) return;
    mpq_class scale(den, num);
    scale.canonicalize();
    for (auto& e : row)
      if (sgn(e) != 0) e *= scale;
  }

  bool operator==(const RationalField&) const = default;
};

/// The prime field F_p for p < 2^31.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return static_cast<Element>(r.get_ui());
  }
  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t(a) * b) % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return pow(a, p_ - 2);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  void sub_mul(Element& a, Element f, Element b) const { a = sub(a, mul(f, b)); }
  std::string to_string(Element a) const { return std::to_string(a); }
  void normalize_row(std::span<Element>) const {}

  bool operator==(const PrimeField&) const = default;

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace detinv
