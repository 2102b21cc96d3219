#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "krull/errors.hpp"

namespace krull {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Egcd {
  Int g, x, y;  // g = gcd >= 0, a*x + b*y = g
};

inline Egcd egcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b, r = a % b;
    a = b;
    b = r;
    Int nx = x0 - q * x1, ny = y0 - q * y1;
    x0 = x1;
    y0 = y1;
    x1 = nx;
    y1 = ny;
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

inline bool is_prime_u32(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Prime field element with a runtime modulus below 2^31, so products fit
// in int64 without overflow.
struct Fp {
  int64_t v = 0;
  int64_t p = 0;

  static Fp make(int64_t value, int64_t mod) {
    Fp f;
    f.p = mod;
    f.v = value % mod;
    if (f.v < 0) f.v += mod;
    return f;
  }
  bool operator==(const Fp& o) const = default;
};

namespace detail {
inline void same_field(const Fp& a, const Fp& b) {
  if (a.p != b.p) throw contract_error("mixed prime field moduli");
}
}  // namespace detail

inline Fp operator+(const Fp& a, const Fp& b) {
  detail::same_field(a, b);
  return Fp::make(a.v + b.v, a.p);
}
inline Fp operator-(const Fp& a, const Fp& b) {
  detail::same_field(a, b);
  return Fp::make(a.v - b.v, a.p);
}
inline Fp operator-(const Fp& a) { return Fp::make(-a.v, a.p); }
inline Fp operator*(const Fp& a, const Fp& b) {
  detail::same_field(a, b);
  return Fp::make(a.v * b.v, a.p);
}

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline Fp one_like(const Fp& a) { return Fp::make(1, a.p); }

inline Fp inv(const Fp& a) {
  if (a.v == 0) throw contract_error("inverse of zero in a prime field");
  Egcd e = egcd(Int(a.v), Int(a.p));
  return Fp::make((int64_t)e.x, a.p);
}
inline Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }

inline std::string coeff_str(const Fp& a) { return std::to_string(a.v); }

inline bool is_zero(const Rat& a) { return a == 0; }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat inv(const Rat& a) {
  if (a == 0) throw contract_error("inverse of zero");
  return Rat(1) / a;
}
inline std::string coeff_str(const Rat& a) { return a.str(); }

}  // namespace krull
