#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "sepalg/error.hpp"
#include "sepalg/fp.hpp"
#include "sepalg/rat.hpp"

namespace sepalg {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Runtime description of the ground field: characteristic 0 means the
/// rationals, a prime p means the field with p elements.
struct FieldSpec {
  std::uint64_t characteristic = 0;

  void validate() const {
    check(characteristic == 0 || is_prime(characteristic),
          "FieldSpec: characteristic must be 0 or prime");
  }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// The rational field, as a stateless field descriptor.
struct QQ {
  using Elem = Rat;

  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat from_int(long n) const { return Rat(n); }
  Rat parse(std::string_view s) const { return Rat::parse(s); }
  std::uint64_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec{0}; }

  friend bool operator==(const QQ&, const QQ&) { return true; }
  friend bool operator!=(const QQ&, const QQ&) { return false; }
};

/// A prime field, as a field descriptor carrying the modulus.
struct GF {
  std::uint64_t p = 0;

  GF() = default;
  explicit GF(std::uint64_t p_) : p(p_) {
    check(is_prime(p), "GF: modulus must be prime");
  }

  using Elem = Fp;

  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp from_int(long n) const {
    long r = n % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }
  Fp parse(std::string_view s) const {
    check(!s.empty(), "GF: empty literal");
    bool neg = s.front() == '-';
    if (neg) s.remove_prefix(1);
    std::uint64_t acc = 0;
    for (char c : s) {
      check(c >= '0' && c <= '9', "GF: bad literal");
      acc = (acc * 10 + static_cast<std::uint64_t>(c - '0')) % p;
    }
    Fp x(acc, p);
    return neg ? -x : x;
  }
  std::uint64_t characteristic() const { return p; }
  FieldSpec spec() const { return FieldSpec{p}; }

  friend bool operator==(const GF& a, const GF& b) { return a.p == b.p; }
  friend bool operator!=(const GF& a, const GF& b) { return !(a == b); }
};

}  // namespace sepalg
