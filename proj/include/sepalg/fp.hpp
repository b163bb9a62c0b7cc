#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "sepalg/error.hpp"

namespace sepalg {

/// Element of a prime field. Carries its modulus so that mixed-modulus
/// arithmetic faults immediately instead of producing garbage.
class Fp {
public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {
    check(p >= 2, "Fp: modulus must be >= 2");
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  std::string str() const { return std::to_string(v_); }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) { match(o); v_ = (v_ + o.v_) % p_; return *this; }
  Fp& operator-=(const Fp& o) { match(o); v_ = (v_ + p_ - o.v_) % p_; return *this; }
  Fp& operator*=(const Fp& o) {
    match(o);
    v_ = (static_cast<unsigned __int128>(v_) * o.v_) % p_;
    return *this;
  }
  Fp& operator/=(const Fp& o) {
    match(o);
    check(o.v_ != 0, "Fp: division by zero");
    *this *= o.inverse();
    return *this;
  }

  Fp inverse() const {
    check(v_ != 0, "Fp: inverse of zero");
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t; new_t = tmp;
      tmp = r - q * new_r;
      r = new_r; new_r = tmp;
    }
    check(r == 1, "Fp: modulus not prime");
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_);
  }

  friend Fp operator+(Fp a, const Fp& b) { a += b; return a; }
  friend Fp operator-(Fp a, const Fp& b) { a -= b; return a; }
  friend Fp operator*(Fp a, const Fp& b) { a *= b; return a; }
  friend Fp operator/(Fp a, const Fp& b) { a /= b; return a; }
  friend bool operator==(const Fp& a, const Fp& b) {
    check(a.p_ == b.p_, "Fp: comparing elements of different fields");
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
  void match(const Fp& o) const {
    check(p_ == o.p_ && p_ != 0, "Fp: mixed or uninitialized moduli");
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

}  // namespace sepalg
