#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "sepalg/error.hpp"

namespace sepalg {

/// Arbitrary-precision rational number. Thin value wrapper around GMP's
/// mpq_class; always kept in canonical form (reduced, positive denominator).
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d) : v_(n, d) {
    check(d != 0, "Rat: zero denominator");
    v_.canonicalize();
  }

  static Rat parse(std::string_view s) {
    check(!s.empty(), "Rat: empty literal");
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
      throw error("Rat: bad literal '" + std::string(s) + "'");
    check(q.get_den() != 0, "Rat: zero denominator in literal");
    q.canonicalize();
    Rat r;
    r.v_ = q;
    return r;
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  /// Canonical form: "n" for integers, "n/d" otherwise (d > 0, reduced).
  std::string str() const { return v_.get_str(); }

  Rat operator-() const { return Rat(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    check(!o.is_zero(), "Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace sepalg
