#pragma once

#include <utility>
#include <vector>

#include "sepalg/field.hpp"
#include "sepalg/matrix.hpp"

namespace sepalg {

/// Dense univariate polynomial, coefficients low-degree first.
template <class F>
struct Poly {
  using E = typename F::Elem;
  F fld;
  std::vector<E> a;

  explicit Poly(F f) : fld(f) {}
  Poly(F f, std::vector<E> coeffs) : fld(f), a(std::move(coeffs)) { trim(); }

  void trim() {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  int degree() const { return static_cast<int>(a.size()) - 1; }
  bool is_zero() const { return a.empty(); }

  static Poly constant(F f, E c) {
    Poly p(f);
    if (!c.is_zero()) p.a = {c};
    return p;
  }
  static Poly linear(F f, E root) {  // t - root
    Poly p(f);
    p.a = {-root, f.one()};
    return p;
  }

  E eval(const E& x) const {
    E acc = fld.zero();
    for (int i = degree(); i >= 0; --i) acc = acc * x + a[i];
    return acc;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    Poly r(p.fld);
    r.a.resize(std::max(p.a.size(), q.a.size()), p.fld.zero());
    for (std::size_t i = 0; i < p.a.size(); ++i) r.a[i] += p.a[i];
    for (std::size_t i = 0; i < q.a.size(); ++i) r.a[i] += q.a[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& p, const Poly& q) {
    Poly r(p.fld);
    r.a.resize(std::max(p.a.size(), q.a.size()), p.fld.zero());
    for (std::size_t i = 0; i < p.a.size(); ++i) r.a[i] += p.a[i];
    for (std::size_t i = 0; i < q.a.size(); ++i) r.a[i] -= q.a[i];
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    Poly r(p.fld);
    if (p.is_zero() || q.is_zero()) return r;
    r.a.assign(p.a.size() + q.a.size() - 1, p.fld.zero());
    for (std::size_t i = 0; i < p.a.size(); ++i) {
      if (p.a[i].is_zero()) continue;
      for (std::size_t j = 0; j < q.a.size(); ++j)
        if (!q.a[j].is_zero()) r.a[i + j] += p.a[i] * q.a[j];
    }
    r.trim();
    return r;
  }

  Poly scaled(const E& c) const {
    Poly r = *this;
    for (E& x : r.a) x *= c;
    r.trim();
    return r;
  }
  Poly monic() const {
    check(!is_zero(), "Poly: monic of zero");
    return scaled(fld.one() / a.back());
  }
};

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& p, const Poly<F>& d) {
  check(!d.is_zero(), "Poly: division by zero polynomial");
  F fld = p.fld;
  Poly<F> q(fld), r = p;
  if (r.degree() < d.degree()) return {q, r};
  q.a.assign(r.degree() - d.degree() + 1, fld.zero());
  while (!r.is_zero() && r.degree() >= d.degree()) {
    typename F::Elem c = r.a.back() / d.a.back();
    int shift = r.degree() - d.degree();
    q.a[shift] = c;
    for (int i = 0; i <= d.degree(); ++i) r.a[shift + i] -= c * d.a[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

template <class F>
Poly<F> gcd(Poly<F> p, Poly<F> q) {
  while (!q.is_zero()) {
    Poly<F> r = divmod(p, q).second;
    p = std::move(q);
    q = std::move(r);
  }
  return p.is_zero() ? p : p.monic();
}

/// u*p + v*q = g with g = gcd(p, q) monic.
template <class F>
struct XgcdResult {
  Poly<F> g, u, v;
};

template <class F>
XgcdResult<F> xgcd(const Poly<F>& p, const Poly<F>& q) {
  F fld = p.fld;
  Poly<F> r0 = p, r1 = q;
  Poly<F> u0 = Poly<F>::constant(fld, fld.one()), u1(fld);
  Poly<F> v0(fld), v1 = Poly<F>::constant(fld, fld.one());
  while (!r1.is_zero()) {
    auto [quo, rem] = divmod(r0, r1);
    Poly<F> u2 = u0 - quo * u1;
    Poly<F> v2 = v0 - quo * v1;
    r0 = std::move(r1); r1 = std::move(rem);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  check(!r0.is_zero(), "Poly: xgcd of zero polynomials");
  typename F::Elem lead = r0.a.back();
  return {r0.scaled(fld.one() / lead), u0.scaled(fld.one() / lead),
          v0.scaled(fld.one() / lead)};
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(const mpz_class& n_in, long bound) {
  std::vector<mpz_class> out;
  mpz_class n = abs(n_in);
  if (n == 0 || n > bound) return out;  // caller treats as "none found"
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace detail

/// Roots of p lying in the ground field. Over the rationals this is the
/// rational-root search on a denominator-cleared copy (with a size guard
/// on the divisor enumeration); over a prime field it is exhaustive.
template <class F>
std::vector<typename F::Elem> field_roots(const Poly<F>& p);

inline std::vector<Rat> field_roots_q(const Poly<QQ>& p) {
  QQ fld;
  std::vector<Rat> roots;
  if (p.is_zero()) return roots;
  Poly<QQ> q = p;
  // strip t^m, collecting 0 as a root once
  std::size_t lead_zeros = 0;
  while (lead_zeros < q.a.size() && q.a[lead_zeros].is_zero()) ++lead_zeros;
  if (lead_zeros > 0) {
    roots.push_back(Rat(0));
    q.a.erase(q.a.begin(), q.a.begin() + lead_zeros);
  }
  if (q.degree() < 1) return roots;
  mpz_class den_lcm = 1;
  for (const Rat& c : q.a) den_lcm = lcm(den_lcm, c.den());
  std::vector<mpz_class> ic;
  for (const Rat& c : q.a) {
    Rat scaled = c * Rat::parse(den_lcm.get_str());
    ic.push_back(scaled.num());
  }
  const long kDivisorBound = 1000000;
  auto ps = detail::positive_divisors(ic.front(), kDivisorBound);
  auto qs = detail::positive_divisors(ic.back(), kDivisorBound);
  for (const mpz_class& pn : ps)
    for (const mpz_class& qn : qs) {
      for (int sign = 0; sign < 2; ++sign) {
        Rat cand = Rat::parse((sign ? "-" : "") + pn.get_str() + "/" + qn.get_str());
        if (q.eval(cand).is_zero()) {
          bool seen = false;
          for (const Rat& r : roots) seen = seen || r == cand;
          if (!seen) roots.push_back(cand);
        }
      }
    }
  return roots;
}

inline std::vector<Fp> field_roots_p(const Poly<GF>& p) {
  std::vector<Fp> roots;
  if (p.is_zero() || p.degree() < 1) return roots;
  GF fld = p.fld;
  for (std::uint64_t v = 0; v < fld.p; ++v) {
    Fp cand(v, fld.p);
    if (p.eval(cand).is_zero()) roots.push_back(cand);
  }
  return roots;
}

template <>
inline std::vector<Rat> field_roots<QQ>(const Poly<QQ>& p) { return field_roots_q(p); }
template <>
inline std::vector<Fp> field_roots<GF>(const Poly<GF>& p) { return field_roots_p(p); }

}  // namespace sepalg
