#pragma once

#include <gmpxx.h>

#include <vector>

#include "sepalg/algebra.hpp"

namespace sepalg {

namespace detail {

/// Kernel of the regular trace form { x : tr(L_x L_y) = 0 for all y }.
template <class F>
std::vector<Vec<F>> trace_form_kernel(const Algebra<F>& a) {
  F fld = a.field();
  int n = a.dim();
  Mat<F> gram(fld, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Mat<F> prod = a.lmul_basis(i) * a.lmul_basis(j);
      typename F::Elem t = fld.zero();
      for (int k = 0; k < n; ++k) t += prod.at(k, k);
      gram.at(i, j) = t;
    }
  }
  return kernel(gram);
}

inline mpz_class ipow(unsigned long base, int e) {
  mpz_class r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<long>(base);
  return r;
}

/// Integer matrix trace of Z^(p^s) where Z is the entrywise {0..p-1} lift
/// of the multiplication matrix of z.
inline mpz_class lifted_power_trace(const std::vector<std::vector<mpz_class>>& z, int pow) {
  int n = static_cast<int>(z.size());
  std::vector<std::vector<mpz_class>> acc(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) acc[i][i] = 1;
  std::vector<std::vector<mpz_class>> base = z;
  int e = pow;
  auto mul = [n](const std::vector<std::vector<mpz_class>>& a,
                 const std::vector<std::vector<mpz_class>>& b) {
    std::vector<std::vector<mpz_class>> c(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (a[i][k] == 0) continue;
        for (int j = 0; j < n; ++j)
          if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
      }
    return c;
  };
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  mpz_class t = 0;
  for (int i = 0; i < n; ++i) t += acc[i][i];
  return t;
}

inline std::vector<Vec<GF>> radical_basis(const Algebra<GF>& a) {
  GF fld = a.field();
  const unsigned long p = fld.p;
  int n = a.dim();
  // descending chain I_0 >= I_1 >= ..., refined with the s-th trace function
  // tau_s(z) = tr(lift(L_z)^(p^s)) / p^s mod p, evaluated on products x*y
  std::vector<Vec<GF>> current;  // basis of I_{s-1}, as vectors in A
  for (int i = 0; i < n; ++i) current.push_back(a.basis_vec(i));
  mpz_class ps = 1;
  for (int s = 0; ps <= n; ++s, ps *= static_cast<long>(p)) {
    if (current.empty()) break;
    int m = static_cast<int>(current.size());
    auto tau = [&](const Vec<GF>& z) -> Fp {
      Mat<GF> lz = a.lmul(z);
      std::vector<std::vector<mpz_class>> lift(n, std::vector<mpz_class>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          lift[i][j] = static_cast<long>(lz.at(i, j).value());
      mpz_class tr = lifted_power_trace(lift, static_cast<int>(ps.get_si()));
      check(tr % ps == 0, "radical: trace not divisible by p^s");
      mpz_class red = (tr / ps) % static_cast<long>(p);
      if (red < 0) red += static_cast<long>(p);
      return Fp(red.get_ui(), p);
    };
    // rows: one constraint per basis element y of I_{s-1};
    // columns: coordinates of x in the I_{s-1} basis
    Mat<GF> constraints(fld, m, m);
    for (int yi = 0; yi < m; ++yi)
      for (int xi = 0; xi < m; ++xi)
        constraints.at(yi, xi) = tau(a.mult(current[xi], current[yi]));
    std::vector<Vec<GF>> ker = kernel(constraints);
    std::vector<Vec<GF>> next;
    for (const auto& coeffs : ker) {
      Vec<GF> v = a.zero_vec();
      for (int i = 0; i < m; ++i) {
        if (coeffs[i].is_zero()) continue;
        for (int k = 0; k < n; ++k) v[k] += coeffs[i] * current[i][k];
      }
      next.push_back(std::move(v));
    }
    current = std::move(next);
  }
  // re-extract a reduced deterministic basis
  RowSpan<GF> span(fld, n);
  for (const auto& v : current) span.add(v);
  return span.rows();
}

inline std::vector<Vec<QQ>> radical_basis(const Algebra<QQ>& a) {
  return trace_form_kernel(a);
}

}  // namespace detail

template <class F>
bool in_span(F fld, int ambient, const std::vector<Vec<F>>& basis, const Vec<F>& v) {
  RowSpan<F> s(fld, ambient);
  for (const auto& b : basis) s.add(b);
  return s.contains(v);
}

/// Span of all products x*y with x in left and y in right (as subsets of A).
template <class F>
std::vector<Vec<F>> product_span(const Algebra<F>& a, const std::vector<Vec<F>>& left,
                                 const std::vector<Vec<F>>& right) {
  RowSpan<F> s(a.field(), a.dim());
  for (const auto& x : left)
    for (const auto& y : right) s.add(a.mult(x, y));
  return s.rows();
}

template <class F>
bool is_nilpotent_ideal(const Algebra<F>& a, const std::vector<Vec<F>>& ideal) {
  std::vector<Vec<F>> power = ideal;
  for (int step = 0; step <= a.dim(); ++step) {
    if (power.empty()) return true;
    power = product_span(a, power, ideal);
  }
  return false;
}

template <class F>
bool is_two_sided_ideal(const Algebra<F>& a, const std::vector<Vec<F>>& ideal) {
  RowSpan<F> s(a.field(), a.dim());
  for (const auto& v : ideal) s.add(v);
  for (int i = 0; i < a.dim(); ++i)
    for (const auto& v : ideal) {
      if (!s.contains(a.mult(a.basis_vec(i), v))) return false;
      if (!s.contains(a.mult(v, a.basis_vec(i)))) return false;
    }
  return true;
}

/// Jacobson radical. Characteristic 0 uses the regular trace form;
/// characteristic p the iterated trace functions on integral lifts.
/// The result is verified to be a nilpotent two-sided ideal with
/// semisimple quotient before being returned.
template <class F>
SubspaceBasis<F> radical(const AlgebraRef<F>& a) {
  std::vector<Vec<F>> basis = detail::radical_basis(*a);
  check(is_two_sided_ideal(*a, basis), "radical: result is not a two-sided ideal");
  check(is_nilpotent_ideal(*a, basis), "radical: result is not nilpotent");
  if (!basis.empty()) {
    QuotientAlgebra<F> q = quotient_algebra(a, basis);
    std::vector<Vec<F>> qrad = detail::radical_basis(*q.algebra);
    check(qrad.empty(), "radical: quotient is not semisimple");
  }
  SubspaceBasis<F> out;
  out.ambient_dim = a->dim();
  out.vectors = std::move(basis);
  out.validate(a->field());
  return out;
}

template <class F>
bool is_semisimple(const AlgebraRef<F>& a) {
  return radical(a).vectors.empty();
}

}  // namespace sepalg
