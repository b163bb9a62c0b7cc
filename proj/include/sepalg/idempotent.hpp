#pragma once

#include <memory>
#include <vector>

#include "sepalg/algebra.hpp"
#include "sepalg/poly.hpp"
#include "sepalg/radical.hpp"
#include "sepalg/rng.hpp"

namespace sepalg {

/// A corner subalgebra eAe with its inclusion into A. The corner unit is e.
template <class F>
struct Corner {
  AlgebraRef<F> algebra;
  Mat<F> incl;  // dim(A) x dim(corner)

  Vec<F> to_ambient(const Vec<F>& v) const { return incl.apply(v); }
  std::optional<Vec<F>> from_ambient(const Vec<F>& v) const {
    SolveResult<F> s = solve(incl, v);
    return s.particular;
  }
};

template <class F>
Corner<F> corner_algebra(const AlgebraRef<F>& a, const Vec<F>& e) {
  F fld = a->field();
  int n = a->dim();
  RowSpan<F> span(fld, n);
  std::vector<Vec<F>> basis;
  for (int i = 0; i < n; ++i) {
    Vec<F> v = a->mult(e, a->mult(a->basis_vec(i), e));
    if (span.add(v)) basis.push_back(std::move(v));
  }
  int d = static_cast<int>(basis.size());
  Mat<F> incl = Mat<F>::from_cols(fld, basis, n);
  std::vector<typename F::Elem> st(static_cast<std::size_t>(d) * d * d, fld.zero());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec<F> prod = a->mult(basis[i], basis[j]);
      SolveResult<F> coords = solve(incl, prod);
      check(coords.particular.has_value(), "corner_algebra: product left the corner");
      for (int k = 0; k < d; ++k)
        st[(static_cast<std::size_t>(i) * d + j) * d + k] = (*coords.particular)[k];
    }
  SolveResult<F> unit_coords = solve(incl, e);
  check(unit_coords.particular.has_value(), "corner_algebra: e not in eAe");
  Corner<F> out{make_algebra<F>(fld, d, std::move(st), *unit_coords.particular), incl};
  return out;
}

namespace detail {

/// Minimal polynomial of x in a unital algebra, via linear dependence
/// of the powers unit, x, x^2, ...
template <class F>
Poly<F> minimal_polynomial(const Algebra<F>& a, const Vec<F>& x) {
  F fld = a.field();
  int n = a.dim();
  std::vector<Vec<F>> powers{a.unit()};
  Vec<F> cur = a.unit();
  for (int d = 1; d <= n + 1; ++d) {
    cur = a.mult(cur, x);
    Mat<F> m = Mat<F>::from_cols(fld, powers, n);
    SolveResult<F> s = solve(m, cur);
    if (s.particular) {
      std::vector<typename F::Elem> coeffs;
      for (const auto& c : *s.particular) coeffs.push_back(-c);
      coeffs.push_back(fld.one());
      return Poly<F>(fld, std::move(coeffs));
    }
    powers.push_back(cur);
  }
  throw error("minimal_polynomial: no dependence found (inconsistent algebra)");
}

template <class F>
Vec<F> eval_poly_in_algebra(const Algebra<F>& a, const Poly<F>& p, const Vec<F>& x) {
  Vec<F> acc = a.zero_vec();
  for (int i = p.degree(); i >= 0; --i) {
    acc = a.mult(acc, x);
    if (!p.a[i].is_zero())
      for (int k = 0; k < a.dim(); ++k) acc[k] += p.a[i] * a.unit()[k];
  }
  return acc;
}

template <class F>
bool is_idempotent(const Algebra<F>& a, const Vec<F>& e) {
  return a.mult(e, e) == e;
}

/// Try to split the idempotent e of the semisimple algebra into two nonzero
/// orthogonal idempotents, by eigen-splitting elements of the corner eAe.
template <class F>
std::optional<std::pair<Vec<F>, Vec<F>>> try_split(const AlgebraRef<F>& a, const Vec<F>& e,
                                                   SearchRng& rng) {
  F fld = a->field();
  Corner<F> c = corner_algebra(a, e);
  int d = c.algebra->dim();
  if (d == 1) return std::nullopt;

  auto attempt = [&](const Vec<F>& x) -> std::optional<std::pair<Vec<F>, Vec<F>>> {
    Poly<F> m = minimal_polynomial(*c.algebra, x);
    if (m.degree() < 2) return std::nullopt;
    for (const auto& root : field_roots<F>(m)) {
      // peel (t - root)^mult off m
      Poly<F> lin = Poly<F>::linear(fld, root);
      Poly<F> f = Poly<F>::constant(fld, fld.one());
      Poly<F> rest = m;
      while (true) {
        auto [q, r] = divmod(rest, lin);
        if (!r.is_zero()) break;
        f = f * lin;
        rest = q;
      }
      if (rest.degree() < 1) continue;  // x = root*e + nilpotent, useless
      XgcdResult<F> x2 = xgcd(f, rest);
      check(x2.g.degree() == 0, "try_split: eigenfactors not coprime");
      // e1 = (v * rest)(x) is idempotent mod m, hence exactly in eAe
      Poly<F> vg = divmod(x2.v * rest, m).second;
      Vec<F> e1c = eval_poly_in_algebra(*c.algebra, vg, x);
      Vec<F> e1 = c.to_ambient(e1c);
      Vec<F> e2 = e;
      for (int k = 0; k < a->dim(); ++k) e2[k] -= e1[k];
      bool zero1 = true, zero2 = true;
      for (const auto& v : e1) zero1 = zero1 && v.is_zero();
      for (const auto& v : e2) zero2 = zero2 && v.is_zero();
      if (zero1 || zero2) continue;
      check(is_idempotent(*a, e1) && is_idempotent(*a, e2), "try_split: split not idempotent");
      check(a->mult(e1, e2) == a->zero_vec() && a->mult(e2, e1) == a->zero_vec(),
            "try_split: split not orthogonal");
      return std::make_pair(e1, e2);
    }
    return std::nullopt;
  };

  for (int i = 0; i < d; ++i) {
    auto r = attempt(c.algebra->basis_vec(i));
    if (r) return r;
  }
  SearchBudget budget;
  for (int round = 0; round < budget.rounds; ++round)
    for (int t = 0; t < budget.draws_per_round; ++t) {
      Vec<F> x = c.algebra->zero_vec();
      for (int i = 0; i < d; ++i) x[i] = fld.from_int(rng.window_coeff(round));
      auto r = attempt(x);
      if (r) return r;
    }
  return std::nullopt;
}

}  // namespace detail

/// Complete set of orthogonal primitive idempotents of a semisimple algebra
/// that is split over its ground field. Errors out when the splitting
/// search stalls on a corner of dimension > 1.
template <class F>
std::vector<Vec<F>> primitive_idempotents_semisimple(const AlgebraRef<F>& a, SearchRng& rng) {
  std::vector<Vec<F>> queue{a->unit()};
  std::vector<Vec<F>> out;
  while (!queue.empty()) {
    Vec<F> e = queue.back();
    queue.pop_back();
    Corner<F> c = corner_algebra(a, e);
    if (c.algebra->dim() == 1) {
      out.push_back(e);
      continue;
    }
    auto split = detail::try_split(a, e, rng);
    if (!split)
      throw error("primitive_idempotents: not split over field "
                  "(idempotent search failed in a simple factor)");
    queue.push_back(split->first);
    queue.push_back(split->second);
  }
  return out;
}

template <class F>
struct IdempotentSet {
  std::vector<Vec<F>> idempotents;  // complete orthogonal primitive set in A
  std::vector<int> iso_class;       // projective-module iso class per idempotent
  int class_count = 0;
};

/// Complete set of orthogonal primitive idempotents of A, obtained by
/// lifting a complete set of A/rad(A) along the nilpotent radical with
/// the cubic Newton step e -> 3e^2 - 2e^3.
template <class F>
IdempotentSet<F> primitive_idempotents(const AlgebraRef<F>& a, const SubspaceBasis<F>& rad,
                                       SearchRng& rng) {
  F fld = a->field();
  int n = a->dim();
  AlgebraRef<F> bar;
  Mat<F> proj(fld, 0, 0), sect(fld, 0, 0);
  if (rad.vectors.empty()) {
    bar = a;
    proj = Mat<F>::identity(fld, n);
    sect = proj;
  } else {
    QuotientAlgebra<F> q = quotient_algebra(a, rad.vectors);
    bar = q.algebra;
    proj = q.proj;
    sect = q.sect;
  }
  std::vector<Vec<F>> bar_idems = primitive_idempotents_semisimple(bar, rng);

  // lift sequentially, keeping exact orthogonality to the already-lifted part
  RowSpan<F> rad_span(fld, n);
  for (const auto& v : rad.vectors) rad_span.add(v);
  std::vector<Vec<F>> lifted;
  Vec<F> total = a->zero_vec();
  for (std::size_t idx = 0; idx < bar_idems.size(); ++idx) {
    Vec<F> e;
    if (idx + 1 == bar_idems.size()) {
      e = a->unit();
      for (int k = 0; k < n; ++k) e[k] -= total[k];
    } else {
      Vec<F> raw = sect.apply(bar_idems[idx]);
      Vec<F> comp = a->unit();
      for (int k = 0; k < n; ++k) comp[k] -= total[k];
      e = a->mult(comp, a->mult(raw, comp));
      int guard = 2 * n + 8;
      while (a->mult(e, e) != e) {
        check(--guard > 0, "primitive_idempotents: Newton lift did not terminate");
        Vec<F> e2 = a->mult(e, e);
        Vec<F> e3 = a->mult(e2, e);
        Vec<F> next = a->zero_vec();
        typename F::Elem three = fld.from_int(3), two = fld.from_int(2);
        for (int k = 0; k < n; ++k) next[k] = three * e2[k] - two * e3[k];
        e = std::move(next);
      }
    }
    check(a->mult(e, e) == e, "primitive_idempotents: lift not idempotent");
    // class check: e maps onto the intended semisimple idempotent
    check(proj.apply(e) == bar_idems[idx], "primitive_idempotents: lift changed class");
    for (const auto& prev : lifted) {
      check(a->mult(e, prev) == a->zero_vec() && a->mult(prev, e) == a->zero_vec(),
            "primitive_idempotents: lifts not orthogonal");
    }
    for (int k = 0; k < n; ++k) total[k] += e[k];
    lifted.push_back(std::move(e));
  }
  check(total == a->unit(), "primitive_idempotents: lifts do not sum to the unit");

  // group by iso class of the corresponding simples: dim(ebar_i B ebar_j) != 0
  int m = static_cast<int>(lifted.size());
  std::vector<int> cls(m, -1);
  int nclass = 0;
  auto linked = [&](int i, int j) {
    RowSpan<F> s(fld, bar->dim());
    for (int b = 0; b < bar->dim(); ++b)
      s.add(bar->mult(bar_idems[i], bar->mult(bar->basis_vec(b), bar_idems[j])));
    return s.dim() > 0;
  };
  for (int i = 0; i < m; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = nclass;
    for (int j = i + 1; j < m; ++j)
      if (cls[j] < 0 && linked(i, j)) cls[j] = nclass;
    ++nclass;
  }
  return IdempotentSet<F>{std::move(lifted), std::move(cls), nclass};
}

}  // namespace sepalg
