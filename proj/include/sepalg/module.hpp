#pragma once

#include <vector>

#include "sepalg/algebra.hpp"

namespace sepalg {

/// Finite-dimensional left module: one action matrix per algebra basis
/// element. The zero module (dim 0) is allowed.
template <class F>
struct LeftModule {
  AlgebraRef<F> algebra;
  int dim = 0;
  std::vector<Mat<F>> action;

  const Mat<F>& act_basis(int i) const { return action[i]; }

  Mat<F> act(const Vec<F>& x) const {
    F fld = algebra->field();
    Mat<F> m(fld, dim, dim);
    for (int i = 0; i < algebra->dim(); ++i)
      if (!x[i].is_zero()) m = m + action[i].scaled(x[i]);
    return m;
  }

  bool valid() const {
    if (static_cast<int>(action.size()) != algebra->dim()) return false;
    for (const auto& m : action)
      if (m.rows() != dim || m.cols() != dim) return false;
    if (!act(algebra->unit()).is_identity()) return false;
    for (int i = 0; i < algebra->dim(); ++i)
      for (int j = 0; j < algebra->dim(); ++j) {
        Mat<F> lhs = action[i] * action[j];
        Mat<F> rhs(algebra->field(), dim, dim);
        for (int k = 0; k < algebra->dim(); ++k)
          if (!algebra->c(i, j, k).is_zero()) rhs = rhs + action[k].scaled(algebra->c(i, j, k));
        if (lhs != rhs) return false;
      }
    return true;
  }

  void require_valid(const char* what = "LeftModule") const {
    if (!valid()) throw error(std::string(what) + ": action does not satisfy the module laws");
  }
};

template <class F>
LeftModule<F> regular_module(const AlgebraRef<F>& a) {
  LeftModule<F> m{a, a->dim(), {}};
  for (int i = 0; i < a->dim(); ++i) m.action.push_back(a->lmul_basis(i));
  m.require_valid("regular_module");
  return m;
}

template <class F>
LeftModule<F> zero_module(const AlgebraRef<F>& a) {
  LeftModule<F> m{a, 0, {}};
  F fld = a->field();
  for (int i = 0; i < a->dim(); ++i) m.action.push_back(Mat<F>(fld, 0, 0));
  return m;
}

/// A submodule presented by its inclusion into the ambient module.
template <class F>
struct Submodule {
  LeftModule<F> module;
  Mat<F> incl;  // ambient.dim x module.dim
};

/// Smallest submodule containing the given vectors.
template <class F>
Submodule<F> submodule(const LeftModule<F>& m, const std::vector<Vec<F>>& gens) {
  F fld = m.algebra->field();
  RowSpan<F> span(fld, m.dim);
  std::vector<Vec<F>> basis;
  std::vector<Vec<F>> work;
  for (const auto& g : gens)
    if (span.add(g)) {
      basis.push_back(g);
      work.push_back(g);
    }
  while (!work.empty()) {
    std::vector<Vec<F>> next;
    for (const auto& v : work)
      for (int i = 0; i < m.algebra->dim(); ++i) {
        Vec<F> w = m.action[i].apply(v);
        if (span.add(w)) {
          basis.push_back(w);
          next.push_back(w);
        }
      }
    work = std::move(next);
  }
  int d = static_cast<int>(basis.size());
  Mat<F> incl = Mat<F>::from_cols(fld, basis, m.dim);
  BasisSolver<F> solver(fld, basis, m.dim);
  LeftModule<F> sub{m.algebra, d, {}};
  for (int i = 0; i < m.algebra->dim(); ++i) {
    Mat<F> a(fld, d, d);
    for (int j = 0; j < d; ++j)
      a.set_col(j, solver.coords_checked(m.action[i].apply(basis[j]), "submodule"));
    sub.action.push_back(std::move(a));
  }
  sub.require_valid("submodule");
  return Submodule<F>{std::move(sub), std::move(incl)};
}

/// Quotient by the submodule spanned by the given vectors (closed under
/// the action automatically).
template <class F>
struct QuotientModule {
  LeftModule<F> module;
  Mat<F> proj;
  Mat<F> sect;
};

template <class F>
QuotientModule<F> quotient_module(const LeftModule<F>& m, const std::vector<Vec<F>>& rel) {
  F fld = m.algebra->field();
  Submodule<F> closed = submodule(m, rel);
  std::vector<Vec<F>> relations;
  for (int j = 0; j < closed.module.dim; ++j) relations.push_back(closed.incl.col(j));
  QuotientSpace<F> q = quotient(fld, m.dim, relations);
  LeftModule<F> quot{m.algebra, q.proj.rows(), {}};
  for (int i = 0; i < m.algebra->dim(); ++i) {
    Mat<F> a = q.proj * m.action[i] * q.sect;
    // well-definedness: the action must descend
    check(a * q.proj == q.proj * m.action[i], "quotient_module: action does not descend");
    quot.action.push_back(std::move(a));
  }
  quot.require_valid("quotient_module");
  return QuotientModule<F>{std::move(quot), q.proj, q.sect};
}

/// rad(A) * M as a list of spanning vectors.
template <class F>
std::vector<Vec<F>> radical_submodule_gens(const LeftModule<F>& m,
                                           const SubspaceBasis<F>& rad) {
  std::vector<Vec<F>> gens;
  for (const auto& r : rad.vectors) {
    Mat<F> a = m.act(r);
    for (int j = 0; j < m.dim; ++j) gens.push_back(a.col(j));
  }
  return gens;
}

/// top(M) = M / rad(A) M.
template <class F>
QuotientModule<F> top_module(const LeftModule<F>& m, const SubspaceBasis<F>& rad) {
  return quotient_module(m, radical_submodule_gens(m, rad));
}

/// The projective module A*e for an idempotent e, inside the regular module.
template <class F>
Submodule<F> idempotent_projective(const AlgebraRef<F>& a, const Vec<F>& e) {
  LeftModule<F> reg = regular_module(a);
  return submodule(reg, {e});
}

/// Restriction of scalars along an extension: a top-algebra module viewed
/// over the base.
template <class F>
LeftModule<F> restrict_module(const RingExtension<F>& ext, const LeftModule<F>& m) {
  check(same_algebra(ext.top, m.algebra), "restrict_module: module not over the top algebra");
  LeftModule<F> out{ext.base, m.dim, {}};
  for (int i = 0; i < ext.base->dim(); ++i) out.action.push_back(m.act(ext.map.col(i)));
  out.require_valid("restrict_module");
  return out;
}

template <class F>
struct ModuleSum {
  LeftModule<F> module;
  std::vector<Mat<F>> incl, proj;
};

template <class F>
ModuleSum<F> direct_sum_modules(const std::vector<LeftModule<F>>& parts) {
  check(!parts.empty(), "direct_sum_modules: empty sum");
  AlgebraRef<F> a = parts[0].algebra;
  F fld = a->field();
  int total = 0;
  for (const auto& p : parts) {
    check(same_algebra(a, p.algebra), "direct_sum_modules: algebra mismatch");
    total += p.dim;
  }
  LeftModule<F> sum{a, total, {}};
  for (int i = 0; i < a->dim(); ++i) {
    Mat<F> m(fld, total, total);
    int off = 0;
    for (const auto& p : parts) {
      for (int r = 0; r < p.dim; ++r)
        for (int c = 0; c < p.dim; ++c) m.at(off + r, off + c) = p.action[i].at(r, c);
      off += p.dim;
    }
    sum.action.push_back(std::move(m));
  }
  ModuleSum<F> out{std::move(sum), {}, {}};
  int off = 0;
  for (const auto& p : parts) {
    Mat<F> incl(fld, total, p.dim), proj(fld, p.dim, total);
    for (int j = 0; j < p.dim; ++j) {
      incl.at(off + j, j) = fld.one();
      proj.at(j, off + j) = fld.one();
    }
    out.incl.push_back(std::move(incl));
    out.proj.push_back(std::move(proj));
    off += p.dim;
  }
  out.module.require_valid("direct_sum_modules");
  return out;
}

/// Is f : M -> N a map of left modules?
template <class F>
bool is_module_map(const LeftModule<F>& m, const LeftModule<F>& n, const Mat<F>& f) {
  if (!same_algebra(m.algebra, n.algebra)) return false;
  if (f.rows() != n.dim || f.cols() != m.dim) return false;
  for (int g : m.algebra->generators())
    if (f * m.action[g] != n.action[g] * f) return false;
  return true;
}

}  // namespace sepalg
