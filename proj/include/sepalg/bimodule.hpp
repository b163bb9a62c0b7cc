#pragma once

#include <cmath>
#include <type_traits>
#include <utility>
#include <vector>

#include "sepalg/module.hpp"
#include "sepalg/rng.hpp"

namespace sepalg {

/// Solutions Phi (dn x dm) of the stacked equations Phi * A_i = B_i * Phi.
template <class F>
std::vector<Mat<F>> intertwiner_basis(
    F fld, const std::vector<std::pair<const Mat<F>*, const Mat<F>*>>& pairs, int dm, int dn) {
  int unknowns = dn * dm;
  Mat<F> sys(fld, static_cast<int>(pairs.size()) * unknowns, unknowns);
  int row = 0;
  for (const auto& [a, b] : pairs) {
    for (int i = 0; i < dn; ++i)
      for (int j = 0; j < dm; ++j) {
        for (int s = 0; s < dm; ++s) {
          const auto& asj = a->at(s, j);
          if (!asj.is_zero()) sys.at(row, i * dm + s) += asj;
        }
        for (int s = 0; s < dn; ++s) {
          const auto& bis = b->at(i, s);
          if (!bis.is_zero()) sys.at(row, s * dm + j) -= bis;
        }
        ++row;
      }
  }
  std::vector<Mat<F>> basis;
  for (const auto& v : kernel(sys)) {
    Mat<F> phi(fld, dn, dm);
    for (int i = 0; i < dn; ++i)
      for (int j = 0; j < dm; ++j) phi.at(i, j) = v[i * dm + j];
    basis.push_back(std::move(phi));
  }
  return basis;
}

/// Basis of the left-module maps M -> N.
template <class F>
std::vector<Mat<F>> module_hom(const LeftModule<F>& m, const LeftModule<F>& n) {
  check(same_algebra(m.algebra, n.algebra), "module_hom: algebra mismatch");
  std::vector<std::pair<const Mat<F>*, const Mat<F>*>> pairs;
  for (int g : m.algebra->generators()) pairs.emplace_back(&m.action[g], &n.action[g]);
  return intertwiner_basis(m.algebra->field(), pairs, m.dim, n.dim);
}

/// A (T,R)-bimodule: commuting left T- and right R-actions. The right
/// action matrices R_j represent m -> m*b_j, so R_i R_j = sum_k c_{ji}^k R_k.
template <class F>
struct Bimodule {
  AlgebraRef<F> left_alg;   // T
  AlgebraRef<F> right_alg;  // R
  int dim = 0;
  std::vector<Mat<F>> left, right;

  Mat<F> lact(const Vec<F>& t) const {
    F fld = left_alg->field();
    Mat<F> m(fld, dim, dim);
    for (int i = 0; i < left_alg->dim(); ++i)
      if (!t[i].is_zero()) m = m + left[i].scaled(t[i]);
    return m;
  }
  Mat<F> ract(const Vec<F>& r) const {
    F fld = right_alg->field();
    Mat<F> m(fld, dim, dim);
    for (int j = 0; j < right_alg->dim(); ++j)
      if (!r[j].is_zero()) m = m + right[j].scaled(r[j]);
    return m;
  }

  LeftModule<F> as_left_module() const { return LeftModule<F>{left_alg, dim, left}; }

  /// The right structure as a left module over the opposite algebra.
  LeftModule<F> right_as_left_over(const AlgebraRef<F>& op) const {
    return LeftModule<F>{op, dim, right};
  }

  bool valid() const {
    if (!(left_alg->field() == right_alg->field())) return false;
    if (!as_left_module().valid()) return false;
    if (static_cast<int>(right.size()) != right_alg->dim()) return false;
    for (const auto& m : right)
      if (m.rows() != dim || m.cols() != dim) return false;
    if (!ract(right_alg->unit()).is_identity()) return false;
    for (int i = 0; i < right_alg->dim(); ++i)
      for (int j = 0; j < right_alg->dim(); ++j) {
        Mat<F> lhs = right[i] * right[j];
        Mat<F> rhs(right_alg->field(), dim, dim);
        for (int k = 0; k < right_alg->dim(); ++k)
          if (!right_alg->c(j, i, k).is_zero()) rhs = rhs + right[k].scaled(right_alg->c(j, i, k));
        if (lhs != rhs) return false;
      }
    for (int i = 0; i < left_alg->dim(); ++i)
      for (int j = 0; j < right_alg->dim(); ++j)
        if (left[i] * right[j] != right[j] * left[i]) return false;
    return true;
  }

  void require_valid(const char* what = "Bimodule") const {
    if (!valid()) throw error(std::string(what) + ": bimodule laws violated");
  }
};

/// A map of bimodules between matching structures.
template <class F>
struct BimoduleMap {
  Bimodule<F> source, target;
  Mat<F> mat;

  bool valid() const {
    if (!same_algebra(source.left_alg, target.left_alg)) return false;
    if (!same_algebra(source.right_alg, target.right_alg)) return false;
    if (mat.rows() != target.dim || mat.cols() != source.dim) return false;
    for (int g : source.left_alg->generators())
      if (mat * source.left[g] != target.left[g] * mat) return false;
    for (int g : source.right_alg->generators())
      if (mat * source.right[g] != target.right[g] * mat) return false;
    return true;
  }
  void require_valid(const char* what = "BimoduleMap") const {
    if (!valid()) throw error(std::string(what) + ": map does not intertwine the actions");
  }
};

enum class Side { left, right, both };

/// Basis of the space of maps M -> N intertwining the requested actions,
/// computed as the kernel of the stacked commutation constraints. Only
/// algebra generators contribute constraints; the laws extend to every
/// element by linearity and multiplicativity.
template <class F>
std::vector<Mat<F>> hom_space(const Bimodule<F>& m, const Bimodule<F>& n, Side side) {
  F fld = m.left_alg->field();
  if (side != Side::right)
    check(same_algebra(m.left_alg, n.left_alg), "hom_space: left algebra mismatch");
  if (side != Side::left)
    check(same_algebra(m.right_alg, n.right_alg), "hom_space: right algebra mismatch");
  std::vector<std::pair<const Mat<F>*, const Mat<F>*>> pairs;
  if (side != Side::right)
    for (int g : m.left_alg->generators()) pairs.emplace_back(&m.left[g], &n.left[g]);
  if (side != Side::left)
    for (int g : m.right_alg->generators()) pairs.emplace_back(&m.right[g], &n.right[g]);
  return intertwiner_basis(fld, pairs, m.dim, n.dim);
}

template <class F>
Vec<F> vec_of(const Mat<F>& m) {
  Vec<F> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

template <class F>
BasisSolver<F> mat_basis_solver(F fld, const std::vector<Mat<F>>& mats, int rows, int cols) {
  std::vector<Vec<F>> vecs;
  for (const auto& m : mats) vecs.push_back(vec_of(m));
  return BasisSolver<F>(fld, vecs, rows * cols);
}

template <class F>
Bimodule<F> regular_bimodule(const AlgebraRef<F>& a) {
  Bimodule<F> b{a, a, a->dim(), {}, {}};
  for (int i = 0; i < a->dim(); ++i) {
    b.left.push_back(a->lmul_basis(i));
    b.right.push_back(a->rmul_basis(i));
  }
  b.require_valid("regular_bimodule");
  return b;
}

/// The four regular bimodules attached to an extension i : S -> R.
template <class F>
struct RegularBimodules {
  Bimodule<F> r_over_rs;  // R as (R,S)
  Bimodule<F> r_over_sr;  // R as (S,R)
  Bimodule<F> r_over_ss;  // R as (S,S)
  Bimodule<F> s_over_ss;  // S as (S,S)
};

template <class F>
RegularBimodules<F> regular_bimodules(const RingExtension<F>& ext) {
  const AlgebraRef<F>& s = ext.base;
  const AlgebraRef<F>& r = ext.top;
  RegularBimodules<F> out{{r, s, r->dim(), {}, {}},
                          {s, r, r->dim(), {}, {}},
                          {s, s, r->dim(), {}, {}},
                          {s, s, s->dim(), {}, {}}};
  for (int i = 0; i < r->dim(); ++i) {
    out.r_over_rs.left.push_back(r->lmul_basis(i));
    out.r_over_sr.right.push_back(r->rmul_basis(i));
  }
  for (int j = 0; j < s->dim(); ++j) {
    Vec<F> img = ext.map.col(j);
    out.r_over_rs.right.push_back(r->rmul(img));
    out.r_over_sr.left.push_back(r->lmul(img));
    out.r_over_ss.left.push_back(r->lmul(img));
    out.r_over_ss.right.push_back(r->rmul(img));
    out.s_over_ss.left.push_back(s->lmul_basis(j));
    out.s_over_ss.right.push_back(s->rmul_basis(j));
  }
  out.r_over_rs.require_valid("regular_bimodules");
  out.r_over_sr.require_valid("regular_bimodules");
  out.r_over_ss.require_valid("regular_bimodules");
  out.s_over_ss.require_valid("regular_bimodules");
  return out;
}

/// A left module viewed as an (A, k)-bimodule over the scalar algebra.
template <class F>
Bimodule<F> over_scalars_right(const LeftModule<F>& m, const AlgebraRef<F>& scalars) {
  Bimodule<F> b{m.algebra, scalars, m.dim, m.action, {Mat<F>::identity(m.algebra->field(), m.dim)}};
  b.require_valid("over_scalars_right");
  return b;
}

/// A right module (given by its right action matrices) as a (k, A)-bimodule.
template <class F>
Bimodule<F> over_scalars_left(const AlgebraRef<F>& scalars, const AlgebraRef<F>& a,
                              std::vector<Mat<F>> right_action, int dim) {
  Bimodule<F> b{scalars, a, dim, {Mat<F>::identity(a->field(), dim)}, std::move(right_action)};
  b.require_valid("over_scalars_left");
  return b;
}

/// Left dual *M = maps of left T-modules M -> T, an (R,T)-bimodule with
/// (m)(r.g.t) = ((m r) g) t. `maps` holds the basis functionals as
/// dT x dM matrices.
template <class F>
struct DualBimodule {
  Bimodule<F> bim;
  std::vector<Mat<F>> maps;
};

template <class F>
DualBimodule<F> dual_left(const Bimodule<F>& m) {
  F fld = m.left_alg->field();
  const AlgebraRef<F>& t = m.left_alg;
  const AlgebraRef<F>& r = m.right_alg;
  // maps M -> T intertwining the left T-action
  std::vector<Mat<F>> maps = module_hom(m.as_left_module(), regular_module(t));
  int d = static_cast<int>(maps.size());
  DualBimodule<F> out{Bimodule<F>{r, t, d, {}, {}}, maps};
  if (d == 0) {
    for (int i = 0; i < r->dim(); ++i) out.bim.left.push_back(Mat<F>(fld, 0, 0));
    for (int j = 0; j < t->dim(); ++j) out.bim.right.push_back(Mat<F>(fld, 0, 0));
    return out;
  }
  BasisSolver<F> solver = mat_basis_solver(fld, maps, t->dim(), m.dim);
  // left action of r in R: g -> g after (. r) on M
  for (int i = 0; i < r->dim(); ++i) {
    Mat<F> a(fld, d, d);
    for (int b = 0; b < d; ++b)
      a.set_col(b, solver.coords_checked(vec_of(maps[b] * m.right[i]), "dual_left"));
    out.bim.left.push_back(std::move(a));
  }
  // right action of t in T: postcompose with right multiplication on T
  for (int j = 0; j < t->dim(); ++j) {
    Mat<F> a(fld, d, d);
    for (int b = 0; b < d; ++b)
      a.set_col(b, solver.coords_checked(vec_of(t->rmul_basis(j) * maps[b]), "dual_left"));
    out.bim.right.push_back(std::move(a));
  }
  out.bim.require_valid("dual_left");
  return out;
}

/// Right dual M* = maps of right R-modules M -> R, an (R,T)-bimodule with
/// (r.f.t)(m) = r f(t m).
template <class F>
DualBimodule<F> dual_right(const Bimodule<F>& m) {
  F fld = m.left_alg->field();
  const AlgebraRef<F>& t = m.left_alg;
  const AlgebraRef<F>& r = m.right_alg;
  // maps M -> R intertwining the right R-action
  std::vector<std::pair<const Mat<F>*, const Mat<F>*>> pairs;
  std::vector<Mat<F>> rreg_right;
  for (int j = 0; j < r->dim(); ++j) rreg_right.push_back(r->rmul_basis(j));
  for (int g : r->generators()) pairs.emplace_back(&m.right[g], &rreg_right[g]);
  std::vector<Mat<F>> maps = intertwiner_basis(fld, pairs, m.dim, r->dim());
  int d = static_cast<int>(maps.size());
  DualBimodule<F> out{Bimodule<F>{r, t, d, {}, {}}, maps};
  if (d == 0) {
    for (int i = 0; i < r->dim(); ++i) out.bim.left.push_back(Mat<F>(fld, 0, 0));
    for (int j = 0; j < t->dim(); ++j) out.bim.right.push_back(Mat<F>(fld, 0, 0));
    return out;
  }
  BasisSolver<F> solver = mat_basis_solver(fld, maps, r->dim(), m.dim);
  for (int i = 0; i < r->dim(); ++i) {  // (r f)(m) = r * f(m)
    Mat<F> a(fld, d, d);
    for (int b = 0; b < d; ++b)
      a.set_col(b, solver.coords_checked(vec_of(r->lmul_basis(i) * maps[b]), "dual_right"));
    out.bim.left.push_back(std::move(a));
  }
  for (int j = 0; j < t->dim(); ++j) {  // (f t)(m) = f(t m)
    Mat<F> a(fld, d, d);
    for (int b = 0; b < d; ++b)
      a.set_col(b, solver.coords_checked(vec_of(maps[b] * m.left[j]), "dual_right"));
    out.bim.right.push_back(std::move(a));
  }
  out.bim.require_valid("dual_right");
  return out;
}

/// M tensor_R N realized as a quotient of the plain tensor space, with the
/// projection and a chosen section retained for lifting elements.
template <class F>
struct TensorProd {
  Bimodule<F> bim;  // (T, S)
  Mat<F> proj;      // dM*dN -> dim
  Mat<F> sect;      // dim -> dM*dN
  int left_dim = 0, right_dim = 0;
};

template <class F>
TensorProd<F> tensor_over(const Bimodule<F>& m, const Bimodule<F>& n) {
  check(same_algebra(m.right_alg, n.left_alg), "tensor_over: middle algebra mismatch");
  F fld = m.left_alg->field();
  const AlgebraRef<F>& mid = m.right_alg;
  int dm = m.dim, dn = n.dim, amb = dm * dn;
  std::vector<Vec<F>> relations;
  for (int r = 0; r < mid->dim(); ++r) {
    const Mat<F>& mr = m.right[r];
    const Mat<F>& nl = n.left[r];
    for (int i = 0; i < dm; ++i)
      for (int k = 0; k < dn; ++k) {
        Vec<F> v(amb, fld.zero());
        for (int s = 0; s < dm; ++s)
          if (!mr.at(s, i).is_zero()) v[s * dn + k] += mr.at(s, i);
        for (int s = 0; s < dn; ++s)
          if (!nl.at(s, k).is_zero()) v[i * dn + s] -= nl.at(s, k);
        bool zero = true;
        for (const auto& x : v) zero = zero && x.is_zero();
        if (!zero) relations.push_back(std::move(v));
      }
  }
  QuotientSpace<F> q = quotient(fld, amb, relations);
  TensorProd<F> out{Bimodule<F>{m.left_alg, n.right_alg, q.proj.rows(), {}, {}},
                    q.proj, q.sect, dm, dn};
  Mat<F> idn = Mat<F>::identity(fld, dn), idm = Mat<F>::identity(fld, dm);
  for (int i = 0; i < m.left_alg->dim(); ++i) {
    Mat<F> big = kron(m.left[i], idn);
    Mat<F> desc = q.proj * big * q.sect;
    check(desc * q.proj == q.proj * big, "tensor_over: left action does not descend");
    out.bim.left.push_back(std::move(desc));
  }
  for (int j = 0; j < n.right_alg->dim(); ++j) {
    Mat<F> big = kron(idm, n.right[j]);
    Mat<F> desc = q.proj * big * q.sect;
    check(desc * q.proj == q.proj * big, "tensor_over: right action does not descend");
    out.bim.right.push_back(std::move(desc));
  }
  out.bim.require_valid("tensor_over");
  return out;
}

/// Evaluation map u_M : M tensor_R *M -> T, u_M(m (x) f) = (m)f,
/// computed on the lifted tensor basis and pushed through the quotient.
template <class F>
struct Evaluation {
  DualBimodule<F> dual;
  TensorProd<F> tp;
  BimoduleMap<F> u;
  Mat<F> u_lift;  // dT x (dM * d(*M))
};

template <class F>
Evaluation<F> evaluation_map(const Bimodule<F>& m) {
  F fld = m.left_alg->field();
  DualBimodule<F> dual = dual_left(m);
  TensorProd<F> tp = tensor_over(m, dual.bim);
  int dm = m.dim, dd = dual.bim.dim, dt = m.left_alg->dim();
  Mat<F> lift(fld, dt, dm * dd);
  for (int i = 0; i < dm; ++i)
    for (int a = 0; a < dd; ++a) lift.set_col(i * dd + a, dual.maps[a].col(i));
  // well-definedness: the lift must kill the tensor relations
  check(rank(vstack(tp.proj, lift)) == tp.proj.rows(),
        "evaluation_map: evaluation does not descend to the quotient");
  BimoduleMap<F> u{tp.bim, regular_bimodule(m.left_alg), lift * tp.sect};
  u.require_valid("evaluation_map");
  // consistency: u after proj equals the lift
  check(u.mat * tp.proj == lift, "evaluation_map: section mismatch");
  return Evaluation<F>{std::move(dual), std::move(tp), std::move(u), std::move(lift)};
}

/// Split-epi test: if the map is onto, sections are solved for inside the
/// bimodule hom space; failure of that linear system is an exact
/// certificate that no section exists.
template <class F>
struct SplitEpi {
  enum class Kind { split, not_epi, no_section } kind;
  std::optional<Mat<F>> section;
};

template <class F>
SplitEpi<F> is_split_epi(const BimoduleMap<F>& phi) {
  F fld = phi.mat.field();
  if (rank(phi.mat) < phi.target.dim) return {SplitEpi<F>::Kind::not_epi, std::nullopt};
  std::vector<Mat<F>> homs = hom_space(phi.target, phi.source, Side::both);
  int k = static_cast<int>(homs.size());
  int dt = phi.target.dim;
  Mat<F> sys(fld, dt * dt, k);
  for (int b = 0; b < k; ++b) sys.set_col(b, vec_of(phi.mat * homs[b]));
  Vec<F> rhs = vec_of(Mat<F>::identity(fld, dt));
  SolveResult<F> sol = solve(sys, rhs);
  if (!sol.particular) return {SplitEpi<F>::Kind::no_section, std::nullopt};
  Mat<F> section(fld, phi.source.dim, dt);
  for (int b = 0; b < k; ++b)
    if (!(*sol.particular)[b].is_zero()) section = section + homs[b].scaled((*sol.particular)[b]);
  check((phi.mat * section).is_identity(), "is_split_epi: section does not compose to identity");
  return {SplitEpi<F>::Kind::split, std::move(section)};
}

/// Dual-basis witness for finite generation + projectivity on one side.
/// The spanning set is the full coordinate basis of M; the functionals
/// are solved for inside the corresponding dual.
template <class F>
struct FgpWitness {
  std::vector<Mat<F>> functionals;  // one per basis vector of M
};

template <class F>
std::optional<FgpWitness<F>> is_fgp(const Bimodule<F>& m, Side side) {
  check(side != Side::both, "is_fgp: side must be left or right");
  F fld = m.left_alg->field();
  if (m.dim == 0) return FgpWitness<F>{};
  DualBimodule<F> dual = side == Side::left ? dual_left(m) : dual_right(m);
  int dd = dual.bim.dim;
  int dm = m.dim;
  if (dd == 0) return std::nullopt;
  // unknowns x_{i,a}: f_i = sum_a x_{i,a} dual.maps[a]
  // left:  for all j: sum_i act(f_i(e_j)) e_i = e_j   (act through the left action)
  // right: for all j: sum_i act(f_i(e_j)) e_i = e_j   (through the right action)
  Mat<F> sys(fld, dm * dm, dm * dd);
  for (int i = 0; i < dm; ++i)
    for (int a = 0; a < dd; ++a) {
      int col = i * dd + a;
      for (int j = 0; j < dm; ++j) {
        Vec<F> val = dual.maps[a].col(j);  // f_a(e_j) in T or R coords
        Vec<F> contrib = side == Side::left ? m.lact(val).col(i) : m.ract(val).col(i);
        for (int s = 0; s < dm; ++s)
          if (!contrib[s].is_zero()) sys.at(j * dm + s, col) += contrib[s];
      }
    }
  Vec<F> rhs = vec_of(Mat<F>::identity(fld, dm));
  SolveResult<F> sol = solve(sys, rhs);
  if (!sol.particular) return std::nullopt;
  FgpWitness<F> w;
  for (int i = 0; i < dm; ++i) {
    Mat<F> f(fld, dual.maps[0].rows(), dm);
    for (int a = 0; a < dd; ++a) {
      const auto& c = (*sol.particular)[i * dd + a];
      if (!c.is_zero()) f = f + dual.maps[a].scaled(c);
    }
    w.functionals.push_back(std::move(f));
  }
  // re-verify the dual basis identity exactly
  for (int j = 0; j < dm; ++j) {
    Vec<F> total(dm, fld.zero());
    for (int i = 0; i < dm; ++i) {
      Vec<F> val = w.functionals[i].col(j);
      Vec<F> contrib = side == Side::left ? m.lact(val).col(i) : m.ract(val).col(i);
      for (int s = 0; s < dm; ++s) total[s] += contrib[s];
    }
    Vec<F> expect(dm, fld.zero());
    expect[j] = fld.one();
    check(total == expect, "is_fgp: dual basis identity failed after solve");
  }
  return w;
}

template <class F>
struct BimoduleSum {
  Bimodule<F> bim;
  std::vector<Mat<F>> incl, proj;
};

template <class F>
BimoduleSum<F> direct_sum(const std::vector<const Bimodule<F>*>& parts) {
  check(!parts.empty(), "direct_sum: empty sum");
  F fld = parts[0]->left_alg->field();
  const AlgebraRef<F>& t = parts[0]->left_alg;
  const AlgebraRef<F>& r = parts[0]->right_alg;
  int total = 0;
  for (const auto* p : parts) {
    check(same_algebra(t, p->left_alg) && same_algebra(r, p->right_alg),
          "direct_sum: algebra mismatch");
    total += p->dim;
  }
  BimoduleSum<F> out{Bimodule<F>{t, r, total, {}, {}}, {}, {}};
  auto block = [&](auto pick) {
    Mat<F> m(fld, total, total);
    int off = 0;
    for (const auto* p : parts) {
      const Mat<F>& a = pick(*p);
      for (int i = 0; i < p->dim; ++i)
        for (int j = 0; j < p->dim; ++j) m.at(off + i, off + j) = a.at(i, j);
      off += p->dim;
    }
    return m;
  };
  for (int i = 0; i < t->dim(); ++i)
    out.bim.left.push_back(block([&](const Bimodule<F>& p) -> const Mat<F>& { return p.left[i]; }));
  for (int j = 0; j < r->dim(); ++j)
    out.bim.right.push_back(block([&](const Bimodule<F>& p) -> const Mat<F>& { return p.right[j]; }));
  int off = 0;
  for (const auto* p : parts) {
    Mat<F> incl(fld, total, p->dim), proj(fld, p->dim, total);
    for (int j = 0; j < p->dim; ++j) {
      incl.at(off + j, j) = fld.one();
      proj.at(j, off + j) = fld.one();
    }
    out.incl.push_back(std::move(incl));
    out.proj.push_back(std::move(proj));
    off += p->dim;
  }
  out.bim.require_valid("direct_sum");
  return out;
}

template <class F>
BimoduleSum<F> direct_sum(const Bimodule<F>& m, const Bimodule<F>& n) {
  return direct_sum<F>({&m, &n});
}

template <class F>
BimoduleSum<F> bimodule_power(const Bimodule<F>& m, int n) {
  check(n >= 1, "bimodule_power: n must be positive");
  std::vector<const Bimodule<F>*> parts(n, &m);
  return direct_sum<F>(parts);
}

/// Randomized isomorphism search over the bimodule hom space.
/// "inconclusive" is a first-class answer; over a prime field with a small
/// hom space the search is exhaustive, making "no" definitive there too.
template <class F>
struct IsoSearch {
  enum class Verdict { iso, no, inconclusive } verdict;
  std::optional<Mat<F>> map;
};

template <class F>
IsoSearch<F> is_isomorphic(const Bimodule<F>& m, const Bimodule<F>& n, SearchRng& rng,
                           const SearchBudget& budget = {}) {
  using V = typename IsoSearch<F>::Verdict;
  if (m.dim != n.dim) return {V::no, std::nullopt};
  if (m.dim == 0) return {V::iso, Mat<F>(m.left_alg->field(), 0, 0)};
  F fld = m.left_alg->field();
  std::vector<Mat<F>> homs = hom_space(m, n, Side::both);
  if (homs.empty()) return {V::no, std::nullopt};
  for (const auto& h : homs)
    if (is_invertible(h)) return {V::iso, h};
  int k = static_cast<int>(homs.size());
  if constexpr (std::is_same_v<F, GF>) {
    // exhaustive over small coefficient spaces: a definitive "no" is possible
    double logsize = k * std::log2(static_cast<double>(fld.p));
    if (logsize <= 14.0) {
      std::vector<std::uint64_t> coeff(k, 0);
      while (true) {
        int pos = 0;
        while (pos < k) {
          coeff[pos]++;
          if (coeff[pos] < fld.p) break;
          coeff[pos] = 0;
          ++pos;
        }
        if (pos == k) break;
        Mat<F> cand(fld, n.dim, m.dim);
        for (int b = 0; b < k; ++b)
          if (coeff[b]) cand = cand + homs[b].scaled(Fp(coeff[b], fld.p));
        if (is_invertible(cand)) return {V::iso, cand};
      }
      return {V::no, std::nullopt};
    }
  }
  for (int round = 0; round < budget.rounds; ++round)
    for (int t = 0; t < budget.draws_per_round; ++t) {
      Mat<F> cand(fld, n.dim, m.dim);
      for (int b = 0; b < k; ++b) {
        long c = rng.window_coeff(round);
        if (c != 0) cand = cand + homs[b].scaled(fld.from_int(c));
      }
      if (is_invertible(cand)) return {V::iso, cand};
    }
  return {V::inconclusive, std::nullopt};
}

}  // namespace sepalg
