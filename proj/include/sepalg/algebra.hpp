#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sepalg/matrix.hpp"

namespace sepalg {

/// Finite-dimensional associative unital algebra over an exact field,
/// presented by structure constants: b_i * b_j = sum_k c[i][j][k] b_k.
/// Immutable after construction; all caches are built eagerly.
template <class F>
class Algebra {
public:
  using E = typename F::Elem;

  Algebra(F fld, int dim, std::vector<E> structure, Vec<F> unit)
      : fld_(fld), dim_(dim), c_(std::move(structure)), unit_(std::move(unit)) {
    check(dim_ >= 1, "Algebra: dimension must be positive");
    check(c_.size() == static_cast<std::size_t>(dim_) * dim_ * dim_,
          "Algebra: structure constant count mismatch");
    check(static_cast<int>(unit_.size()) == dim_, "Algebra: bad unit length");
    build_mult_caches();
    find_generators();
  }

  const F& field() const { return fld_; }
  int dim() const { return dim_; }
  const Vec<F>& unit() const { return unit_; }

  const E& c(int i, int j, int k) const {
    return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  /// Matrix of left multiplication by basis element i.
  const Mat<F>& lmul_basis(int i) const { return lmul_[i]; }
  /// Matrix of right multiplication by basis element j.
  const Mat<F>& rmul_basis(int j) const { return rmul_[j]; }

  Mat<F> lmul(const Vec<F>& x) const { return combine(lmul_, x); }
  Mat<F> rmul(const Vec<F>& x) const { return combine(rmul_, x); }

  Vec<F> mult(const Vec<F>& x, const Vec<F>& y) const {
    check(static_cast<int>(x.size()) == dim_ && static_cast<int>(y.size()) == dim_,
          "Algebra: bad element length");
    Vec<F> out(dim_, fld_.zero());
    for (int i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        E f = x[i] * y[j];
        for (int k = 0; k < dim_; ++k)
          if (!c(i, j, k).is_zero()) out[k] += f * c(i, j, k);
      }
    }
    return out;
  }

  Vec<F> basis_vec(int i) const {
    Vec<F> v(dim_, fld_.zero());
    v[i] = fld_.one();
    return v;
  }

  Vec<F> zero_vec() const { return Vec<F>(dim_, fld_.zero()); }

  Vec<F> power(Vec<F> x, int n) const {
    Vec<F> acc = unit_;
    for (int i = 0; i < n; ++i) acc = mult(acc, x);
    return acc;
  }

  bool is_unit_vec(const Vec<F>& x) const { return x == unit_; }

  /// Indices of a small set of basis elements that, together with the unit,
  /// generate the algebra. Intertwiner solvers only need to constrain these.
  const std::vector<int>& generators() const { return gens_; }

  struct Violation {
    std::string law;  // "assoc" or "unit"
    int i, j, k;
  };

  /// Associativity and unit laws, checked exactly over all basis triples.
  std::optional<Violation> validate() const {
    for (int i = 0; i < dim_; ++i) {
      if (mult(unit_, basis_vec(i)) != basis_vec(i) ||
          mult(basis_vec(i), unit_) != basis_vec(i))
        return Violation{"unit", i, -1, -1};
    }
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        Vec<F> ij = mult(basis_vec(i), basis_vec(j));
        for (int k = 0; k < dim_; ++k) {
          Vec<F> left = mult(ij, basis_vec(k));
          Vec<F> right = mult(basis_vec(i), mult(basis_vec(j), basis_vec(k)));
          if (left != right) return Violation{"assoc", i, j, k};
        }
      }
    return std::nullopt;
  }

  void require_valid() const {
    auto v = validate();
    if (v)
      throw error("Algebra: violated " + v->law + " law at (" + std::to_string(v->i) +
                  "," + std::to_string(v->j) + "," + std::to_string(v->k) + ")");
  }

  E trace_lmul(const Vec<F>& x) const {
    Mat<F> m = lmul(x);
    E t = fld_.zero();
    for (int i = 0; i < dim_; ++i) t += m.at(i, i);
    return t;
  }

private:
  Mat<F> combine(const std::vector<Mat<F>>& mats, const Vec<F>& x) const {
    check(static_cast<int>(x.size()) == dim_, "Algebra: bad element length");
    Mat<F> m(fld_, dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      m = m + mats[i].scaled(x[i]);
    }
    return m;
  }

  void build_mult_caches() {
    lmul_.reserve(dim_);
    rmul_.reserve(dim_);
    for (int i = 0; i < dim_; ++i) {
      Mat<F> l(fld_, dim_, dim_), r(fld_, dim_, dim_);
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) {
          l.at(k, j) = c(i, j, k);  // b_i * b_j
          r.at(k, j) = c(j, i, k);  // b_j * b_i
        }
      lmul_.push_back(std::move(l));
      rmul_.push_back(std::move(r));
    }
  }

  void find_generators() {
    RowSpan<F> span(fld_, dim_);
    span.add(unit_);
    auto close = [&]() {
      std::vector<Vec<F>> work = span.rows();
      while (!work.empty()) {
        std::vector<Vec<F>> next;
        for (const auto& v : work)
          for (const auto& w : span.rows()) {
            Vec<F> p = mult(v, w), q = mult(w, v);
            if (span.add(p)) next.push_back(p);
            if (span.add(q)) next.push_back(q);
          }
        work = std::move(next);
      }
    };
    close();
    for (int i = 0; i < dim_ && span.dim() < dim_; ++i) {
      if (span.contains(basis_vec(i))) continue;
      gens_.push_back(i);
      span.add(basis_vec(i));
      close();
    }
  }

  F fld_;
  int dim_;
  std::vector<E> c_;
  Vec<F> unit_;
  std::vector<Mat<F>> lmul_, rmul_;
  std::vector<int> gens_;
};

template <class F>
using AlgebraRef = std::shared_ptr<const Algebra<F>>;

template <class F>
AlgebraRef<F> make_algebra(F fld, int dim, std::vector<typename F::Elem> structure,
                           Vec<F> unit) {
  auto a = std::make_shared<Algebra<F>>(fld, dim, std::move(structure), std::move(unit));
  a->require_valid();
  return a;
}

template <class F>
bool same_algebra(const AlgebraRef<F>& a, const AlgebraRef<F>& b) {
  if (a == b) return true;
  if (a->dim() != b->dim() || !(a->field() == b->field())) return false;
  if (a->unit() != b->unit()) return false;
  for (int i = 0; i < a->dim(); ++i)
    for (int j = 0; j < a->dim(); ++j)
      for (int k = 0; k < a->dim(); ++k)
        if (a->c(i, j, k) != b->c(i, j, k)) return false;
  return true;
}

/// The ground field as a one-dimensional algebra.
template <class F>
AlgebraRef<F> scalar_algebra(F fld) {
  return make_algebra<F>(fld, 1, {fld.one()}, {fld.one()});
}

/// n x n matrices over A. Basis ordering: (row, col, A-basis) lexicographic.
template <class F>
AlgebraRef<F> matrix_algebra(const AlgebraRef<F>& a, int n) {
  check(n >= 1, "matrix_algebra: n must be positive");
  F fld = a->field();
  int d = a->dim();
  int dim = n * n * d;
  auto idx = [&](int r, int c, int t) { return (r * n + c) * d + t; };
  std::vector<typename F::Elem> st(static_cast<std::size_t>(dim) * dim * dim, fld.zero());
  auto cset = [&](int i, int j, int k, const typename F::Elem& v) {
    st[(static_cast<std::size_t>(i) * dim + j) * dim + k] = v;
  };
  // (E_rc b_s)(E_uv b_t) = delta_cu E_rv (b_s b_t)
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (c != u) continue;
          for (int s = 0; s < d; ++s)
            for (int t = 0; t < d; ++t)
              for (int k = 0; k < d; ++k)
                if (!a->c(s, t, k).is_zero())
                  cset(idx(r, c, s), idx(u, v, t), idx(r, v, k), a->c(s, t, k));
        }
  Vec<F> unit(dim, fld.zero());
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < d; ++t) unit[idx(r, r, t)] = a->unit()[t];
  return make_algebra<F>(fld, dim, std::move(st), std::move(unit));
}

template <class F>
AlgebraRef<F> direct_product(const AlgebraRef<F>& a, const AlgebraRef<F>& b) {
  check(a->field() == b->field(), "direct_product: field mismatch");
  F fld = a->field();
  int da = a->dim(), db = b->dim(), dim = da + db;
  std::vector<typename F::Elem> st(static_cast<std::size_t>(dim) * dim * dim, fld.zero());
  auto cset = [&](int i, int j, int k, const typename F::Elem& v) {
    st[(static_cast<std::size_t>(i) * dim + j) * dim + k] = v;
  };
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int k = 0; k < da; ++k)
        if (!a->c(i, j, k).is_zero()) cset(i, j, k, a->c(i, j, k));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < db; ++k)
        if (!b->c(i, j, k).is_zero()) cset(da + i, da + j, da + k, b->c(i, j, k));
  Vec<F> unit(dim, fld.zero());
  for (int i = 0; i < da; ++i) unit[i] = a->unit()[i];
  for (int i = 0; i < db; ++i) unit[da + i] = b->unit()[i];
  return make_algebra<F>(fld, dim, std::move(st), std::move(unit));
}

template <class F>
AlgebraRef<F> opposite(const AlgebraRef<F>& a) {
  F fld = a->field();
  int d = a->dim();
  std::vector<typename F::Elem> st(static_cast<std::size_t>(d) * d * d, fld.zero());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        st[(static_cast<std::size_t>(i) * d + j) * d + k] = a->c(j, i, k);
  return make_algebra<F>(fld, d, std::move(st), a->unit());
}

/// Tensor product of algebras over the ground field. Basis ordering is
/// lexicographic with the left factor major, as everywhere else.
template <class F>
AlgebraRef<F> tensor_algebra(const AlgebraRef<F>& a, const AlgebraRef<F>& b) {
  check(a->field() == b->field(), "tensor_algebra: field mismatch");
  F fld = a->field();
  int da = a->dim(), db = b->dim(), dim = da * db;
  std::vector<typename F::Elem> st(static_cast<std::size_t>(dim) * dim * dim, fld.zero());
  auto cset = [&](int i, int j, int k, const typename F::Elem& v) {
    st[(static_cast<std::size_t>(i) * dim + j) * dim + k] = v;
  };
  for (int i1 = 0; i1 < da; ++i1)
    for (int i2 = 0; i2 < db; ++i2)
      for (int j1 = 0; j1 < da; ++j1)
        for (int j2 = 0; j2 < db; ++j2)
          for (int k1 = 0; k1 < da; ++k1) {
            if (a->c(i1, j1, k1).is_zero()) continue;
            for (int k2 = 0; k2 < db; ++k2)
              if (!b->c(i2, j2, k2).is_zero())
                cset(i1 * db + i2, j1 * db + j2, k1 * db + k2,
                     a->c(i1, j1, k1) * b->c(i2, j2, k2));
          }
  Vec<F> unit(dim, fld.zero());
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) unit[i * db + j] = a->unit()[i] * b->unit()[j];
  return make_algebra<F>(fld, dim, std::move(st), std::move(unit));
}

template <class F>
struct QuotientAlgebra {
  AlgebraRef<F> algebra;
  Mat<F> proj;  // A -> A/I
  Mat<F> sect;  // linear section, proj * sect = id
};

/// Quotient by a two-sided ideal given by spanning vectors.
template <class F>
QuotientAlgebra<F> quotient_algebra(const AlgebraRef<F>& a,
                                    const std::vector<Vec<F>>& ideal) {
  F fld = a->field();
  QuotientSpace<F> q = quotient(fld, a->dim(), ideal);
  int qd = q.proj.rows();
  check(qd >= 1, "quotient_algebra: quotient is zero");
  std::vector<typename F::Elem> st(static_cast<std::size_t>(qd) * qd * qd, fld.zero());
  for (int i = 0; i < qd; ++i)
    for (int j = 0; j < qd; ++j) {
      Vec<F> p = q.proj.apply(a->mult(q.sect.col(i), q.sect.col(j)));
      for (int k = 0; k < qd; ++k)
        st[(static_cast<std::size_t>(i) * qd + j) * qd + k] = p[k];
    }
  Vec<F> unit = q.proj.apply(a->unit());
  return QuotientAlgebra<F>{make_algebra<F>(fld, qd, std::move(st), std::move(unit)),
                            q.proj, q.sect};
}

/// Ring extension: an algebra map i : base -> top, given on basis vectors.
template <class F>
struct RingExtension {
  AlgebraRef<F> base;  // S
  AlgebraRef<F> top;   // R
  Mat<F> map;          // top.dim x base.dim, columns are images of S basis

  Vec<F> embed(const Vec<F>& s) const { return map.apply(s); }
};

template <class F>
RingExtension<F> make_extension(const AlgebraRef<F>& base, const AlgebraRef<F>& top,
                                const Mat<F>& map) {
  check(map.rows() == top->dim() && map.cols() == base->dim(),
        "make_extension: map shape mismatch");
  check(map.apply(base->unit()) == top->unit(), "make_extension: map does not preserve unit");
  for (int i = 0; i < base->dim(); ++i)
    for (int j = 0; j < base->dim(); ++j) {
      Vec<F> lhs = map.apply(base->mult(base->basis_vec(i), base->basis_vec(j)));
      Vec<F> rhs = top->mult(map.col(i), map.col(j));
      if (lhs != rhs)
        throw error("make_extension: map not multiplicative at basis pair (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return RingExtension<F>{base, top, map};
}

}  // namespace sepalg
