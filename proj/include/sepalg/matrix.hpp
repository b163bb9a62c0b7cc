#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepalg/error.hpp"
#include "sepalg/field.hpp"

namespace sepalg {

template <class F>
using Vec = std::vector<typename F::Elem>;

/// Dense matrix over an exact field, row-major. Vectors are columns:
/// a matrix A of shape r x c maps coordinate vectors of length c to
/// coordinate vectors of length r.
template <class F>
class Mat {
public:
  using E = typename F::Elem;

  Mat() : rows_(0), cols_(0) {}
  Mat(F fld, int rows, int cols)
      : fld_(fld), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, fld.zero()) {
    check(rows >= 0 && cols >= 0, "Mat: negative shape");
  }

  static Mat identity(F fld, int n) {
    Mat m(fld, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = fld.one();
    return m;
  }

  static Mat from_rows(F fld, const std::vector<Vec<F>>& rows, int cols) {
    Mat m(fld, static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows_; ++i) {
      check(static_cast<int>(rows[i].size()) == cols, "Mat: ragged rows");
      for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static Mat from_cols(F fld, const std::vector<Vec<F>>& cols, int rows) {
    Mat m(fld, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
      check(static_cast<int>(cols[j].size()) == rows, "Mat: ragged cols");
      for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  const F& field() const { return fld_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  E& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const E& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vec<F> row(int r) const {
    Vec<F> v;
    v.reserve(cols_);
    for (int j = 0; j < cols_; ++j) v.push_back(at(r, j));
    return v;
  }
  Vec<F> col(int c) const {
    Vec<F> v;
    v.reserve(rows_);
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, c));
    return v;
  }
  void set_col(int c, const Vec<F>& v) {
    check(static_cast<int>(v.size()) == rows_, "Mat: bad column length");
    for (int i = 0; i < rows_; ++i) at(i, c) = v[i];
  }

  bool is_zero() const {
    for (const E& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(fld_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    check(cols_ == o.rows_, "Mat: shape mismatch in product");
    Mat m(fld_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const E& aik = at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const E& bkj = o.at(k, j);
          if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
        }
      }
    return m;
  }

  Mat operator+(const Mat& o) const {
    check(rows_ == o.rows_ && cols_ == o.cols_, "Mat: shape mismatch in sum");
    Mat m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
  }

  Mat operator-(const Mat& o) const {
    check(rows_ == o.rows_ && cols_ == o.cols_, "Mat: shape mismatch in difference");
    Mat m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
  }

  Mat scaled(const E& c) const {
    Mat m = *this;
    for (E& x : m.a_) x *= c;
    return m;
  }

  Vec<F> apply(const Vec<F>& v) const {
    check(static_cast<int>(v.size()) == cols_, "Mat: bad vector length");
    Vec<F> out(rows_, fld_.zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const E& aij = at(i, j);
        if (!aij.is_zero() && !v[j].is_zero()) out[i] += aij * v[j];
      }
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (a.a_[i] != b.a_[i]) return false;
    return true;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
  F fld_;
  int rows_, cols_;
  std::vector<E> a_;
};

template <class F>
Mat<F> vstack(const Mat<F>& a, const Mat<F>& b) {
  check(a.cols() == b.cols(), "vstack: column mismatch");
  Mat<F> m(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

template <class F>
Mat<F> hstack(const Mat<F>& a, const Mat<F>& b) {
  check(a.rows() == b.rows(), "hstack: row mismatch");
  Mat<F> m(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

/// Kronecker product under the lexicographic tensor basis ordering
/// (left factor index major): (A kron B)(x tensor y) = Ax tensor By.
template <class F>
Mat<F> kron(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const auto& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          const auto& bkl = b.at(k, l);
          if (!bkl.is_zero()) m.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return m;
}

/// Incrementally maintained reduced row-echelon span of a set of vectors.
/// Pivot choice is always the first nonzero coordinate, so the reduced
/// basis is deterministic in insertion order.
template <class F>
class RowSpan {
public:
  using E = typename F::Elem;

  RowSpan(F fld, int ambient) : fld_(fld), ambient_(ambient) {}

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec<F>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Reduce v against the current rows (leaves it with zeros at all pivots).
  Vec<F> residual(Vec<F> v) const {
    check(static_cast<int>(v.size()) == ambient_, "RowSpan: bad vector length");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const E& c = v[pivots_[i]];
      if (c.is_zero()) continue;
      E f = c;  // rows are monic at their pivot
      for (int j = pivots_[i]; j < ambient_; ++j)
        if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
    }
    return v;
  }

  bool contains(const Vec<F>& v) const {
    Vec<F> r = residual(v);
    for (const E& x : r)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Insert v; returns true if it enlarged the span.
  bool add(const Vec<F>& v) {
    Vec<F> r = residual(v);
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!r[j].is_zero()) { p = j; break; }
    if (p < 0) return false;
    E inv = fld_.one() / r[p];
    if (!r[p].is_one())
      for (int j = p; j < ambient_; ++j)
        if (!r[j].is_zero()) r[j] *= inv;
    // back-substitute into existing rows, then insert keeping pivot order
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      E c = rows_[i][p];
      if (c.is_zero()) continue;
      for (int j = p; j < ambient_; ++j)
        if (!r[j].is_zero()) rows_[i][j] -= c * r[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  /// Express v as a combination of the stored rows; nullopt if v is outside.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    check(static_cast<int>(v.size()) == ambient_, "RowSpan: bad vector length");
    Vec<F> w = v;
    Vec<F> coeff(rows_.size(), fld_.zero());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const E& c = w[pivots_[i]];
      if (c.is_zero()) continue;
      coeff[i] = c;
      for (int j = pivots_[i]; j < ambient_; ++j)
        if (!rows_[i][j].is_zero()) w[j] -= coeff[i] * rows_[i][j];
    }
    for (const E& x : w)
      if (!x.is_zero()) return std::nullopt;
    return coeff;
  }

private:
  F fld_;
  int ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<int> pivots_;
};

/// Coordinates with respect to a fixed independent family, via the
/// augmented-identity reduction trick: rows [b_i | e_i] are kept in
/// echelon form, and reducing [v | 0] leaves -coords in the tail.
template <class F>
class BasisSolver {
public:
  BasisSolver(F fld, const std::vector<Vec<F>>& basis, int ambient)
      : fld_(fld), ambient_(ambient), k_(static_cast<int>(basis.size())),
        span_(fld, ambient + static_cast<int>(basis.size())) {
    for (int i = 0; i < k_; ++i) {
      check(static_cast<int>(basis[i].size()) == ambient_, "BasisSolver: bad basis vector");
      Vec<F> row(ambient_ + k_, fld.zero());
      for (int j = 0; j < ambient_; ++j) row[j] = basis[i][j];
      row[ambient_ + i] = fld.one();
      check(span_.add(row), "BasisSolver: basis vectors are dependent");
    }
  }

  int size() const { return k_; }

  std::optional<Vec<F>> coords(const Vec<F>& v) const {
    check(static_cast<int>(v.size()) == ambient_, "BasisSolver: bad query length");
    Vec<F> row(ambient_ + k_, fld_.zero());
    for (int j = 0; j < ambient_; ++j) row[j] = v[j];
    Vec<F> r = span_.residual(std::move(row));
    for (int j = 0; j < ambient_; ++j)
      if (!r[j].is_zero()) return std::nullopt;
    Vec<F> out(k_, fld_.zero());
    for (int i = 0; i < k_; ++i) out[i] = -r[ambient_ + i];
    return out;
  }

  Vec<F> coords_checked(const Vec<F>& v, const char* what) const {
    auto c = coords(v);
    if (!c) throw error(std::string(what) + ": vector outside the expected span");
    return *c;
  }

private:
  F fld_;
  int ambient_, k_;
  RowSpan<F> span_;
};

template <class F>
RowSpan<F> row_span(const Mat<F>& m) {
  RowSpan<F> s(m.field(), m.cols());
  for (int i = 0; i < m.rows(); ++i) s.add(m.row(i));
  return s;
}

template <class F>
RowSpan<F> col_span(const Mat<F>& m) {
  RowSpan<F> s(m.field(), m.rows());
  for (int j = 0; j < m.cols(); ++j) s.add(m.col(j));
  return s;
}

template <class F>
int rank(const Mat<F>& m) {
  return row_span(m).dim();
}

/// Basis of { x : Ax = 0 }. Standard free-column construction from the
/// reduced row echelon form of A.
template <class F>
std::vector<Vec<F>> kernel(const Mat<F>& a) {
  F fld = a.field();
  RowSpan<F> s = row_span(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : s.pivots()) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (int j = 0; j < a.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec<F> v(a.cols(), fld.zero());
    v[j] = fld.one();
    for (int i = 0; i < s.dim(); ++i) v[s.pivots()[i]] = -s.rows()[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
struct SolveResult {
  std::optional<Vec<F>> particular;  // nullopt when inconsistent
  std::vector<Vec<F>> kernel;
};

/// Exact solve of Ax = b: one particular solution plus a kernel basis,
/// or an inconsistency certificate (nullopt).
template <class F>
SolveResult<F> solve(const Mat<F>& a, const Vec<F>& b) {
  check(static_cast<int>(b.size()) == a.rows(), "solve: bad rhs length");
  F fld = a.field();
  Mat<F> aug(fld, a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RowSpan<F> s = row_span(aug);
  SolveResult<F> res;
  res.kernel = kernel(a);
  for (int p : s.pivots())
    if (p == a.cols()) return res;  // inconsistent
  Vec<F> x(a.cols(), fld.zero());
  for (int i = 0; i < s.dim(); ++i) x[s.pivots()[i]] = s.rows()[i][a.cols()];
  res.particular = std::move(x);
  return res;
}

/// Solve AX = B column by column; nullopt if any column is inconsistent.
template <class F>
std::optional<Mat<F>> solve_matrix(const Mat<F>& a, const Mat<F>& b) {
  check(a.rows() == b.rows(), "solve_matrix: shape mismatch");
  F fld = a.field();
  Mat<F> aug = hstack(a, b);
  RowSpan<F> s = row_span(aug);
  for (int p : s.pivots())
    if (p >= a.cols()) return std::nullopt;
  Mat<F> x(fld, a.cols(), b.cols());
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(s.pivots()[i], j) = s.rows()[i][a.cols() + j];
  return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  std::optional<Mat<F>> inv = solve_matrix(a, Mat<F>::identity(a.field(), a.rows()));
  if (!inv) return std::nullopt;
  if (!((*inv * a).is_identity())) return std::nullopt;  // rank-deficient
  return inv;
}

template <class F>
bool is_invertible(const Mat<F>& a) {
  return a.rows() == a.cols() && rank(a) == a.rows();
}

/// Linearly independent vectors spanning a subspace of a fixed ambient space.
template <class F>
struct SubspaceBasis {
  int ambient_dim = 0;
  std::vector<Vec<F>> vectors;

  int dim() const { return static_cast<int>(vectors.size()); }

  void validate(F fld) const {
    RowSpan<F> s(fld, ambient_dim);
    for (const auto& v : vectors) {
      check(static_cast<int>(v.size()) == ambient_dim, "SubspaceBasis: bad vector length");
      check(s.add(v), "SubspaceBasis: vectors are linearly dependent");
    }
  }
};

template <class F>
struct QuotientSpace {
  Mat<F> proj;  // ambient -> quotient, full row rank
  Mat<F> sect;  // quotient -> ambient, proj * sect = identity
};

/// Present ambient/span(relations) by an explicit projection and section.
/// The section embeds the quotient as the span of the non-pivot coordinates.
template <class F>
QuotientSpace<F> quotient(F fld, int ambient_dim, const std::vector<Vec<F>>& relations) {
  RowSpan<F> s(fld, ambient_dim);
  for (const auto& r : relations) s.add(r);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (int p : s.pivots()) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  int q = static_cast<int>(free_cols.size());
  QuotientSpace<F> out{Mat<F>(fld, q, ambient_dim), Mat<F>(fld, ambient_dim, q)};
  // proj: reduce a standard basis vector, read off free coordinates
  for (int j = 0; j < ambient_dim; ++j) {
    Vec<F> e(ambient_dim, fld.zero());
    e[j] = fld.one();
    Vec<F> r = s.residual(std::move(e));
    for (int k = 0; k < q; ++k) out.proj.at(k, j) = r[free_cols[k]];
  }
  for (int k = 0; k < q; ++k) out.sect.at(free_cols[k], k) = fld.one();
  return out;
}

}  // namespace sepalg
