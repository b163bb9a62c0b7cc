#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sepalg/matrix.hpp"

using namespace sepalg;

namespace {

Mat<QQ> qmat(std::initializer_list<std::initializer_list<long>> rows) {
  QQ f;
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows.begin()->size()) : 0;
  Mat<QQ> m(f, r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long v : row) m.at(i, j++) = Rat(v);
    ++i;
  }
  return m;
}

Vec<QQ> qvec(std::initializer_list<long> v) {
  Vec<QQ> out;
  for (long x : v) out.push_back(Rat(x));
  return out;
}

// Independent row-reduction oracle: Gauss-Jordan with *last* nonzero pivot
// row and deferred normalization, so it shares no code path with RowSpan.
template <class F>
std::vector<Vec<F>> oracle_row_reduce(Mat<F> m) {
  F fld = m.field();
  int rows = m.rows(), cols = m.cols();
  std::vector<Vec<F>> work;
  for (int i = 0; i < rows; ++i) work.push_back(m.row(i));
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = rows - 1; i >= r; --i)
      if (!work[i][c].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(work[p], work[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || work[i][c].is_zero()) continue;
      typename F::Elem f = work[i][c] / work[r][c];
      for (int j = 0; j < cols; ++j) work[i][j] -= f * work[r][j];
    }
    ++r;
  }
  work.resize(r);
  for (auto& row : work) {
    int p = -1;
    for (int j = 0; j < cols; ++j)
      if (!row[j].is_zero()) { p = j; break; }
    typename F::Elem inv = fld.one() / row[p];
    for (auto& x : row) x *= inv;
  }
  return work;
}

template <class F>
bool same_span(F fld, int ambient, const std::vector<Vec<F>>& a, const std::vector<Vec<F>>& b) {
  RowSpan<F> sa(fld, ambient), sb(fld, ambient);
  for (const auto& v : a) sa.add(v);
  for (const auto& v : b) sb.add(v);
  if (sa.dim() != sb.dim()) return false;
  for (const auto& v : a)
    if (!sb.contains(v)) return false;
  return true;
}

template <class F>
Mat<F> random_matrix(F fld, std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  Mat<F> m(fld, rows, cols);
  std::uniform_int_distribution<long> d(lo, hi);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = fld.from_int(d(rng));
  return m;
}

}  // namespace

TEST_CASE("solve on identity and underdetermined systems") {
  QQ f;
  auto r1 = solve(Mat<QQ>::identity(f, 2), qvec({3, 5}));
  REQUIRE(r1.particular.has_value());
  CHECK(*r1.particular == qvec({3, 5}));
  CHECK(r1.kernel.empty());

  auto r2 = solve(qmat({{1, 1}}), qvec({2}));
  REQUIRE(r2.particular.has_value());
  CHECK((*r2.particular)[0] + (*r2.particular)[1] == Rat(2));
  REQUIRE(r2.kernel.size() == 1);
  CHECK(same_span(f, 2, r2.kernel, {qvec({1, -1})}));
}

TEST_CASE("solve cross-checked against an independent row reduction") {
  QQ f;
  Mat<QQ> a = qmat({{2, 4}, {1, 2}});
  Vec<QQ> b = qvec({2, 1});
  auto r = solve(a, b);
  REQUIRE(r.particular.has_value());
  CHECK(a.apply(*r.particular) == b);
  CHECK(same_span(f, 2, r.kernel, {qvec({-2, 1})}));

  // the oracle rref of [A|b] yields a consistent system with the same kernel
  auto reduced = oracle_row_reduce(qmat({{2, 4, 2}, {1, 2, 1}}));
  REQUIRE(reduced.size() == 1);
  CHECK(reduced[0] == qvec({1, 2, 1}));

  CHECK_FALSE(solve(qmat({{2, 4}, {1, 2}}), qvec({1, 1})).particular.has_value());
}

TEST_CASE("kernel basics") {
  QQ f;
  CHECK(kernel(Mat<QQ>::identity(f, 3)).empty());
  CHECK(kernel(Mat<QQ>(f, 2, 2)).size() == 2);
  auto k = kernel(qmat({{1, 2}, {2, 4}}));
  CHECK(same_span(f, 2, k, {qvec({-2, 1})}));
}

TEST_CASE("quotient projection and section") {
  QQ f;
  auto q0 = quotient(f, 3, {});
  CHECK(q0.proj == Mat<QQ>::identity(f, 3));
  CHECK(q0.sect == Mat<QQ>::identity(f, 3));

  auto q1 = quotient(f, 2, {qvec({1, -1})});
  CHECK(q1.proj.rows() == 1);
  CHECK(q1.proj.apply(qvec({1, 0})) == q1.proj.apply(qvec({0, 1})));
  CHECK((q1.proj * q1.sect).is_identity());

  auto q2 = quotient(f, 2, {qvec({1, 0}), qvec({0, 1})});
  CHECK(q2.proj.rows() == 0);
}

TEST_CASE("kron fixed values") {
  QQ f;
  CHECK(kron(Mat<QQ>::identity(f, 2), Mat<QQ>::identity(f, 3)) == Mat<QQ>::identity(f, 6));

  Mat<QQ> a = qmat({{1, 2}, {3, 4}});
  Mat<QQ> c = qmat({{5}});
  CHECK(kron(a, c) == a.scaled(Rat(5)));

  Mat<QQ> n = qmat({{0, 1}, {0, 0}});
  Mat<QQ> k = kron(n, Mat<QQ>::identity(f, 2));
  Vec<QQ> e1e2(4, Rat(0)), e2e1(4, Rat(0)), e1e1(4, Rat(0));
  e1e2[1] = Rat(1);  // e1 (x) e2
  e2e1[2] = Rat(1);  // e2 (x) e1
  e1e1[0] = Rat(1);
  CHECK(k.apply(e1e2) == Vec<QQ>(4, Rat(0)));
  CHECK(k.apply(e2e1) == e1e1);
}

TEST_CASE("rank-nullity and solve exactness on random matrices") {
  std::mt19937_64 rng(20240817);
  QQ fq;
  GF f2(2), f5(5);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    Mat<QQ> a = random_matrix(fq, rng, rows, cols, -4, 4);
    CHECK(rank(a) + static_cast<int>(kernel(a).size()) == cols);
    for (const auto& v : kernel(a)) {
      Vec<QQ> img = a.apply(v);
      for (const auto& x : img) CHECK(x.is_zero());
    }
    Vec<QQ> x0(cols, Rat(0));
    for (int j = 0; j < cols; ++j) x0[j] = Rat(static_cast<long>(rng() % 9) - 4);
    Vec<QQ> b = a.apply(x0);
    auto sol = solve(a, b);
    REQUIRE(sol.particular.has_value());
    CHECK(a.apply(*sol.particular) == b);

    // same span as the independent oracle
    CHECK(same_span(fq, cols, row_span(a).rows(), oracle_row_reduce(a)));

    Mat<GF> m2 = random_matrix(f2, rng, rows, cols, 0, 1);
    CHECK(rank(m2) + static_cast<int>(kernel(m2).size()) == cols);
    Mat<GF> m5 = random_matrix(f5, rng, rows, cols, 0, 4);
    CHECK(rank(m5) + static_cast<int>(kernel(m5).size()) == cols);
    CHECK(same_span(f5, cols, row_span(m5).rows(), oracle_row_reduce(m5)));
  }
}

TEST_CASE("kron associativity up to canonical reindexing") {
  std::mt19937_64 rng(7);
  QQ f;
  for (int trial = 0; trial < 10; ++trial) {
    Mat<QQ> a = random_matrix(f, rng, 2, 2, -3, 3);
    Mat<QQ> b = random_matrix(f, rng, 1 + static_cast<int>(rng() % 3), 2, -3, 3);
    Mat<QQ> c = random_matrix(f, rng, 2, 1 + static_cast<int>(rng() % 3), -3, 3);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  }
}

TEST_CASE("quotient has full row rank and exact section on random relations") {
  std::mt19937_64 rng(99);
  QQ f;
  for (int trial = 0; trial < 25; ++trial) {
    int ambient = 1 + static_cast<int>(rng() % 6);
    int nrel = static_cast<int>(rng() % 4);
    std::vector<Vec<QQ>> rel;
    for (int i = 0; i < nrel; ++i) {
      Vec<QQ> v(ambient, Rat(0));
      for (int j = 0; j < ambient; ++j) v[j] = Rat(static_cast<long>(rng() % 7) - 3);
      rel.push_back(v);
    }
    auto q = quotient(f, ambient, rel);
    CHECK((q.proj * q.sect).is_identity());
    CHECK(rank(q.proj) == q.proj.rows());
    for (const auto& v : rel) {
      Vec<QQ> img = q.proj.apply(v);
      for (const auto& x : img) CHECK(x.is_zero());
    }
    RowSpan<QQ> relspan(f, ambient);
    for (const auto& v : rel) relspan.add(v);
    CHECK(q.proj.rows() == ambient - relspan.dim());
  }
}

TEST_CASE("prime field arithmetic sanity") {
  GF f7(7);
  Fp a = f7.from_int(3), b = f7.from_int(5);
  CHECK((a * b).value() == 1);
  CHECK((a / b).value() == (a * b.inverse()).value());
  CHECK((b.inverse() * b).is_one());
  CHECK_THROWS_AS(GF(6), error);
  CHECK(f7.parse("-1").value() == 6);
  CHECK(Rat::parse("-14/21").str() == "-2/3");
  CHECK_THROWS_AS(Rat::parse("1/0"), error);
}
