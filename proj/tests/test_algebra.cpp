#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "sepalg/algebra.hpp"
#include "sepalg/idempotent.hpp"
#include "sepalg/quiver.hpp"
#include "sepalg/radical.hpp"

using namespace sepalg;

namespace {

// structure constants from a basis multiplication rule
template <class F>
std::vector<typename F::Elem> structure_from(F fld, int dim,
                                             const std::function<Vec<F>(int, int)>& mul) {
  std::vector<typename F::Elem> c(static_cast<std::size_t>(dim) * dim * dim, fld.zero());
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec<F> v = mul(i, j);
      for (int k = 0; k < dim; ++k) c[(static_cast<std::size_t>(i) * dim + j) * dim + k] = v[k];
    }
  return c;
}

template <class F>
AlgebraRef<F> cyclic_group_algebra(F fld, int n) {
  auto mul = [&](int i, int j) {
    Vec<F> v(n, fld.zero());
    v[(i + j) % n] = fld.one();
    return v;
  };
  Vec<F> unit(n, fld.zero());
  unit[0] = fld.one();
  return make_algebra<F>(fld, n, structure_from<F>(fld, n, mul), unit);
}

template <class F>
AlgebraRef<F> dual_numbers(F fld) {  // k[x]/(x^2), basis {1, x}
  auto mul = [&](int i, int j) {
    Vec<F> v(2, fld.zero());
    if (i + j < 2) v[i + j] = fld.one();
    return v;
  };
  Vec<F> unit{fld.one(), fld.zero()};
  return make_algebra<F>(fld, 2, structure_from<F>(fld, 2, mul), unit);
}

QuiverPresentation<QQ> a2_quiver() {
  QuiverPresentation<QQ> q{QQ{}};
  q.vertices = 2;
  q.arrows = {{0, 1}};
  return q;
}

}  // namespace

TEST_CASE("validate_algebra accepts fixtures and reports violations") {
  QQ f;
  auto k = scalar_algebra(f);
  CHECK_FALSE(k->validate().has_value());

  auto m2 = matrix_algebra(k, 2);
  CHECK(m2->dim() == 4);
  CHECK_FALSE(m2->validate().has_value());

  // QC2 with a perturbed structure constant: 1*1 = 1 + g breaks the unit law
  auto qc2 = cyclic_group_algebra(f, 2);
  std::vector<Rat> bad(8, Rat(0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) bad[(static_cast<std::size_t>(i) * 2 + j) * 2 + l] = qc2->c(i, j, l);
  bad[(0 * 2 + 0) * 2 + 1] = Rat(1);
  Algebra<QQ> broken(f, 2, bad, qc2->unit());
  auto v = broken.validate();
  REQUIRE(v.has_value());
}

TEST_CASE("path algebra of a single vertex is the ground field") {
  QuiverPresentation<QQ> q{QQ{}};
  q.vertices = 1;
  auto pa = path_algebra(q);
  CHECK(pa.algebra->dim() == 1);
  CHECK(pa.algebra->unit() == pa.algebra->basis_vec(0));
}

TEST_CASE("path algebra of A2") {
  auto pa = path_algebra(a2_quiver());
  const auto& a = pa.algebra;
  REQUIRE(a->dim() == 3);
  CHECK_FALSE(a->validate().has_value());
  // basis: e0, e1, alpha (the arrow 0 -> 1)
  int e0 = -1, e1 = -1, al = -1;
  for (int i = 0; i < 3; ++i) {
    if (pa.basis[i].length() == 0)
      (pa.basis[i].source == 0 ? e0 : e1) = i;
    else
      al = i;
  }
  REQUIRE((e0 >= 0 && e1 >= 0 && al >= 0));
  // paths compose right-to-left: alpha * e0 = alpha, e1 * alpha = alpha
  CHECK(a->mult(a->basis_vec(al), a->basis_vec(e0)) == a->basis_vec(al));
  CHECK(a->mult(a->basis_vec(e1), a->basis_vec(al)) == a->basis_vec(al));
  CHECK(a->mult(a->basis_vec(e0), a->basis_vec(al)) == a->zero_vec());
  CHECK(a->mult(a->basis_vec(al), a->basis_vec(al)) == a->zero_vec());
}

TEST_CASE("path algebra with a nilpotency relation") {
  QuiverPresentation<QQ> q{QQ{}};
  q.vertices = 1;
  q.arrows = {{0, 0}};
  q.relations = {{{Rat(1), {0, 0}}}};  // x^2 = 0
  auto pa = path_algebra(q);
  REQUIRE(pa.algebra->dim() == 2);
  auto dn = dual_numbers(QQ{});
  // same multiplication table up to basis order {e, x}
  int x = pa.basis[0].length() == 1 ? 0 : 1;
  CHECK(pa.algebra->mult(pa.algebra->basis_vec(x), pa.algebra->basis_vec(x)) ==
        pa.algebra->zero_vec());
  CHECK(dn->mult(dn->basis_vec(1), dn->basis_vec(1)) == dn->zero_vec());
}

TEST_CASE("path algebra without relations on a loop is infinite-dimensional") {
  QuiverPresentation<QQ> q{QQ{}};
  q.vertices = 1;
  q.arrows = {{0, 0}};
  CHECK_THROWS_AS(path_algebra(q), error);
}

TEST_CASE("commutative square with commutativity relation") {
  // vertices 0,1,2,3; arrows a:0->1, b:1->3, c:0->2, d:2->3; relation ba = dc
  QuiverPresentation<QQ> q{QQ{}};
  q.vertices = 4;
  q.arrows = {{0, 1}, {1, 3}, {0, 2}, {2, 3}};
  q.relations = {{{Rat(1), {0, 1}}, {Rat(-1), {2, 3}}}};
  auto pa = path_algebra(q);
  // 4 vertices + 4 arrows + 1 surviving length-2 class
  CHECK(pa.algebra->dim() == 9);
  CHECK_FALSE(pa.algebra->validate().has_value());
}

TEST_CASE("constructors: matrix algebra, product, opposite") {
  QQ f;
  auto k = scalar_algebra(f);
  auto m2 = matrix_algebra(k, 2);
  auto kk = direct_product(k, k);
  CHECK(kk->dim() == 2);
  CHECK(kk->unit() == Vec<QQ>{Rat(1), Rat(1)});
  auto op = opposite(m2);
  CHECK_FALSE(op->validate().has_value());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int l = 0; l < 4; ++l) CHECK(op->c(i, j, l) == m2->c(j, i, l));
  auto m2a2 = matrix_algebra(path_algebra(a2_quiver()).algebra, 2);
  CHECK(m2a2->dim() == 12);
  CHECK_FALSE(m2a2->validate().has_value());
}

TEST_CASE("radical over the rationals") {
  QQ f;
  auto k = scalar_algebra(f);
  auto m2 = matrix_algebra(k, 2);
  CHECK(radical(m2).vectors.empty());

  auto dn = dual_numbers(f);
  auto rad = radical(dn);
  REQUIRE(rad.vectors.size() == 1);
  CHECK(rad.vectors[0] == Vec<QQ>{Rat(0), Rat(1)});

  auto pa = path_algebra(a2_quiver());
  auto rad2 = radical(pa.algebra);
  REQUIRE(rad2.vectors.size() == 1);
  int al = -1;
  for (int i = 0; i < 3; ++i)
    if (pa.basis[i].length() == 1) al = i;
  CHECK(rad2.vectors[0] == pa.algebra->basis_vec(al));

  auto qc2 = cyclic_group_algebra(f, 2);
  CHECK(radical(qc2).vectors.empty());
}

TEST_CASE("radical in characteristic p via iterated trace functions") {
  GF f2(2);
  auto f2c2 = cyclic_group_algebra(f2, 2);
  auto rad = radical(f2c2);
  REQUIRE(rad.vectors.size() == 1);
  CHECK(rad.vectors[0] == Vec<GF>{f2.one(), f2.one()});  // 1 + g

  auto k2 = scalar_algebra(f2);
  CHECK(radical(direct_product(k2, k2)).vectors.empty());
  CHECK(radical(matrix_algebra(k2, 2)).vectors.empty());

  // F2[x]/(x^3): radical is span{x, x^2}
  QuiverPresentation<GF> q{f2};
  q.vertices = 1;
  q.arrows = {{0, 0}};
  q.relations = {{{f2.one(), {0, 0, 0}}}};
  auto pa = path_algebra(q);
  REQUIRE(pa.algebra->dim() == 3);
  CHECK(radical(pa.algebra).vectors.size() == 2);

  GF f3(3);
  auto f3c3 = cyclic_group_algebra(f3, 3);  // local, radical dim 2
  CHECK(radical(f3c3).vectors.size() == 2);
  auto f2c3 = cyclic_group_algebra(f2, 3);  // semisimple (2 does not divide 3)
  CHECK(radical(f2c3).vectors.empty());
}

TEST_CASE("radical of the semisimple quotient vanishes") {
  QQ f;
  auto dn = dual_numbers(f);
  auto rad = radical(dn);
  auto q = quotient_algebra(dn, rad.vectors);
  CHECK(radical(q.algebra).vectors.empty());
}

TEST_CASE("primitive idempotents of split fixtures") {
  QQ f;
  SearchRng rng(42);
  auto k = scalar_algebra(f);

  auto kk = direct_product(k, k);
  auto ids = primitive_idempotents(kk, radical(kk), rng);
  REQUIRE(ids.idempotents.size() == 2);
  CHECK(ids.class_count == 2);

  auto pa = path_algebra(a2_quiver());
  auto ids2 = primitive_idempotents(pa.algebra, radical(pa.algebra), rng);
  REQUIRE(ids2.idempotents.size() == 2);
  CHECK(ids2.class_count == 2);
  for (const auto& e : ids2.idempotents) {
    CHECK(pa.algebra->mult(e, e) == e);
    bool is_trivial_path = false;
    for (int i = 0; i < 3; ++i)
      if (pa.basis[i].length() == 0 && e == pa.algebra->basis_vec(i)) is_trivial_path = true;
    CHECK(is_trivial_path);
  }

  auto qc2 = cyclic_group_algebra(f, 2);
  auto ids3 = primitive_idempotents(qc2, radical(qc2), rng);
  REQUIRE(ids3.idempotents.size() == 2);
  // (1+g)/2 and (1-g)/2 in some order
  for (const auto& e : ids3.idempotents) {
    CHECK(qc2->mult(e, e) == e);
    CHECK((e[0] == Rat(1, 2)));
  }

  auto m2 = matrix_algebra(k, 2);
  auto ids4 = primitive_idempotents(m2, radical(m2), rng);
  REQUIRE(ids4.idempotents.size() == 2);
  CHECK(ids4.class_count == 1);

  auto m2a2 = matrix_algebra(pa.algebra, 2);
  auto ids5 = primitive_idempotents(m2a2, radical(m2a2), rng);
  CHECK(ids5.idempotents.size() == 4);
  CHECK(ids5.class_count == 2);
}

TEST_CASE("idempotent postconditions on a local algebra") {
  QQ f;
  SearchRng rng(42);
  auto dn = dual_numbers(f);
  auto ids = primitive_idempotents(dn, radical(dn), rng);
  REQUIRE(ids.idempotents.size() == 1);
  CHECK(ids.idempotents[0] == dn->unit());

  GF f2(2);
  auto f2c2 = cyclic_group_algebra(f2, 2);
  SearchRng rng2(42);
  auto ids2 = primitive_idempotents(f2c2, radical(f2c2), rng2);
  REQUIRE(ids2.idempotents.size() == 1);
  CHECK(ids2.idempotents[0] == f2c2->unit());
}

TEST_CASE("complete orthogonal sum property") {
  QQ f;
  SearchRng rng(5);
  auto k = scalar_algebra(f);
  for (const auto& a : {matrix_algebra(k, 3), direct_product(matrix_algebra(k, 2), k)}) {
    auto ids = primitive_idempotents(a, radical(a), rng);
    Vec<QQ> total = a->zero_vec();
    for (const auto& e : ids.idempotents)
      for (int i = 0; i < a->dim(); ++i) total[i] += e[i];
    CHECK(total == a->unit());
    for (std::size_t i = 0; i < ids.idempotents.size(); ++i)
      for (std::size_t j = 0; j < ids.idempotents.size(); ++j) {
        Vec<QQ> p = a->mult(ids.idempotents[i], ids.idempotents[j]);
        if (i == j)
          CHECK(p == ids.idempotents[i]);
        else
          CHECK(p == a->zero_vec());
      }
    // primitivity: each corner of the semisimple quotient is 1-dimensional
    for (const auto& e : ids.idempotents) CHECK(corner_algebra(a, e).algebra->dim() == 1);
  }
}

TEST_CASE("non-split semisimple quotient is rejected") {
  // Q[x]/(x^2+1) = the Gaussian rationals: simple but not split over Q
  QQ f;
  auto mul = [&](int i, int j) {
    Vec<QQ> v(2, Rat(0));
    if (i + j < 2)
      v[i + j] = Rat(1);
    else
      v[0] = Rat(-1);
    return v;
  };
  auto gauss = make_algebra<QQ>(f, 2, structure_from<QQ>(f, 2, mul), {Rat(1), Rat(0)});
  SearchRng rng(42);
  CHECK_THROWS_AS(primitive_idempotents(gauss, radical(gauss), rng), error);
}

TEST_CASE("ring extensions validate the homomorphism laws") {
  QQ f;
  auto k = scalar_algebra(f);
  auto ext = make_extension(k, k, Mat<QQ>::identity(f, 1));
  CHECK(ext.embed({Rat(7)}) == Vec<QQ>{Rat(7)});

  auto m2 = matrix_algebra(k, 2);
  Mat<QQ> diag(f, 4, 1);
  diag.at(0, 0) = Rat(1);  // E11
  diag.at(3, 0) = Rat(1);  // E22
  auto ext2 = make_extension(k, m2, diag);
  CHECK(ext2.embed({Rat(1)}) == m2->unit());

  // QC2 -> Q[x]/(x^2), 1 -> 1, g -> x + 1: g^2 - 1 maps to 2x, not zero
  auto qc2 = cyclic_group_algebra(f, 2);
  auto dn = dual_numbers(f);
  Mat<QQ> bad(f, 2, 2);
  bad.at(0, 0) = Rat(1);
  bad.at(0, 1) = Rat(1);
  bad.at(1, 1) = Rat(1);
  CHECK_THROWS_AS(make_extension(qc2, dn, bad), error);
}

TEST_CASE("generators are small and generate") {
  QQ f;
  auto k = scalar_algebra(f);
  auto m2 = matrix_algebra(k, 2);
  CHECK(m2->generators().size() <= 3);
  auto pa = path_algebra(a2_quiver());
  CHECK(pa.algebra->generators().size() <= 2);
  // the chosen generators plus the unit really do generate
  for (const auto& a : {m2, pa.algebra}) {
    RowSpan<QQ> span(f, a->dim());
    span.add(a->unit());
    for (int g : a->generators()) span.add(a->basis_vec(g));
    bool grew = true;
    while (grew) {
      grew = false;
      auto rows = span.rows();
      for (const auto& v : rows)
        for (const auto& w : rows)
          if (span.add(a->mult(v, w))) grew = true;
    }
    CHECK(span.dim() == a->dim());
  }
}
