#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sepalg/algebra.hpp"

namespace sepalg {

/// A path is a composable arrow sequence, stored innermost-first: the
/// element arrows[0] is applied first. Composition is right-to-left,
/// so (p after q) concatenates q's arrows before p's.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  friend bool operator<(const Path& a, const Path& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    return a.arrows < b.arrows;
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.target == b.target && a.arrows == b.arrows;
  }
};

/// Presentation of a quotient of a path algebra: quiver data plus
/// relations, each a linear combination of parallel paths.
template <class F>
struct QuiverPresentation {
  struct Arrow {
    int source;
    int target;
  };
  struct RelationTerm {
    typename F::Elem coeff;
    std::vector<int> arrows;  // innermost-first arrow indices
  };
  using Relation = std::vector<RelationTerm>;

  F fld;
  int vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  // Surviving-dimension bound before the quotient is declared
  // infinite-dimensional; 0 selects the default 2*(vertices+arrows)^2.
  int dim_bound = 0;

  int effective_dim_bound() const {
    if (dim_bound > 0) return dim_bound;
    int n = vertices + static_cast<int>(arrows.size());
    return 2 * n * n;
  }
};

template <class F>
struct PathAlgebra {
  AlgebraRef<F> algebra;
  std::vector<Path> basis;          // residue-class representatives
  std::vector<int> trivial_paths;   // basis indices of the vertex idempotents
};

namespace detail {

template <class F>
Path relation_term_path(const QuiverPresentation<F>& q,
                        const std::vector<int>& arrow_seq, int fallback_vertex) {
  Path p;
  if (arrow_seq.empty()) {
    p.source = p.target = fallback_vertex;
    return p;
  }
  p.arrows = arrow_seq;
  p.source = q.arrows[arrow_seq.front()].source;
  p.target = q.arrows[arrow_seq.back()].target;
  for (std::size_t i = 0; i + 1 < arrow_seq.size(); ++i)
    check(q.arrows[arrow_seq[i]].target == q.arrows[arrow_seq[i + 1]].source,
          "QuiverPresentation: relation term is not a composable path");
  return p;
}

}  // namespace detail

/// kQ/I with basis the residue classes of paths that survive linear
/// reduction by the relation ideal. Enumeration proceeds by path length
/// and stops at the first length contributing no new class; if the
/// surviving dimension exceeds the configured bound first, the quotient
/// is declared infinite-dimensional.
template <class F>
PathAlgebra<F> path_algebra(const QuiverPresentation<F>& q) {
  F fld = q.fld;
  check(q.vertices >= 1, "path_algebra: need at least one vertex");
  for (const auto& a : q.arrows)
    check(a.source >= 0 && a.source < q.vertices && a.target >= 0 && a.target < q.vertices,
          "path_algebra: arrow endpoint out of range");

  // Relations: all terms must be parallel. Record each as (path, coeff).
  struct Rel {
    int source, target;
    std::vector<std::pair<Path, typename F::Elem>> terms;
    int max_len;
  };
  std::vector<Rel> rels;
  for (const auto& r : q.relations) {
    check(!r.empty(), "path_algebra: empty relation");
    Rel rel;
    rel.max_len = 0;
    bool first = true;
    for (const auto& term : r) {
      // a length-0 term needs a vertex; infer it from a positive-length sibling
      int fallback = -1;
      for (const auto& t2 : r)
        if (!t2.arrows.empty()) {
          fallback = q.arrows[t2.arrows.front()].source;
          break;
        }
      check(!term.arrows.empty() || fallback >= 0,
            "path_algebra: relation of trivial paths only is not supported");
      Path p = detail::relation_term_path(q, term.arrows, fallback);
      if (first) {
        rel.source = p.source;
        rel.target = p.target;
        first = false;
      } else {
        check(p.source == rel.source && p.target == rel.target,
              "path_algebra: relation terms are not parallel");
      }
      rel.max_len = std::max(rel.max_len, p.length());
      rel.terms.emplace_back(p, term.coeff);
    }
    rels.push_back(std::move(rel));
  }
  int max_rel_len = 1;
  for (const auto& r : rels) max_rel_len = std::max(max_rel_len, r.max_len);

  // Enumerate paths by length.
  std::vector<Path> paths;                 // all paths, length-major order
  std::map<Path, int> path_index;
  std::vector<std::vector<int>> by_length; // indices per length
  auto add_path = [&](Path p) {
    int id = static_cast<int>(paths.size());
    path_index[p] = id;
    int len = p.length();
    if (static_cast<int>(by_length.size()) <= len) by_length.resize(len + 1);
    by_length[len].push_back(id);
    paths.push_back(std::move(p));
  };
  for (int v = 0; v < q.vertices; ++v) add_path(Path{v, v, {}});

  const int bound = q.effective_dim_bound();
  // hard stop: lengths beyond this mean the enumeration itself is diverging
  const int max_len_guard = bound + max_rel_len + 2;

  std::vector<int> surviving;  // indices of basis paths
  RowSpan<F> reduced(fld, 1);  // rebuilt each round
  int settled_len = -1;

  for (int len = 0;; ++len) {
    check(len <= max_len_guard, "path_algebra: infinite-dimensional (length guard)");
    if (len > 0) {
      if (static_cast<int>(by_length.size()) <= len) by_length.resize(len + 1);
      for (int pi : by_length[len - 1]) {
        Path base = paths[pi];
        for (int ai = 0; ai < static_cast<int>(q.arrows.size()); ++ai) {
          if (q.arrows[ai].source != base.target) continue;
          Path ext = base;
          ext.arrows.push_back(ai);
          ext.target = q.arrows[ai].target;
          add_path(std::move(ext));
        }
      }
    }
    int n = static_cast<int>(paths.size());
    // Ideal span within paths of length <= len: u * r * w for all paths u, w
    // composable with the relation, with every term of total length <= len.
    RowSpan<F> ideal(fld, n);
    for (const auto& rel : rels) {
      for (int ui = 0; ui < n; ++ui) {
        const Path& u = paths[ui];  // applied after the relation
        if (u.source != rel.target) continue;
        for (int wi = 0; wi < n; ++wi) {
          const Path& w = paths[wi];  // applied before the relation
          if (w.target != rel.source) continue;
          int extra = u.length() + w.length();
          if (extra + rel.max_len > len) continue;
          Vec<F> v(n, fld.zero());
          bool ok = true;
          for (const auto& [p, coeff] : rel.terms) {
            Path whole;
            whole.source = w.source;
            whole.target = u.target;
            whole.arrows = w.arrows;
            whole.arrows.insert(whole.arrows.end(), p.arrows.begin(), p.arrows.end());
            whole.arrows.insert(whole.arrows.end(), u.arrows.begin(), u.arrows.end());
            auto it = path_index.find(whole);
            if (it == path_index.end()) { ok = false; break; }
            v[it->second] += coeff;
          }
          if (ok) ideal.add(v);
        }
      }
    }
    // Surviving classes, processed in length-major path order.
    RowSpan<F> span(fld, n);
    std::vector<int> surv;
    int new_at_top = 0;
    for (int pi = 0; pi < n; ++pi) {
      Vec<F> v(n, fld.zero());
      v[pi] = fld.one();
      Vec<F> r = ideal.residual(v);
      if (span.add(r)) {
        surv.push_back(pi);
        if (paths[pi].length() == len) ++new_at_top;
      }
    }
    check(static_cast<int>(surv.size()) <= bound,
          "path_algebra: infinite-dimensional (dimension bound exceeded)");
    if (new_at_top == 0 && len >= max_rel_len) {
      surviving = std::move(surv);
      reduced = std::move(ideal);
      settled_len = len;
      break;
    }
  }

  // Coordinates of reduced path vectors in the surviving-class basis.
  int n = static_cast<int>(paths.size());
  int dim = static_cast<int>(surviving.size());
  Mat<F> surv_mat(fld, dim, n);
  for (int s = 0; s < dim; ++s) {
    Vec<F> v(n, fld.zero());
    v[surviving[s]] = fld.one();
    Vec<F> r = reduced.residual(v);
    for (int j = 0; j < n; ++j) surv_mat.at(s, j) = r[j];
  }
  Mat<F> surv_t = surv_mat.transpose();  // n x dim, columns are class reps
  auto class_coords = [&](const Vec<F>& v) -> Vec<F> {
    Vec<F> r = reduced.residual(v);
    SolveResult<F> sol = solve(surv_t, r);
    check(sol.particular.has_value(), "path_algebra: reduction left the class span");
    return *sol.particular;
  };

  // Reduce an arbitrary path (maybe longer than enumerated) to class coords.
  std::map<Path, Vec<F>> memo;
  std::function<Vec<F>(const Path&)> reduce_path = [&](const Path& p) -> Vec<F> {
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    Vec<F> out(dim, fld.zero());
    if (p.length() <= settled_len) {
      auto pit = path_index.find(p);
      check(pit != path_index.end(), "path_algebra: unenumerated short path");
      Vec<F> v(n, fld.zero());
      v[pit->second] = fld.one();
      out = class_coords(v);
    } else {
      // rewrite the leading settled_len-segment and recurse
      Path head, tail;
      tail.arrows.assign(p.arrows.begin(), p.arrows.begin() + settled_len);
      tail.source = p.source;
      tail.target = q.arrows[tail.arrows.back()].target;
      head.arrows.assign(p.arrows.begin() + settled_len, p.arrows.end());
      head.source = tail.target;
      head.target = p.target;
      Vec<F> tail_classes = reduce_path(tail);
      for (int s = 0; s < dim; ++s) {
        if (tail_classes[s].is_zero()) continue;
        Path glued;
        glued.source = paths[surviving[s]].source;
        glued.arrows = paths[surviving[s]].arrows;
        glued.arrows.insert(glued.arrows.end(), head.arrows.begin(), head.arrows.end());
        glued.target = p.target;
        check(paths[surviving[s]].target == head.source,
              "path_algebra: rewrite produced a non-composable splice");
        Vec<F> sub = reduce_path(glued);
        for (int k = 0; k < dim; ++k) out[k] += tail_classes[s] * sub[k];
      }
    }
    memo[p] = out;
    return out;
  };

  // Structure constants by concatenating class representatives.
  std::vector<typename F::Elem> st(static_cast<std::size_t>(dim) * dim * dim, fld.zero());
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Path& pi = paths[surviving[i]];
      const Path& pj = paths[surviving[j]];
      // product (class i) * (class j) = pi after pj
      if (pj.target != pi.source) continue;  // non-composable: zero
      Path prod;
      prod.source = pj.source;
      prod.target = pi.target;
      prod.arrows = pj.arrows;
      prod.arrows.insert(prod.arrows.end(), pi.arrows.begin(), pi.arrows.end());
      Vec<F> cls = reduce_path(prod);
      for (int k = 0; k < dim; ++k)
        st[(static_cast<std::size_t>(i) * dim + j) * dim + k] = cls[k];
    }

  Vec<F> unit(dim, fld.zero());
  std::vector<int> trivial;
  for (int s = 0; s < dim; ++s)
    if (paths[surviving[s]].length() == 0) trivial.push_back(s);
  // unit = sum of trivial path classes; express via reduce_path to be safe
  for (int v = 0; v < q.vertices; ++v) {
    Path e{v, v, {}};
    Vec<F> cls = reduce_path(e);
    for (int k = 0; k < dim; ++k) unit[k] += cls[k];
  }

  PathAlgebra<F> out;
  out.algebra = make_algebra<F>(fld, dim, std::move(st), std::move(unit));
  for (int s : surviving) out.basis.push_back(paths[s]);
  out.trivial_paths = trivial;
  return out;
}

}  // namespace sepalg
