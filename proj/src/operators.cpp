#include "rbrack/operators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rbrack/census_util.hpp"

namespace rbrack {

std::string kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::RackRB: return "rb";
    case OperatorKind::AveragingRight: return "averaging-right";
    case OperatorKind::AveragingLeft: return "averaging-left";
    case OperatorKind::RelativeRB: return "relative-rb";
    case OperatorKind::RelativeAveraging: return "relative-averaging";
  }
  return "?";
}

std::optional<OperatorKind> kind_from_name(const std::string& s) {
  for (OperatorKind k : {OperatorKind::RackRB, OperatorKind::AveragingRight,
                         OperatorKind::AveragingLeft, OperatorKind::RelativeRB,
                         OperatorKind::RelativeAveraging})
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

bool is_rack_rb(const CayleyTable& x, const OperatorMap& b) {
  b.validate(x.n, x.n);
  for (Elt u = 0; u < x.n; ++u)
    for (Elt v = 0; v < x.n; ++v)
      if (x.op(b(u), b(v)) != b(x.op(x.op(u, b(v)), v))) return false;
  return true;
}

bool is_averaging(const CayleyTable& x, const OperatorMap& b, AveragingSide side) {
  b.validate(x.n, x.n);
  for (Elt u = 0; u < x.n; ++u)
    for (Elt v = 0; v < x.n; ++v) {
      Elt rhs = side == AveragingSide::Right ? b(x.op(u, b(v))) : b(x.op(b(u), v));
      if (x.op(b(u), b(v)) != rhs) return false;
    }
  return true;
}

bool is_relative_rb(const CayleyTable& x, const CayleyTable& a,
                    const PhiAction& phi, const OperatorMap& b) {
  validate_phi(phi, a, x);
  b.validate(x.n, a.n);
  for (Elt u = 0; u < x.n; ++u)
    for (Elt v = 0; v < x.n; ++v)
      if (a.op(b(u), b(v)) != b(x.op(phi.act(u, b(v)), v))) return false;
  return true;
}

bool graph_is_subrack(const CayleyTable& x, const CayleyTable& a,
                      const PhiAction& phi, const OperatorMap& b) {
  CayleyTable semi = semidirect_rack(a, x, phi);
  std::set<Elt> graph;
  for (Elt u = 0; u < x.n; ++u) graph.insert(b(u) * x.n + u);
  for (Elt p : graph)
    for (Elt q : graph)
      if (!graph.contains(semi.op(p, q))) return false;
  return true;
}

bool is_relative_averaging(const CayleyTable& x, const CayleyTable& a,
                           const PhiAction& phi, const OperatorMap& b) {
  validate_phi(phi, a, x);
  b.validate(x.n, a.n);
  bool pointwise = true;
  for (Elt u = 0; u < x.n && pointwise; ++u)
    for (Elt v = 0; v < x.n; ++v)
      if (a.op(b(u), b(v)) != b(phi.act(u, b(v)))) { pointwise = false; break; }
  if (pointwise != graph_is_subrack(x, a, phi, b))
    throw std::logic_error(
        "is_relative_averaging: pointwise verdict disagrees with the graph-subrack criterion");
  return pointwise;
}

DerivedRrbReport derived_rrb(const CayleyTable& x, const CayleyTable& a,
                             const PhiAction& phi, const OperatorMap& b) {
  if (!is_relative_rb(x, a, phi, b))
    throw std::invalid_argument("derived_rrb: B is not a relative RB-operator");
  DerivedRrbReport r;
  r.table.n = x.n;
  r.table.cells.assign(static_cast<size_t>(x.n) * x.n, 0);
  for (Elt u = 0; u < x.n; ++u)
    for (Elt v = 0; v < x.n; ++v)
      r.table.op(u, v) = x.op(phi.act(u, b(v)), v);

  r.compatibility = true;
  r.compatibility_remark = true;
  for (Elt u = 0; u < x.n; ++u)
    for (Elt v = 0; v < x.n; ++v)
      for (Elt w = 0; w < x.n; ++w) {
        Elt lhs = x.op(phi.act(phi.act(u, b(v)), b(w)), w);
        Elt m = x.op(phi.act(v, b(w)), w);  // (y Phi_{B(z)}) . z
        Elt rhs = x.op(phi.act(phi.act(u, b(w)), b(m)), phi.act(w, b(m)));
        Elt rhs_remark = phi.act(x.op(phi.act(u, b(w)), w), b(m));
        if (lhs != rhs) r.compatibility = false;
        if (lhs != rhs_remark) r.compatibility_remark = false;
      }

  r.classification = classify(r.table);
  r.quandle_fixed_point = true;
  for (Elt u = 0; u < x.n; ++u)
    if (phi.act(u, b(u)) != u) { r.quandle_fixed_point = false; break; }

  if (r.compatibility && !r.classification.is_rack)
    throw std::logic_error("derived_rrb: compatibility holds but (X, o) is not a rack");
  return r;
}

DerivedAveragingReport derived_averaging(const CayleyTable& x, const OperatorMap& b) {
  if (!is_averaging(x, b, AveragingSide::Right))
    throw std::invalid_argument("derived_averaging: B is not a right averaging operator");
  DerivedAveragingReport r;
  r.table.n = x.n;
  r.table.cells.assign(static_cast<size_t>(x.n) * x.n, 0);
  for (Elt u = 0; u < x.n; ++u)
    for (Elt v = 0; v < x.n; ++v) r.table.op(u, v) = x.op(u, b(v));

  r.classification = classify(r.table);
  r.fixed_points = true;
  for (Elt u = 0; u < x.n; ++u)
    if (x.op(u, b(u)) != u) { r.fixed_points = false; break; }
  r.quandle_iff_ok = r.classification.is_quandle == r.fixed_points;
  r.b_averaging_on_derived = is_averaging(r.table, b, AveragingSide::Right);
  r.b_homomorphism = is_homomorphism(b.map, r.table, x);
  return r;
}

OperatorCensus census(const CayleyTable& x, OperatorKind kind,
                      long long max_space, int workers) {
  if (kind == OperatorKind::RelativeRB || kind == OperatorKind::RelativeAveraging)
    throw std::invalid_argument("census: relative kinds need relative_census");
  OperatorCensus out;
  out.structure_hash = x.hash();
  out.kind = kind;
  out.space_size = map_space_size(x.n, x.n);
  out.operators = enumerate_maps(
      x.n, x.n,
      [&x, kind](const OperatorMap& b) {
        switch (kind) {
          case OperatorKind::RackRB: return is_rack_rb(x, b);
          case OperatorKind::AveragingRight:
            return is_averaging(x, b, AveragingSide::Right);
          case OperatorKind::AveragingLeft:
            return is_averaging(x, b, AveragingSide::Left);
          default: return false;
        }
      },
      max_space, workers);
  return out;
}

OperatorCensus relative_census(const CayleyTable& x, const CayleyTable& a,
                               const PhiAction& phi, OperatorKind kind,
                               long long max_space, int workers) {
  if (kind != OperatorKind::RelativeRB && kind != OperatorKind::RelativeAveraging)
    throw std::invalid_argument("relative_census: kind must be relative");
  validate_phi(phi, a, x);
  // the semidirect table is shared by every relative-averaging graph check
  CayleyTable semi = semidirect_rack(a, x, phi);
  OperatorCensus out;
  out.structure_hash = x.hash() + ":" + a.hash();
  out.kind = kind;
  out.space_size = map_space_size(a.n, x.n);
  out.operators = enumerate_maps(
      x.n, a.n,
      [&](const OperatorMap& b) {
        if (kind == OperatorKind::RelativeRB) {
          for (Elt u = 0; u < x.n; ++u)
            for (Elt v = 0; v < x.n; ++v)
              if (a.op(b(u), b(v)) != b(x.op(phi.act(u, b(v)), v))) return false;
          return true;
        }
        for (Elt u = 0; u < x.n; ++u)
          for (Elt v = 0; v < x.n; ++v)
            if (a.op(b(u), b(v)) != b(phi.act(u, b(v)))) return false;
        return true;
      },
      max_space, workers);
  return out;
}

OperatorMap product_operator(const OperatorMap& b1, const OperatorMap& b2, int n2) {
  OperatorMap b;
  b.map.resize(static_cast<size_t>(b1.domain_size()) * n2);
  for (Elt u = 0; u < b1.domain_size(); ++u)
    for (Elt v = 0; v < n2; ++v)
      b.map[u * n2 + v] = b1(u) * n2 + b2(v);
  return b;
}

OperatorMap projection_operator(const CayleyTable& x1, const CayleyTable& x2,
                                int which, Elt fixed) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("projection_operator: which must be 1 or 2");
  const int n2 = x2.n;
  OperatorMap b;
  b.map.resize(static_cast<size_t>(x1.n) * n2);
  for (Elt u = 0; u < x1.n; ++u)
    for (Elt v = 0; v < n2; ++v)
      b.map[u * n2 + v] = which == 1 ? u * n2 + fixed : fixed * n2 + v;
  return b;
}

std::vector<Elt> image_subrack(const CayleyTable& x, const OperatorMap& b) {
  b.validate(x.n, x.n);
  std::set<Elt> im(b.map.begin(), b.map.end());
  std::vector<Elt> out(im.begin(), im.end());
  if (!is_subrack(x, out))
    throw std::logic_error("image_subrack: Im B is not closed under *");
  return out;
}

UnionOperatorReport union_operator(const CayleyTable& t1, const CayleyTable& t2,
                                   const UnionSpec& spec, const OperatorMap& b1,
                                   const OperatorMap& b2) {
  b1.validate(t1.n, t1.n);
  b2.validate(t2.n, t2.n);
  CayleyTable u = union_rack(t1, t2, spec);
  UnionOperatorReport r;
  r.glued.map.resize(u.n);
  for (Elt z = 0; z < t1.n; ++z) r.glued.map[z] = b1(z);
  for (Elt z = 0; z < t2.n; ++z) r.glued.map[t1.n + z] = t1.n + b2(z);

  r.paper_condition_tau = true;
  r.paper_condition_sigma = true;
  for (Elt z1 = 0; z1 < t1.n; ++z1)
    for (Elt z2 = 0; z2 < t2.n; ++z2) {
      if (spec.tau[b2(z2)].apply(b1(z1)) != b1(spec.tau[b2(z2)].apply(z1)))
        r.paper_condition_tau = false;
      if (spec.sigma[b1(z1)].apply(b2(z2)) != b2(spec.sigma[b1(z1)].apply(z2)))
        r.paper_condition_sigma = false;
    }
  r.direct_averaging = is_averaging(u, r.glued, AveragingSide::Right);
  return r;
}

}  // namespace rbrack
