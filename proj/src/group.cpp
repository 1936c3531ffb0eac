#include "rbrack/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rbrack/census_util.hpp"

namespace rbrack {

void OperatorMap::validate(int domain, int codomain) const {
  if (domain_size() != domain)
    throw std::invalid_argument("OperatorMap: wrong domain size");
  for (Elt v : map)
    if (v < 0 || v >= codomain)
      throw std::invalid_argument("OperatorMap: value out of codomain");
}

OperatorMap OperatorMap::constant(int n, Elt p) {
  return OperatorMap{std::vector<Elt>(n, p)};
}

OperatorMap OperatorMap::identity(int n) {
  OperatorMap b;
  b.map.resize(n);
  std::iota(b.map.begin(), b.map.end(), 0);
  return b;
}

Elt FiniteGroup::pow(Elt a, long long e) const {
  Elt base_elt = e >= 0 ? a : inv(a);
  long long k = e >= 0 ? e : -e;
  Elt r = identity;
  for (long long i = 0; i < k; ++i) r = mul(r, base_elt);
  return r;
}

FiniteGroup validate_group(const CayleyTable& t) {
  t.validate();
  const int n = t.n;
  Elt e = -1;
  for (Elt c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (Elt x = 0; x < n && ok; ++x)
      ok = t.op(c, x) == x && t.op(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) throw std::invalid_argument("validate_group: no identity element");

  std::vector<Elt> inv(n, -1);
  for (Elt x = 0; x < n; ++x) {
    for (Elt y = 0; y < n; ++y)
      if (t.op(x, y) == e && t.op(y, x) == e) { inv[x] = y; break; }
    if (inv[x] < 0)
      throw std::invalid_argument("validate_group: no inverse for element " +
                                  std::to_string(x));
  }
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      for (Elt c = 0; c < n; ++c)
        if (t.op(t.op(a, b), c) != t.op(a, t.op(b, c)))
          throw std::invalid_argument(
              "validate_group: associativity fails at (" + std::to_string(a) +
              "," + std::to_string(b) + "," + std::to_string(c) + ")");
  return FiniteGroup{t, e, std::move(inv)};
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be positive");
  CayleyTable t;
  t.n = n;
  t.cells.resize(static_cast<size_t>(n) * n);
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b) t.op(a, b) = (a + b) % n;
  return validate_group(t);
}

FiniteGroup symmetric_group(int n) {
  std::vector<Elt> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<Elt>> perms;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  const int m = static_cast<int>(perms.size());
  auto index_of = [&perms](const std::vector<Elt>& p) {
    return static_cast<Elt>(std::lower_bound(perms.begin(), perms.end(), p) -
                            perms.begin());
  };
  CayleyTable t;
  t.n = m;
  t.cells.resize(static_cast<size_t>(m) * m);
  for (Elt a = 0; a < m; ++a)
    for (Elt b = 0; b < m; ++b) {
      // (a.b)(x) = a(b(x))
      std::vector<Elt> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t.op(a, b) = index_of(c);
    }
  return validate_group(t);
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n1 = g1.n(), n2 = g2.n(), n = n1 * n2;
  CayleyTable t;
  t.n = n;
  t.cells.resize(static_cast<size_t>(n) * n);
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      t.op(a, b) = g1.mul(a / n2, b / n2) * n2 + g2.mul(a % n2, b % n2);
  return validate_group(t);
}

namespace {

bool group_rb_holds_at(const FiniteGroup& g, const OperatorMap& b, int weight,
                       Elt x, Elt y) {
  Elt bx = b(x);
  Elt lhs = g.mul(bx, b(y));
  Elt rhs;
  if (weight == 1)
    rhs = b(g.mul(g.mul(g.mul(x, bx), y), g.inv(bx)));
  else
    rhs = b(g.mul(g.mul(g.mul(bx, y), g.inv(bx)), x));
  return lhs == rhs;
}

}  // namespace

GroupRBReport check_group_rb(const FiniteGroup& g, const OperatorMap& b, int weight) {
  if (weight != 1 && weight != -1)
    throw std::invalid_argument("check_group_rb: weight must be +1 or -1");
  b.validate(g.n(), g.n());
  GroupRBReport r;
  r.weight = weight;
  r.holds = true;
  for (Elt x = 0; x < g.n() && r.holds; ++x)
    for (Elt y = 0; y < g.n(); ++y)
      if (!group_rb_holds_at(g, b, weight, x, y)) {
        r.holds = false;
        r.witness = {x, y};
        break;
      }
  return r;
}

std::vector<OperatorMap> search_group_rb(const FiniteGroup& g, int weight,
                                         long long max_space, int workers) {
  return enumerate_maps(
      g.n(), g.n(),
      [&g, weight](const OperatorMap& b) {
        for (Elt x = 0; x < g.n(); ++x)
          for (Elt y = 0; y < g.n(); ++y)
            if (!group_rb_holds_at(g, b, weight, x, y)) return false;
        return true;
      },
      max_space, workers);
}

DerivedGroup derived_group_op(const FiniteGroup& g, const OperatorMap& b) {
  if (!check_group_rb(g, b, 1).holds)
    throw std::invalid_argument("derived_group_op: B is not a weight-1 RB-operator");
  const int n = g.n();
  CayleyTable t;
  t.n = n;
  t.cells.resize(static_cast<size_t>(n) * n);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      t.op(x, y) = g.mul(g.mul(g.mul(x, b(x)), y), g.inv(b(x)));
  DerivedGroup out;
  out.group = validate_group(t);
  out.b_is_rb_on_derived = check_group_rb(out.group, b, 1).holds;
  out.b_is_homomorphism = true;
  for (Elt x = 0; x < n && out.b_is_homomorphism; ++x)
    for (Elt y = 0; y < n; ++y)
      if (b(out.group.mul(x, y)) != g.mul(b(x), b(y))) {
        out.b_is_homomorphism = false;
        break;
      }
  return out;
}

bool check_relative_group_rb(const FiniteGroup& h, const FiniteGroup& g,
                             const std::vector<Perm>& phi, const OperatorMap& b) {
  if (static_cast<int>(phi.size()) != g.n())
    throw std::invalid_argument("check_relative_group_rb: phi must have one entry per element of G");
  for (const Perm& p : phi) {
    if (p.size() != h.n())
      throw std::invalid_argument("check_relative_group_rb: phi entry has wrong degree");
    for (Elt x = 0; x < h.n(); ++x)
      for (Elt y = 0; y < h.n(); ++y)
        if (p.apply(h.mul(x, y)) != h.mul(p.apply(x), p.apply(y)))
          throw std::invalid_argument("check_relative_group_rb: phi entry is not an automorphism of H");
  }
  // phi must be a group homomorphism G -> Aut(H)
  for (Elt a = 0; a < g.n(); ++a)
    for (Elt c = 0; c < g.n(); ++c) {
      // phi_{ac}(x) = phi_a(phi_c(x))
      Perm composed = phi[c].then(phi[a]);
      if (!(phi[g.mul(a, c)] == composed))
        throw std::invalid_argument(
            "check_relative_group_rb: phi is not a homomorphism (witness " +
            std::to_string(a) + "," + std::to_string(c) + ")");
    }
  b.validate(h.n(), g.n());
  for (Elt h1 = 0; h1 < h.n(); ++h1)
    for (Elt h2 = 0; h2 < h.n(); ++h2)
      if (g.mul(b(h1), b(h2)) != b(h.mul(h1, phi[b(h1)].apply(h2))))
        return false;
  return true;
}

std::vector<Elt> center(const FiniteGroup& g) {
  std::vector<Elt> out;
  for (Elt z = 0; z < g.n(); ++z) {
    bool ok = true;
    for (Elt x = 0; x < g.n() && ok; ++x) ok = g.mul(z, x) == g.mul(x, z);
    if (ok) out.push_back(z);
  }
  return out;
}

std::vector<Elt> centralizer(const FiniteGroup& g, Elt a) {
  std::vector<Elt> out;
  for (Elt x = 0; x < g.n(); ++x)
    if (g.mul(x, a) == g.mul(a, x)) out.push_back(x);
  return out;
}

std::vector<Perm> group_automorphisms(const FiniteGroup& g, int max_n) {
  // the rack-table search works verbatim on group tables
  std::vector<Perm> all = automorphisms(g.base, max_n);
  return all;
}

OperatorMap rb_b0(const FiniteGroup& g) {
  return OperatorMap::constant(g.n(), g.identity);
}

OperatorMap rb_bm1(const FiniteGroup& g) {
  return OperatorMap{g.inverses};
}

}  // namespace rbrack
