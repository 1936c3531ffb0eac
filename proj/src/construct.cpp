#include "rbrack/construct.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace rbrack {

namespace {

CayleyTable blank(int n) {
  CayleyTable t;
  t.n = n;
  t.cells.assign(static_cast<size_t>(n) * n, 0);
  return t;
}

}  // namespace

CayleyTable trivial_quandle(int n) {
  if (n < 1) throw std::invalid_argument("trivial_quandle: n must be positive");
  CayleyTable t = blank(n);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) t.op(x, y) = x;
  return t;
}

CayleyTable dihedral_quandle(int n) {
  if (n < 1) throw std::invalid_argument("dihedral_quandle: n must be positive");
  CayleyTable t = blank(n);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) t.op(x, y) = ((2 * y - x) % n + n) % n;
  return t;
}

CayleyTable conj_quandle(const FiniteGroup& g, long long m) {
  CayleyTable t = blank(g.n());
  for (Elt b = 0; b < g.n(); ++b) {
    Elt bm = g.pow(b, m);
    Elt bmi = g.inv(bm);
    for (Elt a = 0; a < g.n(); ++a) t.op(a, b) = g.mul(g.mul(bmi, a), bm);
  }
  return t;
}

CayleyTable core_quandle(const FiniteGroup& g) {
  CayleyTable t = blank(g.n());
  for (Elt a = 0; a < g.n(); ++a)
    for (Elt b = 0; b < g.n(); ++b) t.op(a, b) = g.mul(g.mul(b, g.inv(a)), b);
  return t;
}

CayleyTable alexander_quandle(const FiniteGroup& g, const Perm& phi) {
  if (phi.size() != g.n())
    throw std::invalid_argument("alexander_quandle: phi has wrong degree");
  for (Elt x = 0; x < g.n(); ++x)
    for (Elt y = 0; y < g.n(); ++y)
      if (phi.apply(g.mul(x, y)) != g.mul(phi.apply(x), phi.apply(y)))
        throw std::invalid_argument("alexander_quandle: phi is not an automorphism");
  CayleyTable t = blank(g.n());
  for (Elt a = 0; a < g.n(); ++a)
    for (Elt b = 0; b < g.n(); ++b)
      t.op(a, b) = g.mul(phi.apply(g.mul(a, g.inv(b))), b);
  return t;
}

CayleyTable product_rack(const CayleyTable& t1, const CayleyTable& t2) {
  const int n1 = t1.n, n2 = t2.n, n = n1 * n2;
  CayleyTable t = blank(n);
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      t.op(a, b) = t1.op(a / n2, b / n2) * n2 + t2.op(a % n2, b % n2);
  return t;
}

PhiAction PhiAction::all_identity(int a_size, int x_size) {
  PhiAction phi;
  phi.perms.assign(a_size, Perm::identity(x_size));
  return phi;
}

PhiAction PhiAction::inner(const CayleyTable& x) {
  PhiAction phi;
  for (Elt a = 0; a < x.n; ++a) phi.perms.push_back(inner_automorphism(x, a));
  return phi;
}

void validate_phi(const PhiAction& phi, const CayleyTable& a, const CayleyTable& x) {
  if (phi.domain_size() != a.n)
    throw std::invalid_argument("PhiAction: wrong domain size");
  for (const Perm& p : phi.perms) {
    if (p.size() != x.n)
      throw std::invalid_argument("PhiAction: permutation degree mismatch");
    for (Elt u = 0; u < x.n; ++u)
      for (Elt v = 0; v < x.n; ++v)
        if (p.apply(x.op(u, v)) != x.op(p.apply(u), p.apply(v)))
          throw std::invalid_argument("PhiAction: entry is not an automorphism of X");
  }
  // rack homomorphism into Conj(Aut(X)): Phi_{a*b} = Phi_b^-1 Phi_a Phi_b
  for (Elt u = 0; u < a.n; ++u)
    for (Elt v = 0; v < a.n; ++v) {
      Perm expected = phi.perms[v].inverse().then(phi.perms[u]).then(phi.perms[v]);
      if (!(phi.perms[a.op(u, v)] == expected))
        throw std::invalid_argument(
            "PhiAction: Phi_{a*b} != Phi_b^-1 Phi_a Phi_b at (" +
            std::to_string(u) + "," + std::to_string(v) + ")");
    }
}

CayleyTable semidirect_rack(const CayleyTable& a, const CayleyTable& x,
                            const PhiAction& phi) {
  validate_phi(phi, a, x);
  const int n = a.n * x.n;
  CayleyTable t = blank(n);
  for (Elt u = 0; u < a.n; ++u)
    for (Elt p = 0; p < x.n; ++p)
      for (Elt v = 0; v < a.n; ++v)
        for (Elt q = 0; q < x.n; ++q)
          t.op(u * x.n + p, v * x.n + q) = a.op(u, v) * x.n + phi.act(p, v);
  return t;
}

CayleyTable conj_quandle_of_perms(const std::vector<Perm>& elems, long long m) {
  const int n = static_cast<int>(elems.size());
  std::map<Perm, Elt> index;
  for (Elt i = 0; i < n; ++i) index[elems[i]] = i;
  auto pow = [](const Perm& p, long long e) {
    Perm base = e >= 0 ? p : p.inverse();
    long long k = e >= 0 ? e : -e;
    Perm r = Perm::identity(p.size());
    for (long long i = 0; i < k; ++i) r = r.then(base);
    return r;
  };
  CayleyTable t = blank(n);
  for (Elt f = 0; f < n; ++f)
    for (Elt g = 0; g < n; ++g) {
      Perm gm = pow(elems[g], m);
      Perm r = gm.inverse().then(elems[f]).then(gm);
      auto it = index.find(r);
      if (it == index.end())
        throw std::invalid_argument("conj_quandle_of_perms: list is not closed under conjugation");
      t.op(f, g) = it->second;
    }
  return t;
}

CayleyTable holomorph(const CayleyTable& x, int max_n) {
  std::vector<Perm> auts = automorphisms(x, max_n);
  CayleyTable a = conj_quandle_of_perms(auts, 1);
  PhiAction phi;
  phi.perms = auts;
  return semidirect_rack(a, x, phi);
}

CayleyTable union_rack(const CayleyTable& t1, const CayleyTable& t2,
                       const UnionSpec& spec) {
  const int n1 = t1.n, n2 = t2.n;
  if (static_cast<int>(spec.sigma.size()) != n1 ||
      static_cast<int>(spec.tau.size()) != n2)
    throw std::invalid_argument("union_rack: sigma/tau sizes do not match the carriers");
  auto check_hom = [](const std::vector<Perm>& f, const CayleyTable& dom,
                      int target_deg, const char* name) {
    for (const Perm& p : f)
      if (p.size() != target_deg)
        throw std::invalid_argument(std::string("union_rack: ") + name +
                                    " permutation degree mismatch");
    // rack homomorphism into Conj_{-1}(Aut): f_{x*y} = f_y f_x f_y^-1
    // (left-function composition)
    for (Elt x = 0; x < dom.n; ++x)
      for (Elt y = 0; y < dom.n; ++y) {
        Perm expected = f[y].inverse().then(f[x]).then(f[y]);
        if (!(f[dom.op(x, y)] == expected))
          throw std::invalid_argument(std::string("union_rack: ") + name +
                                      " is not a homomorphism into Conj_{-1}(Aut) at (" +
                                      std::to_string(x) + "," + std::to_string(y) + ")");
      }
  };
  // sigma entries must be automorphisms of X2, tau entries of X1
  auto check_auto = [](const std::vector<Perm>& f, const CayleyTable& target,
                       const char* name) {
    for (const Perm& p : f)
      for (Elt u = 0; u < target.n; ++u)
        for (Elt v = 0; v < target.n; ++v)
          if (p.apply(target.op(u, v)) != target.op(p.apply(u), p.apply(v)))
            throw std::invalid_argument(std::string("union_rack: ") + name +
                                        " entry is not an automorphism");
  };
  check_auto(spec.sigma, t2, "sigma");
  check_auto(spec.tau, t1, "tau");
  check_hom(spec.sigma, t1, n2, "sigma");
  check_hom(spec.tau, t2, n1, "tau");

  // compatibility (i): tau_z(x) * y = tau_{sigma_y(z)}(x * y), x,y in X1, z in X2
  for (Elt x = 0; x < n1; ++x)
    for (Elt y = 0; y < n1; ++y)
      for (Elt z = 0; z < n2; ++z)
        if (t1.op(spec.tau[z].apply(x), y) !=
            spec.tau[spec.sigma[y].apply(z)].apply(t1.op(x, y)))
          throw std::invalid_argument("union_rack: condition (i) fails at (" +
                                      std::to_string(x) + "," + std::to_string(y) +
                                      "," + std::to_string(z) + ")");
  // compatibility (ii): sigma_z(x) o y = sigma_{tau_y(z)}(x o y), x,y in X2, z in X1
  for (Elt x = 0; x < n2; ++x)
    for (Elt y = 0; y < n2; ++y)
      for (Elt z = 0; z < n1; ++z)
        if (t2.op(spec.sigma[z].apply(x), y) !=
            spec.sigma[spec.tau[y].apply(z)].apply(t2.op(x, y)))
          throw std::invalid_argument("union_rack: condition (ii) fails at (" +
                                      std::to_string(x) + "," + std::to_string(y) +
                                      "," + std::to_string(z) + ")");

  const int n = n1 + n2;
  CayleyTable t = blank(n);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      if (x < n1 && y < n1)
        t.op(x, y) = t1.op(x, y);
      else if (x >= n1 && y >= n1)
        t.op(x, y) = n1 + t2.op(x - n1, y - n1);
      else if (x < n1)  // y in X2
        t.op(x, y) = spec.tau[y - n1].apply(x);
      else  // x in X2, y in X1
        t.op(x, y) = n1 + spec.sigma[y].apply(x - n1);
    }
  return t;
}

CayleyTable b_conjugation(const FiniteGroup& g, const OperatorMap& b) {
  b.validate(g.n(), g.n());
  CayleyTable t = blank(g.n());
  for (Elt x = 0; x < g.n(); ++x)
    for (Elt y = 0; y < g.n(); ++y)
      t.op(x, y) = g.mul(g.mul(b(y), x), g.inv(b(y)));
  return t;
}

CayleyTable b_core(const FiniteGroup& g, const OperatorMap& b) {
  b.validate(g.n(), g.n());
  CayleyTable t = blank(g.n());
  for (Elt x = 0; x < g.n(); ++x)
    for (Elt y = 0; y < g.n(); ++y)
      t.op(x, y) = g.mul(g.mul(b(y), g.inv(x)), b(y));
  return t;
}

ConstrHypothesesReport constr_hypotheses(const FiniteGroup& g, const OperatorMap& b) {
  if (!check_group_rb(g, b, 1).holds)
    throw std::invalid_argument("constr_hypotheses: B is not a weight-1 RB-operator");
  ConstrHypothesesReport r;
  std::vector<Elt> z = center(g);
  auto central = [&z](Elt x) { return std::find(z.begin(), z.end(), x) != z.end(); };

  r.h1 = true;
  for (Elt x = 0; x < g.n(); ++x)
    if (!central(g.mul(g.inv(b(x)), x))) { r.h1 = false; break; }
  r.h2 = true;
  for (Elt a = 0; a < g.n(); ++a)
    if (g.mul(b(a), a) != g.mul(a, b(a))) { r.h2 = false; break; }
  r.h3 = true;
  for (Elt bb = 0; bb < g.n() && r.h3; ++bb)
    for (Elt c = 0; c < g.n(); ++c) {
      Elt lhs = g.mul(g.mul(b(c), g.inv(b(bb))), b(c));
      Elt rhs = b(g.mul(g.mul(g.inv(b(c)), g.inv(b(bb))), g.inv(b(c))));
      if (lhs != rhs) { r.h3 = false; break; }
    }
  r.h4 = true;
  for (Elt a = 0; a < g.n(); ++a) {
    Elt ab = g.mul(a, b(a));
    if (g.mul(ab, ab) != g.identity) { r.h4 = false; break; }
  }

  r.conj_class = classify(b_conjugation(g, b));
  r.core_class = classify(b_core(g, b));
  r.conj_rack_implication_ok = !r.h1 || r.conj_class.is_rack;
  r.conj_quandle_implication_ok = !(r.h1 && r.h2) || r.conj_class.is_quandle;
  r.core_rack_implication_ok = !r.h3 || r.core_class.is_rack;
  r.core_quandle_implication_ok = !(r.h3 && r.h4) || r.core_class.is_quandle;
  return r;
}

CayleyTable multi_op(const std::vector<CayleyTable>& ts, int s, int t) {
  if (ts.empty()) throw std::invalid_argument("multi_op: empty family");
  const int n = ts[0].n;
  for (const auto& q : ts)
    if (q.n != n) throw std::invalid_argument("multi_op: carrier mismatch");
  if (s < 0 || t < 0 || s >= static_cast<int>(ts.size()) || t >= static_cast<int>(ts.size()))
    throw std::invalid_argument("multi_op: index out of range");
  CayleyTable out = blank(n);
  for (Elt g = 0; g < n; ++g)
    for (Elt h = 0; h < n; ++h)
      out.op(g, h) = ts[t].op(ts[s].op(g, h), h);
  return out;
}

bool is_multiquandle(const std::vector<CayleyTable>& ts) {
  if (ts.empty()) throw std::invalid_argument("is_multiquandle: empty family");
  const int n = ts[0].n;
  for (const auto& q : ts) {
    if (q.n != n) throw std::invalid_argument("is_multiquandle: carrier mismatch");
    if (!classify(q).is_quandle) return false;
  }
  for (size_t s = 0; s < ts.size(); ++s)
    for (size_t t = 0; t < ts.size(); ++t)
      for (Elt g = 0; g < n; ++g)
        for (Elt h = 0; h < n; ++h)
          for (Elt q = 0; q < n; ++q)
            if (ts[t].op(ts[s].op(g, h), q) !=
                ts[s].op(ts[t].op(g, q), ts[t].op(h, q)))
              return false;
  return true;
}

bool conj_multiquandle_centrality(const FiniteGroup& g,
                                  const std::vector<OperatorMap>& bs) {
  std::vector<Elt> z = center(g);
  auto central = [&z](Elt x) { return std::find(z.begin(), z.end(), x) != z.end(); };
  for (const auto& bt : bs)
    for (const auto& bsop : bs)
      for (Elt h = 0; h < g.n(); ++h)
        for (Elt q = 0; q < g.n(); ++q) {
          Elt btq = bt(q);
          Elt conj_h = g.mul(g.mul(btq, h), g.inv(btq));
          Elt w = g.mul(g.mul(g.mul(g.inv(btq), g.inv(bsop(conj_h))), btq), bsop(h));
          if (!central(w)) return false;
        }
  return true;
}

}  // namespace rbrack
