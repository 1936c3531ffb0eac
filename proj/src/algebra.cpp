#include "rbrack/algebra.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rbrack {

namespace mp = boost::multiprecision;

Field Field::prime(std::int64_t p) {
  if (p < 2 || p >= (1ll << 31))
    throw std::invalid_argument("Field::prime: p must be a prime below 2^31");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("Field::prime: p is not prime");
  return {Kind::Fp, p};
}

namespace {

Scalar reduce(const Field& f, Rational v) {
  if (f.kind == Field::Kind::Q) return {std::move(v)};
  // v is an integer for F_p arithmetic by construction
  mp::cpp_int num = mp::numerator(v);
  mp::cpp_int r = num % f.p;
  if (r < 0) r += f.p;
  return {Rational(r)};
}

}  // namespace

Scalar fld_from_int(const Field& f, std::int64_t k) { return reduce(f, Rational(k)); }

Scalar fld_add(const Field& f, const Scalar& a, const Scalar& b) {
  return reduce(f, a.v + b.v);
}
Scalar fld_sub(const Field& f, const Scalar& a, const Scalar& b) {
  return reduce(f, a.v - b.v);
}
Scalar fld_mul(const Field& f, const Scalar& a, const Scalar& b) {
  return reduce(f, a.v * b.v);
}
Scalar fld_neg(const Field& f, const Scalar& a) { return reduce(f, -a.v); }

bool fld_is_zero(const Scalar& a) { return a.v == 0; }

std::string fld_to_string(const Field& f, const Scalar& a) {
  if (f.kind == Field::Kind::Fp) return mp::numerator(a.v).str();
  if (mp::denominator(a.v) == 1) return mp::numerator(a.v).str();
  return mp::numerator(a.v).str() + "/" + mp::denominator(a.v).str();
}

Scalar fld_parse(const Field& f, const std::string& s) {
  auto slash = s.find('/');
  Rational v;
  if (slash == std::string::npos)
    v = Rational(mp::cpp_int(s));
  else
    v = Rational(mp::cpp_int(s.substr(0, slash)), mp::cpp_int(s.substr(slash + 1)));
  return reduce(f, std::move(v));
}

AlgebraElement AlgebraElement::basis(const Field& f, Elt i) {
  return {f, {{i, fld_from_int(f, 1)}}};
}

AlgebraElement elem_add(const AlgebraElement& u, const AlgebraElement& v) {
  if (!(u.field == v.field)) throw std::invalid_argument("elem_add: field mismatch");
  AlgebraElement out{u.field, {}};
  size_t i = 0, j = 0;
  while (i < u.terms.size() || j < v.terms.size()) {
    if (j == v.terms.size() || (i < u.terms.size() && u.terms[i].first < v.terms[j].first)) {
      out.terms.push_back(u.terms[i++]);
    } else if (i == u.terms.size() || v.terms[j].first < u.terms[i].first) {
      out.terms.push_back(v.terms[j++]);
    } else {
      Scalar c = fld_add(u.field, u.terms[i].second, v.terms[j].second);
      if (!fld_is_zero(c)) out.terms.push_back({u.terms[i].first, c});
      ++i;
      ++j;
    }
  }
  return out;
}

AlgebraElement elem_scale(const Scalar& c, const AlgebraElement& u) {
  AlgebraElement out{u.field, {}};
  if (fld_is_zero(c)) return out;
  for (const auto& [idx, coeff] : u.terms) {
    Scalar s = fld_mul(u.field, c, coeff);
    if (!fld_is_zero(s)) out.terms.push_back({idx, s});
  }
  return out;
}

AlgebraElement algebra_product(const AlgebraElement& u, const AlgebraElement& v,
                               const CayleyTable& x) {
  if (!(u.field == v.field))
    throw std::invalid_argument("algebra_product: field mismatch");
  AlgebraElement out = AlgebraElement::zero(u.field);
  for (const auto& [i, a] : u.terms) {
    if (i >= x.n) throw std::invalid_argument("algebra_product: index outside carrier");
    for (const auto& [j, b] : v.terms) {
      if (j >= x.n) throw std::invalid_argument("algebra_product: index outside carrier");
      AlgebraElement t{u.field, {{x.op(i, j), fld_mul(u.field, a, b)}}};
      out = elem_add(out, t);
    }
  }
  return out;
}

AlgebraElement LinearOp::apply(const AlgebraElement& u) const {
  AlgebraElement out = AlgebraElement::zero(field);
  for (const auto& [idx, c] : u.terms)
    out = elem_add(out, elem_scale(c, basis_images[idx]));
  return out;
}

LinearOp extend_operator(const OperatorMap& b, const Field& f) {
  LinearOp op{f, {}};
  for (Elt x = 0; x < b.domain_size(); ++x)
    op.basis_images.push_back(AlgebraElement::basis(f, b(x)));
  return op;
}

namespace {

// 3-term pseudo-random elements with a fixed documented seed.
AlgebraElement random_element(const Field& f, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> idx(0, n - 1);
  AlgebraElement out = AlgebraElement::zero(f);
  for (int t = 0; t < 3; ++t) {
    std::int64_t c;
    if (f.kind == Field::Kind::Fp) {
      std::uniform_int_distribution<std::int64_t> coeff(1, f.p - 1);
      c = coeff(rng);
    } else {
      std::uniform_int_distribution<std::int64_t> coeff(-7, 7);
      c = coeff(rng);
      if (c == 0) c = 1;
    }
    AlgebraElement term{f, {{idx(rng), fld_from_int(f, c)}}};
    out = elem_add(out, term);
  }
  return out;
}

bool arb_identity_holds(const LinearOp& r, const Scalar& lambda,
                        const CayleyTable& x, const AlgebraElement& u,
                        const AlgebraElement& v) {
  AlgebraElement ru = r.apply(u), rv = r.apply(v);
  AlgebraElement lhs = algebra_product(ru, rv, x);
  AlgebraElement inner =
      elem_add(elem_add(algebra_product(ru, v, x), algebra_product(u, rv, x)),
               elem_scale(lambda, algebra_product(u, v, x)));
  return lhs == r.apply(inner);
}

}  // namespace

bool is_algebraic_rb(const LinearOp& r, const Scalar& lambda, const CayleyTable& x,
                     std::uint32_t seed) {
  if (static_cast<int>(r.basis_images.size()) != x.n)
    throw std::invalid_argument("is_algebraic_rb: operator size mismatch");
  for (Elt i = 0; i < x.n; ++i)
    for (Elt j = 0; j < x.n; ++j)
      if (!arb_identity_holds(r, lambda, x, AlgebraElement::basis(r.field, i),
                              AlgebraElement::basis(r.field, j)))
        return false;
  std::mt19937 rng(seed);
  for (int k = 0; k < 100; ++k) {
    AlgebraElement u = random_element(r.field, x.n, rng);
    AlgebraElement v = random_element(r.field, x.n, rng);
    if (!arb_identity_holds(r, lambda, x, u, v))
      throw std::logic_error(
          "is_algebraic_rb: basis pairs pass but a random element pair fails "
          "(bilinearity violated)");
  }
  return true;
}

ConditionSystemsReport condition_systems(const CayleyTable& x, const OperatorMap& b) {
  b.validate(x.n, x.n);
  ConditionSystemsReport r;
  r.system1 = r.system2 = r.per_pair = true;
  for (Elt u = 0; u < x.n; ++u)
    for (Elt v = 0; v < x.n; ++v) {
      bool s1 = x.op(b(u), b(v)) == b(x.op(b(u), v)) &&
                b(x.op(u, v)) == b(x.op(u, b(v)));
      bool s2 = x.op(b(u), b(v)) == b(x.op(u, b(v))) &&
                b(x.op(u, v)) == b(x.op(b(u), v));
      r.system1 &= s1;
      r.system2 &= s2;
      r.per_pair &= (s1 || s2);
    }
  Field q = Field::rationals();
  LinearOp ext = extend_operator(b, q);
  r.algebraic_rb_minus1 = is_algebraic_rb(ext, fld_from_int(q, -1), x);
  r.algebraic_rb_zero = is_algebraic_rb(ext, fld_from_int(q, 0), x);
  r.algebraic_rb_one = is_algebraic_rb(ext, fld_from_int(q, 1), x);
  r.equivalence_ok = (r.system1 || r.system2) == r.algebraic_rb_minus1;
  return r;
}

bool quandle_arb_symmetry(const CayleyTable& x, const OperatorMap& b) {
  if (!classify(x).is_quandle)
    throw std::invalid_argument("quandle_arb_symmetry: X is not a quandle");
  Field q = Field::rationals();
  if (!is_algebraic_rb(extend_operator(b, q), fld_from_int(q, -1), x))
    throw std::invalid_argument(
        "quandle_arb_symmetry: extend(B) is not algebraic RB of weight -1");
  for (Elt u = 0; u < x.n; ++u)
    if (b(x.op(b(u), u)) != b(x.op(u, b(u)))) return false;
  return true;
}

bool is_algebra_averaging(const LinearOp& r, const CayleyTable& x, std::uint32_t seed) {
  auto holds = [&r, &x](const AlgebraElement& u, const AlgebraElement& v) {
    AlgebraElement rv = r.apply(v);
    return algebra_product(r.apply(u), rv, x) == r.apply(algebra_product(u, rv, x));
  };
  for (Elt i = 0; i < x.n; ++i)
    for (Elt j = 0; j < x.n; ++j)
      if (!holds(AlgebraElement::basis(r.field, i), AlgebraElement::basis(r.field, j)))
        return false;
  std::mt19937 rng(seed);
  for (int k = 0; k < 100; ++k) {
    AlgebraElement u = random_element(r.field, x.n, rng);
    AlgebraElement v = random_element(r.field, x.n, rng);
    if (!holds(u, v))
      throw std::logic_error(
          "is_algebra_averaging: basis pairs pass but a random pair fails");
  }
  return true;
}

bool averaging_extension_check(const CayleyTable& x, const OperatorMap& b,
                               const Field& f, std::uint32_t seed) {
  b.validate(x.n, x.n);
  for (Elt p = 0; p < x.n; ++p)
    for (Elt q = 0; q < x.n; ++q)
      if (x.op(b(p), b(q)) != b(x.op(p, b(q))))
        throw std::invalid_argument(
            "averaging_extension_check: B is not a set-level averaging operator");
  return is_algebra_averaging(extend_operator(b, f), x, seed);
}

std::vector<MonomialOperator> monomial_rb_search(const CayleyTable& x,
                                                 std::int64_t p,
                                                 const Scalar& lambda,
                                                 long long max_space) {
  Field f = Field::prime(p);
  const int n = x.n;
  long long space = 1;
  for (int i = 0; i < n; ++i) {
    space *= n;
    space *= p;
    if (space > max_space)
      throw std::invalid_argument("monomial_rb_search: candidate space exceeds cap");
  }
  Scalar lam = reduce(f, lambda.v);

  std::vector<MonomialOperator> out;
  std::vector<Elt> targets(n, 0);
  std::vector<std::int64_t> weights(n, 0);
  auto check = [&]() {
    // R(e_x) = w_x e_{t_x}; identity on basis pairs
    for (Elt u = 0; u < n; ++u)
      for (Elt v = 0; v < n; ++v) {
        // lhs: w_u w_v e_{t_u * t_v}
        std::vector<Scalar> lhs(n, fld_from_int(f, 0)), rhs(n, fld_from_int(f, 0));
        lhs[x.op(targets[u], targets[v])] =
            fld_mul(f, fld_from_int(f, weights[u]), fld_from_int(f, weights[v]));
        // R(R(e_u) e_v): w_u R(e_{t_u * v}) = w_u w_{t_u*v} e_{t_{t_u*v}}
        Elt i1 = x.op(targets[u], v);
        rhs[targets[i1]] = fld_add(f, rhs[targets[i1]],
                                   fld_mul(f, fld_from_int(f, weights[u]),
                                           fld_from_int(f, weights[i1])));
        Elt i2 = x.op(u, targets[v]);
        rhs[targets[i2]] = fld_add(f, rhs[targets[i2]],
                                   fld_mul(f, fld_from_int(f, weights[v]),
                                           fld_from_int(f, weights[i2])));
        Elt i3 = x.op(u, v);
        rhs[targets[i3]] = fld_add(f, rhs[targets[i3]],
                                   fld_mul(f, lam, fld_from_int(f, weights[i3])));
        for (Elt k = 0; k < n; ++k)
          if (!(lhs[k] == rhs[k])) return false;
      }
    return true;
  };
  // odometer over targets (outer) then weights (inner), lexicographic
  while (true) {
    std::fill(weights.begin(), weights.end(), 0);
    while (true) {
      if (check()) out.push_back({targets, weights});
      int i = n - 1;
      while (i >= 0 && ++weights[i] == p) weights[i--] = 0;
      if (i < 0) break;
    }
    int i = n - 1;
    while (i >= 0 && ++targets[i] == n) targets[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace rbrack
