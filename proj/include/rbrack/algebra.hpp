#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rbrack/cayley.hpp"
#include "rbrack/group.hpp"

// Rack algebras k[X] over exact fields (Q or F_p), linear extensions of
// set-level operators, and the algebraic Rota--Baxter / averaging
// identities. No floating point anywhere in this module.

namespace rbrack {

using Rational = boost::multiprecision::cpp_rational;

struct Field {
  enum class Kind { Q, Fp };
  Kind kind = Kind::Q;
  std::int64_t p = 0;  // modulus when kind == Fp

  static Field rationals() { return {Kind::Q, 0}; }
  static Field prime(std::int64_t p);  // validates primality, p < 2^31
  bool operator==(const Field&) const = default;
};

// A field element. For F_p the value is kept reduced in [0, p).
struct Scalar {
  Rational v;
  bool operator==(const Scalar&) const = default;
};

Scalar fld_from_int(const Field& f, std::int64_t k);
Scalar fld_add(const Field& f, const Scalar& a, const Scalar& b);
Scalar fld_sub(const Field& f, const Scalar& a, const Scalar& b);
Scalar fld_mul(const Field& f, const Scalar& a, const Scalar& b);
Scalar fld_neg(const Field& f, const Scalar& a);
bool fld_is_zero(const Scalar& a);
std::string fld_to_string(const Field& f, const Scalar& a);
Scalar fld_parse(const Field& f, const std::string& s);  // "num/den" or integer

// Finitely supported vector over the rack basis. Support is sorted strictly
// ascending; zero coefficients are never stored.
struct AlgebraElement {
  Field field;
  std::vector<std::pair<Elt, Scalar>> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const AlgebraElement&) const = default;

  static AlgebraElement zero(const Field& f) { return {f, {}}; }
  static AlgebraElement basis(const Field& f, Elt i);
};

AlgebraElement elem_add(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement elem_scale(const Scalar& c, const AlgebraElement& u);
// Bilinear extension of the table operation.
AlgebraElement algebra_product(const AlgebraElement& u, const AlgebraElement& v,
                               const CayleyTable& x);

// A linear operator given by its images on the basis.
struct LinearOp {
  Field field;
  std::vector<AlgebraElement> basis_images;

  AlgebraElement apply(const AlgebraElement& u) const;
};

// Linear extension of a set map: e_x -> e_{B(x)}.
LinearOp extend_operator(const OperatorMap& b, const Field& f);

inline constexpr std::uint32_t kDefaultSpotCheckSeed = 20240817;

// R(a)R(b) = R(R(a)b + aR(b) + lambda ab), checked on all basis pairs
// (sufficient by bilinearity) and additionally on 100 seeded pseudo-random
// 3-term element pairs.
bool is_algebraic_rb(const LinearOp& r, const Scalar& lambda, const CayleyTable& x,
                     std::uint32_t seed = kDefaultSpotCheckSeed);

// The two pairwise condition systems whose (uniform) validity characterizes
// when extend(B) is algebraic RB of weight -1.
struct ConditionSystemsReport {
  bool system1 = false;     // B(x)*B(y)=B(B(x)*y)  and  B(x*y)=B(x*B(y)), all pairs
  bool system2 = false;     // B(x)*B(y)=B(x*B(y))  and  B(x*y)=B(B(x)*y), all pairs
  bool per_pair = false;    // every pair satisfies one of the two locally
  bool algebraic_rb_minus1 = false;  // extend(B) over Q, lambda = -1
  bool algebraic_rb_zero = false;    // lambda = 0
  bool algebraic_rb_one = false;     // lambda = +1
  bool equivalence_ok = false;       // (system1 || system2) == algebraic_rb_minus1
};
ConditionSystemsReport condition_systems(const CayleyTable& x, const OperatorMap& b);

// B(B(x)*x) = B(x*B(x)) for all x; holds whenever extend(B) is a weight -1
// algebraic RB-operator on a quandle algebra (verified as a precondition).
bool quandle_arb_symmetry(const CayleyTable& x, const OperatorMap& b);

// R(u) * R(v) = R(u * R(v)) on basis pairs plus seeded random pairs.
bool is_algebra_averaging(const LinearOp& r, const CayleyTable& x,
                          std::uint32_t seed = kDefaultSpotCheckSeed);

// Must be true for every set-level averaging operator (the extension
// proposition). B is required to be averaging on X.
bool averaging_extension_check(const CayleyTable& x, const OperatorMap& b,
                               const Field& f,
                               std::uint32_t seed = kDefaultSpotCheckSeed);

// R(e_x) = weights[x] * e_{targets[x]}, over F_p.
struct MonomialOperator {
  std::vector<Elt> targets;
  std::vector<std::int64_t> weights;
  auto operator<=>(const MonomialOperator&) const = default;
};

// All monomial operators over F_p satisfying the weight-lambda identity on
// all basis pairs. Deterministic order: targets lexicographic, then weights.
std::vector<MonomialOperator> monomial_rb_search(const CayleyTable& x,
                                                 std::int64_t p,
                                                 const Scalar& lambda,
                                                 long long max_space = 100000000);

}  // namespace rbrack
