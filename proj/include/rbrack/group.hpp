#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbrack/cayley.hpp"

// Finite groups as validated Cayley tables, and Rota--Baxter operators of
// weight +-1 on them.

namespace rbrack {

// A pointwise map between carriers. map[x] is the image of x.
struct OperatorMap {
  std::vector<Elt> map;

  int domain_size() const { return static_cast<int>(map.size()); }
  Elt operator()(Elt x) const { return map[x]; }

  void validate(int domain, int codomain) const;
  static OperatorMap constant(int n, Elt p);
  static OperatorMap identity(int n);

  auto operator<=>(const OperatorMap&) const = default;
};

struct FiniteGroup {
  CayleyTable base;
  Elt identity = 0;
  std::vector<Elt> inverses;

  int n() const { return base.n; }
  Elt mul(Elt a, Elt b) const { return base.op(a, b); }
  Elt inv(Elt a) const { return inverses[a]; }
  Elt conj(Elt x, Elt y) const { return mul(mul(y, x), inv(y)); }  // y x y^-1
  Elt pow(Elt a, long long e) const;
};

// Throws std::invalid_argument with a witness description on any axiom
// failure (no identity, missing inverse, associativity triple).
FiniteGroup validate_group(const CayleyTable& t);

// Common small groups.
FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int n);                     // element order: lexicographic perms
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);

struct GroupRBReport {
  int weight = 1;  // +1 or -1
  bool holds = false;
  std::optional<std::pair<Elt, Elt>> witness;  // failing (g, h) when !holds
};

// Weight +1: B(g)B(h) = B(g B(g) h B(g)^-1).
// Weight -1: B(g)B(h) = B(B(g) h B(g)^-1 g).
GroupRBReport check_group_rb(const FiniteGroup& g, const OperatorMap& b, int weight);

// All maps G -> G satisfying the weight identity, lexicographic order.
// Refuses (throws) when n^n exceeds max_space; result is independent of the
// worker count.
std::vector<OperatorMap> search_group_rb(const FiniteGroup& g, int weight,
                                         long long max_space = 100000000,
                                         int workers = 1);

// g o h := g B(g) h B(g)^-1 for a weight-1 RB-operator B. Validates the
// result as a group and checks that B is an RB-operator on it and a
// homomorphism back to (G, .).
struct DerivedGroup {
  FiniteGroup group;
  bool b_is_rb_on_derived = false;
  bool b_is_homomorphism = false;
};
DerivedGroup derived_group_op(const FiniteGroup& g, const OperatorMap& b);

// phi: one automorphism of H per element of G, required to be a group
// homomorphism G -> Aut(H). B: H -> G.
// Identity: B(h1) B(h2) = B(h1 . phi_{B(h1)}(h2)).
bool check_relative_group_rb(const FiniteGroup& h, const FiniteGroup& g,
                             const std::vector<Perm>& phi, const OperatorMap& b);

std::vector<Elt> center(const FiniteGroup& g);
std::vector<Elt> centralizer(const FiniteGroup& g, Elt a);

// All group automorphisms, sorted lexicographically. Refuses above max_n.
std::vector<Perm> group_automorphisms(const FiniteGroup& g, int max_n = 16);

// Elementary RB-operators of the Example: B_[0](g) = e and B_[-1](g) = g^-1.
OperatorMap rb_b0(const FiniteGroup& g);
OperatorMap rb_bm1(const FiniteGroup& g);

}  // namespace rbrack
