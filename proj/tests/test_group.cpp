#include "doctest.h"

#include <vector>

#include "rbrack/census_util.hpp"
#include "rbrack/construct.hpp"
#include "rbrack/group.hpp"

using namespace rbrack;

namespace {

// Independent endomorphism oracle: straight loop over all maps.
std::vector<OperatorMap> endomorphism_scan(const FiniteGroup& g) {
  std::vector<OperatorMap> out;
  OperatorMap b;
  b.map.assign(g.n(), 0);
  while (true) {
    bool ok = true;
    for (Elt x = 0; x < g.n() && ok; ++x)
      for (Elt y = 0; y < g.n(); ++y)
        if (b(g.mul(x, y)) != g.mul(b(x), b(y))) { ok = false; break; }
    if (ok) out.push_back(b);
    int i = g.n() - 1;
    while (i >= 0 && ++b.map[i] == g.n()) b.map[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("validate_group") {
  FiniteGroup c3 = cyclic_group(3);
  CHECK(c3.identity == 0);
  CHECK(c3.inverses == std::vector<Elt>{0, 2, 1});
  FiniteGroup s3 = symmetric_group(3);
  CHECK(s3.n() == 6);
  CHECK(s3.mul(s3.identity, 4) == 4);
  // trivial quandle table is not a group
  CHECK_THROWS(validate_group(trivial_quandle(2)));
  // broken associativity
  CayleyTable bad = CayleyTable::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}});
  CHECK_THROWS(validate_group(bad));
}

TEST_CASE("elementary operators on every small group") {
  for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(5), symmetric_group(3),
                               direct_product(cyclic_group(2), cyclic_group(2))}) {
    // the constant-identity map works for both weights
    for (int w : {1, -1}) CHECK(check_group_rb(g, rb_b0(g), w).holds);
    // inversion satisfies the weight-1 identity everywhere ...
    CHECK(check_group_rb(g, rb_bm1(g), 1).holds);
    // ... and the identity map is its weight -1 counterpart
    CHECK(check_group_rb(g, OperatorMap::identity(g.n()), -1).holds);
  }
  // under weight -1, inversion only survives commutativity
  CHECK(check_group_rb(cyclic_group(5), rb_bm1(cyclic_group(5)), -1).holds);
  CHECK_FALSE(check_group_rb(symmetric_group(3), rb_bm1(symmetric_group(3)), -1).holds);
}

TEST_CASE("check_group_rb: identity map on abelian groups, weight 1") {
  FiniteGroup c3 = cyclic_group(3);
  CHECK(check_group_rb(c3, OperatorMap::identity(3), 1).holds);
  // witness reported on failure
  GroupRBReport r = check_group_rb(symmetric_group(3), OperatorMap::identity(6), 1);
  CHECK_FALSE(r.holds);
  CHECK(r.witness.has_value());
}

TEST_CASE("weight-1 census on cyclic groups equals the endomorphism scan") {
  for (int n : {2, 3, 5}) {
    FiniteGroup g = cyclic_group(n);
    auto found = search_group_rb(g, 1);
    auto endos = endomorphism_scan(g);
    CHECK(found == endos);
    CHECK(static_cast<int>(found.size()) == n);
  }
}

TEST_CASE("census is deterministic across worker counts") {
  FiniteGroup s3 = symmetric_group(3);
  auto one = search_group_rb(s3, 1, 100000000, 1);
  auto four = search_group_rb(s3, 1, 100000000, 4);
  CHECK(one == four);
  CHECK(one.size() == 8);  // frozen from the straight-loop oracle
  auto neg = search_group_rb(s3, -1);
  CHECK(neg.size() == 8);
}

TEST_CASE("census cap refusal") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK_THROWS(search_group_rb(s3, 1, 1000));
}

TEST_CASE("derived group operation: Proposition conclusions") {
  FiniteGroup c3 = cyclic_group(3);
  // B_[-1] on abelian C_3 collapses to the same group
  DerivedGroup d = derived_group_op(c3, rb_bm1(c3));
  CHECK(d.group.base == c3.base);
  CHECK(d.b_is_rb_on_derived);
  CHECK(d.b_is_homomorphism);
  // B_[0] reproduces (G, .) on any group
  FiniteGroup s3 = symmetric_group(3);
  CHECK(derived_group_op(s3, rb_b0(s3)).group.base == s3.base);
  // all three conclusions for every weight-1 operator on S_3
  for (const OperatorMap& b : search_group_rb(s3, 1)) {
    DerivedGroup ds = derived_group_op(s3, b);
    CHECK(ds.b_is_rb_on_derived);
    CHECK(ds.b_is_homomorphism);
  }
}

TEST_CASE("relative group RB") {
  FiniteGroup s3 = symmetric_group(3);
  // conjugation action phi_g(h) = g h g^-1 recovers the classical case
  std::vector<Perm> conj_action;
  for (Elt g = 0; g < s3.n(); ++g) {
    std::vector<Elt> imgs(s3.n());
    for (Elt h = 0; h < s3.n(); ++h) imgs[h] = s3.conj(h, g);
    conj_action.emplace_back(imgs);
  }
  for (const OperatorMap& b : search_group_rb(s3, 1))
    CHECK(check_relative_group_rb(s3, s3, conj_action, b));

  // trivial phi: relative RB iff B is a homomorphism
  FiniteGroup c3 = cyclic_group(3);
  std::vector<Perm> trivial_phi(3, Perm::identity(3));
  CHECK(check_relative_group_rb(c3, c3, trivial_phi, OperatorMap::identity(3)));
  CHECK_FALSE(check_relative_group_rb(c3, c3, trivial_phi, OperatorMap{{0, 0, 1}}));
  // phi that is not a homomorphism is rejected
  std::vector<Perm> bad_phi(3, Perm::identity(3));
  bad_phi[1] = Perm({0, 2, 1});
  CHECK_THROWS(check_relative_group_rb(c3, c3, bad_phi, OperatorMap::identity(3)));
}

TEST_CASE("center and centralizer") {
  FiniteGroup c3 = cyclic_group(3);
  CHECK(center(c3) == std::vector<Elt>{0, 1, 2});
  FiniteGroup s3 = symmetric_group(3);
  CHECK(center(s3) == std::vector<Elt>{s3.identity});
  // centralizer of a 3-cycle is the cyclic subgroup of order 3
  Elt three_cycle = -1;
  for (Elt x = 0; x < 6; ++x) {
    if (x == s3.identity) continue;
    if (s3.mul(x, s3.mul(x, x)) == s3.identity && s3.mul(x, x) != s3.identity) {
      three_cycle = x;
      break;
    }
  }
  REQUIRE(three_cycle >= 0);
  CHECK(centralizer(s3, three_cycle).size() == 3);
}

TEST_CASE("group automorphisms") {
  CHECK(group_automorphisms(cyclic_group(2)).size() == 1);
  CHECK(group_automorphisms(cyclic_group(3)).size() == 2);
  CHECK(group_automorphisms(symmetric_group(3)).size() == 6);
}

TEST_CASE("abelian weight-1 operators are exactly the endomorphisms") {
  for (const FiniteGroup& g :
       {cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))}) {
    CHECK(search_group_rb(g, 1) == endomorphism_scan(g));
  }
}
