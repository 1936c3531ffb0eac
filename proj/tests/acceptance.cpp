// Acceptance suite: one criterion per test case, each printing a single
// PASS/FAIL line so the run can be skimmed from the test log.

#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#include "rbrack/algebra.hpp"
#include "rbrack/cayley.hpp"
#include "rbrack/construct.hpp"
#include "rbrack/corpus.hpp"
#include "rbrack/group.hpp"
#include "rbrack/operators.hpp"

using namespace rbrack;

namespace {

class Criterion {
 public:
  Criterion(int num, const char* label) : num_(num), label_(label) {
    start_ = std::chrono::steady_clock::now();
  }

  void require(bool cond) { ok_ = ok_ && cond; }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

  bool finish() {
    std::printf("criterion %2d: %s — %s (%.2fs)\n", num_, ok_ ? "PASS" : "FAIL",
                label_, seconds());
    std::fflush(stdout);
    return ok_;
  }

 private:
  int num_;
  const char* label_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point start_;
};

std::vector<OperatorMap> all_maps(int n) {
  std::vector<OperatorMap> out;
  OperatorMap b;
  b.map.assign(n, 0);
  while (true) {
    out.push_back(b);
    int i = n - 1;
    while (i >= 0 && ++b.map[i] == n) b.map[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<FiniteGroup> small_groups() {
  std::vector<FiniteGroup> gs;
  for (int n = 2; n <= 6; ++n) gs.push_back(cyclic_group(n));
  gs.push_back(symmetric_group(3));
  return gs;
}

}  // namespace

TEST_CASE("1: construction soundness") {
  Criterion c(1, "all constructions classify as claimed");

  for (int n = 1; n <= 6; ++n) c.require(classify(trivial_quandle(n)).is_quandle);
  for (int n = 2; n <= 12; ++n) c.require(classify(dihedral_quandle(n)).is_quandle);
  for (const FiniteGroup& g : small_groups()) {
    for (long long m : {1, 2}) c.require(classify(conj_quandle(g, m)).is_quandle);
    c.require(classify(core_quandle(g)).is_quandle);
    for (const Perm& phi : group_automorphisms(g))
      c.require(classify(alexander_quandle(g, phi)).is_quandle);
  }
  c.require(classify(product_rack(dihedral_quandle(3), trivial_quandle(2))).is_quandle);
  c.require(classify(product_rack(dihedral_quandle(4), dihedral_quandle(5))).is_quandle);
  for (const auto& [name, t, q] : corpus_racks(5)) {
    c.require(classify(semidirect_rack(t, t, PhiAction::inner(t))).is_rack);
    c.require(classify(semidirect_rack(t, t, PhiAction::all_identity(t.n, t.n))).is_rack);
  }
  c.require(classify(holomorph(trivial_quandle(2))).is_rack);
  c.require(classify(holomorph(trivial_quandle(3))).is_rack);
  c.require(classify(holomorph(dihedral_quandle(3))).is_rack);
  {
    Perm swap({1, 0});
    UnionSpec spec;
    spec.sigma = {swap, swap};
    spec.tau = {swap, swap};
    c.require(classify(union_rack(trivial_quandle(2), trivial_quandle(2), spec)).is_rack);
    UnionSpec triv;
    triv.sigma = {Perm::identity(1)};
    triv.tau = {Perm::identity(1)};
    c.require(union_rack(trivial_quandle(1), trivial_quandle(1), triv) ==
              trivial_quandle(2));
  }
  c.require(c.seconds() < 10.0);
  CHECK(c.finish());
}

TEST_CASE("2: dihedral facts") {
  Criterion c(2, "connectivity parity, commutativity of dihedral(3), involutary cores");
  for (int n = 2; n <= 12; ++n)
    c.require(classify(dihedral_quandle(n)).connected == (n % 2 == 1));
  c.require(classify(dihedral_quandle(3)).commutative);
  for (const FiniteGroup& g : small_groups())
    c.require(classify(core_quandle(g)).involutary);
  for (int n = 2; n <= 12; ++n)
    c.require(classify(core_quandle(cyclic_group(n))).involutary);
  CHECK(c.finish());
}

TEST_CASE("3: censuses equal the brute-force oracles") {
  Criterion c(3, "averaging and RB censuses on dihedral(3) / trivial(3)");

  CayleyTable r3 = dihedral_quandle(3), t3 = trivial_quandle(3);

  std::vector<OperatorMap> avg_oracle, rb_r3_oracle, rb_t3_oracle;
  for (const OperatorMap& b : all_maps(3)) {
    bool avg = true, rb = true, rbt = true;
    for (Elt x = 0; x < 3; ++x)
      for (Elt y = 0; y < 3; ++y) {
        if (r3.op(b(x), b(y)) != b(r3.op(x, b(y)))) avg = false;
        if (r3.op(b(x), b(y)) != b(r3.op(r3.op(x, b(y)), y))) rb = false;
        if (t3.op(b(x), b(y)) != b(t3.op(t3.op(x, b(y)), y))) rbt = false;
      }
    if (avg) avg_oracle.push_back(b);
    if (rb) rb_r3_oracle.push_back(b);
    if (rbt) rb_t3_oracle.push_back(b);
  }

  OperatorCensus avg = census(r3, OperatorKind::AveragingRight);
  c.require(avg.operators == avg_oracle);
  std::vector<OperatorMap> expected = {OperatorMap::constant(3, 0),
                                       OperatorMap::identity(3),
                                       OperatorMap::constant(3, 1),
                                       OperatorMap::constant(3, 2)};
  std::sort(expected.begin(), expected.end());
  c.require(avg.operators == expected);  // identity + the 3 constants
  c.require(census(r3, OperatorKind::RackRB).operators == rb_r3_oracle);
  c.require(census(t3, OperatorKind::RackRB).operators == rb_t3_oracle);
  CHECK(c.finish());
}

TEST_CASE("4: derived structure from averaging operators") {
  Criterion c(4, "x o y = x.B(y) is a rack, B averaging on it, B a homomorphism");
  for (const auto& [name, t, q] : corpus_racks(5))
    for (const OperatorMap& b : census(t, OperatorKind::AveragingRight).operators)
      c.require(derived_averaging(t, b).all_ok());
  c.require(c.seconds() < 60.0);
  CHECK(c.finish());
}

TEST_CASE("5: graph criterion") {
  Criterion c(5, "relative averaging verdict == subrack closure, all maps, n <= 4");
  for (int n = 1; n <= 4; ++n)
    for (const CayleyTable& t : all_racks_of_size(n)) {
      PhiAction inner = PhiAction::inner(t);
      for (const OperatorMap& b : all_maps(n))
        c.require(is_relative_averaging(t, t, inner, b) ==
                  graph_is_subrack(t, t, inner, b));
    }
  CHECK(c.finish());
}

TEST_CASE("6: weight minus one characterization") {
  Criterion c(6, "extend(B) algebraic RB only at lambda = -1, and iff a full system");
  for (const CayleyTable& t : all_racks_of_size(3))
    for (const OperatorMap& b : all_maps(3)) {
      ConditionSystemsReport r = condition_systems(t, b);
      c.require(!r.algebraic_rb_zero);
      c.require(!r.algebraic_rb_one);
      c.require(r.algebraic_rb_minus1 == (r.system1 || r.system2));
    }
  CHECK(c.finish());
}

TEST_CASE("7: averaging operators extend linearly") {
  Criterion c(7, "set averaging operators extend over Q and F_7");
  Field q = Field::rationals(), f7 = Field::prime(7);
  for (const auto& [name, t, quandle] : corpus_racks(5))
    for (const OperatorMap& b : census(t, OperatorKind::AveragingRight).operators) {
      c.require(averaging_extension_check(t, b, q));
      c.require(averaging_extension_check(t, b, f7));
    }
  CHECK(c.finish());
}

TEST_CASE("8: identity operator has weight -1") {
  Criterion c(8, "identity is algebraic RB of weight -1 on every corpus rack algebra");
  Field q = Field::rationals();
  for (const auto& [name, t, quandle] : corpus_racks(36)) {
    LinearOp id;
    id.field = q;
    for (Elt i = 0; i < t.n; ++i) id.basis_images.push_back(AlgebraElement::basis(q, i));
    c.require(is_algebraic_rb(id, fld_from_int(q, -1), t));
  }
  CHECK(c.finish());
}

TEST_CASE("9: group RB censuses") {
  Criterion c(9, "cyclic censuses = endomorphism counts; derived group conclusions on S_3");
  for (int n : {2, 3, 5}) {
    FiniteGroup g = cyclic_group(n);
    auto found = search_group_rb(g, 1);
    // independent endomorphism oracle
    std::vector<OperatorMap> endos;
    for (const OperatorMap& b : all_maps(n)) {
      bool ok = true;
      for (Elt x = 0; x < n && ok; ++x)
        for (Elt y = 0; y < n; ++y)
          if (b(g.mul(x, y)) != g.mul(b(x), b(y))) { ok = false; break; }
      if (ok) endos.push_back(b);
    }
    c.require(found == endos);
    c.require(static_cast<int>(found.size()) == n);
  }
  // The weight-1 census on C_p contains maps beyond the two distinguished
  // constant/inverse operators (e.g. the identity). Recorded as data only.
  std::printf("  note: weight-1 census on C_p has p members, not 2\n");

  FiniteGroup s3 = symmetric_group(3);
  auto ops = search_group_rb(s3, 1);
  c.require(!ops.empty());
  for (const OperatorMap& b : ops) {
    DerivedGroup d = derived_group_op(s3, b);
    c.require(d.b_is_rb_on_derived);
    c.require(d.b_is_homomorphism);
  }
  c.require(c.seconds() < 5.0);
  CHECK(c.finish());
}

TEST_CASE("10: conjugation/core hypotheses and multi-quandles") {
  Criterion c(10, "H1-H4 implications and centrality reformulation on S_3 and C_2xC_2");
  for (const FiniteGroup& g :
       {symmetric_group(3), direct_product(cyclic_group(2), cyclic_group(2))}) {
    std::vector<OperatorMap> quandle_ops;
    for (const OperatorMap& b : search_group_rb(g, 1)) {
      c.require(constr_hypotheses(g, b).all_implications_ok());
      if (classify(b_conjugation(g, b)).is_quandle) quandle_ops.push_back(b);
    }
    for (const OperatorMap& bs : quandle_ops)
      for (const OperatorMap& bt : quandle_ops) {
        std::vector<CayleyTable> ts = {b_conjugation(g, bs), b_conjugation(g, bt)};
        c.require(is_multiquandle(ts) == conj_multiquandle_centrality(g, {bs, bt}));
      }
  }
  CHECK(c.finish());
}

TEST_CASE("11: union reconstruction") {
  Criterion c(11, "trivial(2) u trivial(2) with swap actions is dihedral(4)");
  Perm swap({1, 0});
  UnionSpec spec;
  spec.sigma = {swap, swap};
  spec.tau = {swap, swap};
  CayleyTable u = union_rack(trivial_quandle(2), trivial_quandle(2), spec);
  c.require(are_isomorphic(u, dihedral_quandle(4)).has_value());
  CHECK(c.finish());
}
