#pragma once

#include <optional>
#include <string>
#include <vector>

// Finite binary structures given by Cayley tables.
//
// Convention: table(x, y) = x * y (right racks/quandles). Elements are the
// integers 0..n-1. Nothing is assumed about the operation; rack/quandle
// status is established by classify().

namespace rbrack {

using Elt = int;

struct CayleyTable {
  int n = 0;
  std::vector<Elt> cells;  // row-major, cells[x*n + y] = x * y

  CayleyTable() = default;
  CayleyTable(int size, std::vector<Elt> data);

  Elt op(Elt x, Elt y) const { return cells[static_cast<size_t>(x) * n + y]; }
  Elt& op(Elt x, Elt y) { return cells[static_cast<size_t>(x) * n + y]; }

  bool operator==(const CayleyTable&) const = default;

  // Throws std::invalid_argument if any entry is out of [0, n).
  void validate() const;

  // FNV-1a over n and the cells, as a hex string. Used to tag census output.
  std::string hash() const;

  static CayleyTable from_rows(const std::vector<std::vector<Elt>>& rows);
};

// A bijection of {0..n-1}. images[x] is where x goes.
struct Perm {
  std::vector<Elt> images;

  Perm() = default;
  explicit Perm(std::vector<Elt> imgs);

  int size() const { return static_cast<int>(images.size()); }
  Elt apply(Elt x) const { return images[x]; }

  // Word-order composition: (p.then(q))(x) = q(p(x)).
  Perm then(const Perm& q) const;
  Perm inverse() const;
  bool is_identity() const;

  // Cycle lengths sorted ascending; isomorphism-search invariant.
  std::vector<int> cycle_type() const;

  static Perm identity(int n);

  auto operator<=>(const Perm&) const = default;
};

struct StructureReport {
  bool q1 = false;         // x*x = x
  bool q2 = false;         // every S_y bijective
  bool q3 = false;         // right self-distributivity
  bool lq2 = false;        // every left translation bijective
  bool lq3 = false;        // left self-distributivity
  bool is_rack = false;    // q2 && q3
  bool is_quandle = false; // is_rack && q1
  bool is_left_rack = false;
  bool commutative = false;
  bool involutary = false; // only meaningful (and only set) when is_rack
  bool connected = false;
  std::vector<std::vector<Elt>> orbits;  // partition of the carrier under <S_x>
};

// Exhaustive axiom classification; Q3 over all n^3 triples.
StructureReport classify(const CayleyTable& t);

// S_x : y -> y * x. Requires the translation to be bijective (Q2 at x).
Perm inner_automorphism(const CayleyTable& t, Elt x);

// Closure of {S_x} under composition and inversion, sorted lexicographically.
// Requires t to be a rack.
std::vector<Perm> inner_group(const CayleyTable& t);

// Orbit partition of the carrier under the group generated by all S_x.
std::vector<std::vector<Elt>> orbits(const CayleyTable& t);

// Is Y closed under * restricted to Y?
bool is_subrack(const CayleyTable& t, const std::vector<Elt>& ys);

enum class SubrackStatus { NotASubrack, NotNormal, Normal };

// Normal: y * x stays in Y for every y in Y, x anywhere.
SubrackStatus normal_subrack_status(const CayleyTable& t, const std::vector<Elt>& ys);
bool is_normal_subrack(const CayleyTable& t, const std::vector<Elt>& ys);

// Backtracking isomorphism search, pruned on orbit sizes and S_x cycle types.
// Returns the lexicographically least witness, or nullopt. Refuses (throws)
// above max_n.
std::optional<Perm> are_isomorphic(const CayleyTable& t1, const CayleyTable& t2,
                                   int max_n = 16);

// All automorphisms of t, sorted lexicographically. Refuses above max_n.
std::vector<Perm> automorphisms(const CayleyTable& t, int max_n = 16);

// f(x * y) = f(x) * f(y) for all pairs; f given pointwise from t1 into t2.
bool is_homomorphism(const std::vector<Elt>& f, const CayleyTable& t1,
                     const CayleyTable& t2);

}  // namespace rbrack
