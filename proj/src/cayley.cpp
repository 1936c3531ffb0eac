#include "rbrack/cayley.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rbrack {

CayleyTable::CayleyTable(int size, std::vector<Elt> data)
    : n(size), cells(std::move(data)) {
  if (n <= 0 || cells.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("CayleyTable: wrong cell count");
  validate();
}

void CayleyTable::validate() const {
  for (Elt v : cells)
    if (v < 0 || v >= n)
      throw std::invalid_argument("CayleyTable: entry out of range");
}

std::string CayleyTable::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  for (Elt v : cells) mix(static_cast<std::uint64_t>(v));
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Elt>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<Elt> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("CayleyTable: ragged rows");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return CayleyTable(n, std::move(cells));
}

Perm::Perm(std::vector<Elt> imgs) : images(std::move(imgs)) {
  std::vector<bool> seen(images.size(), false);
  for (Elt v : images) {
    if (v < 0 || v >= size() || seen[v])
      throw std::invalid_argument("Perm: not a bijection");
    seen[v] = true;
  }
}

Perm Perm::then(const Perm& q) const {
  std::vector<Elt> r(images.size());
  for (int i = 0; i < size(); ++i) r[i] = q.images[images[i]];
  return Perm(std::move(r));
}

Perm Perm::inverse() const {
  std::vector<Elt> r(images.size());
  for (int i = 0; i < size(); ++i) r[images[i]] = i;
  return Perm(std::move(r));
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images[i] != i) return false;
  return true;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<bool> seen(images.size(), false);
  std::vector<int> lens;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

Perm Perm::identity(int n) {
  std::vector<Elt> r(n);
  std::iota(r.begin(), r.end(), 0);
  return Perm(std::move(r));
}

namespace {

bool right_translation_bijective(const CayleyTable& t, Elt y) {
  std::vector<bool> seen(t.n, false);
  for (Elt x = 0; x < t.n; ++x) {
    Elt v = t.op(x, y);
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool left_translation_bijective(const CayleyTable& t, Elt y) {
  std::vector<bool> seen(t.n, false);
  for (Elt x = 0; x < t.n; ++x) {
    Elt v = t.op(y, x);
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

std::vector<std::vector<Elt>> orbits(const CayleyTable& t) {
  // Union-find over x ~ x*y.
  std::vector<Elt> parent(t.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](Elt a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Elt x = 0; x < t.n; ++x)
    for (Elt y = 0; y < t.n; ++y) {
      Elt a = find(x), b = find(t.op(x, y));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<Elt>> out;
  std::vector<int> slot(t.n, -1);
  for (Elt x = 0; x < t.n; ++x) {
    Elt r = find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

StructureReport classify(const CayleyTable& t) {
  t.validate();
  StructureReport r;
  r.q1 = true;
  for (Elt x = 0; x < t.n; ++x)
    if (t.op(x, x) != x) { r.q1 = false; break; }

  r.q2 = true;
  for (Elt y = 0; y < t.n && r.q2; ++y)
    r.q2 = right_translation_bijective(t, y);
  r.lq2 = true;
  for (Elt y = 0; y < t.n && r.lq2; ++y)
    r.lq2 = left_translation_bijective(t, y);

  r.q3 = true;
  for (Elt x = 0; x < t.n && r.q3; ++x)
    for (Elt y = 0; y < t.n && r.q3; ++y)
      for (Elt z = 0; z < t.n; ++z)
        if (t.op(t.op(x, y), z) != t.op(t.op(x, z), t.op(y, z))) {
          r.q3 = false;
          break;
        }
  r.lq3 = true;
  for (Elt z = 0; z < t.n && r.lq3; ++z)
    for (Elt x = 0; x < t.n && r.lq3; ++x)
      for (Elt y = 0; y < t.n; ++y)
        if (t.op(z, t.op(x, y)) != t.op(t.op(z, x), t.op(z, y))) {
          r.lq3 = false;
          break;
        }

  r.is_rack = r.q2 && r.q3;
  r.is_quandle = r.is_rack && r.q1;
  r.is_left_rack = r.lq2 && r.lq3;

  r.commutative = true;
  for (Elt x = 0; x < t.n && r.commutative; ++x)
    for (Elt y = 0; y < t.n; ++y)
      if (t.op(x, y) != t.op(y, x)) { r.commutative = false; break; }

  if (r.is_rack) {
    r.involutary = true;
    for (Elt x = 0; x < t.n && r.involutary; ++x)
      for (Elt y = 0; y < t.n; ++y)
        if (t.op(t.op(y, x), x) != y) { r.involutary = false; break; }
  }

  r.orbits = orbits(t);
  r.connected = r.orbits.size() == 1;
  return r;
}

Perm inner_automorphism(const CayleyTable& t, Elt x) {
  if (!right_translation_bijective(t, x))
    throw std::invalid_argument("inner_automorphism: S_x is not bijective (Q2 fails)");
  std::vector<Elt> imgs(t.n);
  for (Elt y = 0; y < t.n; ++y) imgs[y] = t.op(y, x);
  return Perm(std::move(imgs));
}

std::vector<Perm> inner_group(const CayleyTable& t) {
  std::set<Perm> closure;
  std::vector<Perm> frontier;
  for (Elt x = 0; x < t.n; ++x) {
    Perm s = inner_automorphism(t, x);
    if (closure.insert(s).second) frontier.push_back(s);
  }
  Perm id = Perm::identity(t.n);
  if (closure.insert(id).second) frontier.push_back(id);
  while (!frontier.empty()) {
    Perm p = frontier.back();
    frontier.pop_back();
    Perm pi = p.inverse();
    if (closure.insert(pi).second) frontier.push_back(pi);
    for (const Perm& q : std::vector<Perm>(closure.begin(), closure.end())) {
      for (Perm r : {p.then(q), q.then(p)})
        if (closure.insert(r).second) frontier.push_back(std::move(r));
    }
  }
  return {closure.begin(), closure.end()};
}

bool is_subrack(const CayleyTable& t, const std::vector<Elt>& ys) {
  std::vector<bool> in(t.n, false);
  for (Elt y : ys) in[y] = true;
  for (Elt a : ys)
    for (Elt b : ys)
      if (!in[t.op(a, b)]) return false;
  return true;
}

SubrackStatus normal_subrack_status(const CayleyTable& t, const std::vector<Elt>& ys) {
  if (!is_subrack(t, ys)) return SubrackStatus::NotASubrack;
  std::vector<bool> in(t.n, false);
  for (Elt y : ys) in[y] = true;
  for (Elt y : ys)
    for (Elt x = 0; x < t.n; ++x)
      if (!in[t.op(y, x)]) return SubrackStatus::NotNormal;
  return SubrackStatus::Normal;
}

bool is_normal_subrack(const CayleyTable& t, const std::vector<Elt>& ys) {
  return normal_subrack_status(t, ys) == SubrackStatus::Normal;
}

namespace {

// Per-element invariant used to prune the image choices.
struct EltProfile {
  int orbit_size;
  bool idempotent;
  std::vector<int> cycles;
  bool operator==(const EltProfile&) const = default;
};

std::vector<EltProfile> profiles(const CayleyTable& t) {
  auto orbs = orbits(t);
  std::vector<int> osize(t.n, 0);
  for (const auto& o : orbs)
    for (Elt x : o) osize[x] = static_cast<int>(o.size());
  std::vector<EltProfile> out(t.n);
  bool q2 = true;
  for (Elt y = 0; y < t.n && q2; ++y)
    q2 = right_translation_bijective(t, y);
  for (Elt x = 0; x < t.n; ++x) {
    out[x].orbit_size = osize[x];
    out[x].idempotent = t.op(x, x) == x;
    if (q2) out[x].cycles = inner_automorphism(t, x).cycle_type();
  }
  return out;
}

bool extend_iso(const CayleyTable& t1, const CayleyTable& t2,
                const std::vector<EltProfile>& p1, const std::vector<EltProfile>& p2,
                std::vector<Elt>& f, std::vector<bool>& used, int depth) {
  int n = t1.n;
  if (depth == n) {
    // partial checks above only prune; confirm every pair here
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y)
        if (f[t1.op(x, y)] != t2.op(f[x], f[y])) return false;
    return true;
  }
  for (Elt img = 0; img < n; ++img) {
    if (used[img] || !(p1[depth] == p2[img])) continue;
    f[depth] = img;
    used[img] = true;
    bool ok = true;
    for (Elt y = 0; y <= depth && ok; ++y) {
      // check both orders against already-assigned elements
      if (f[t1.op(depth, y)] >= 0 && f[t1.op(depth, y)] != t2.op(img, f[y])) ok = false;
      if (ok && f[t1.op(y, depth)] >= 0 && f[t1.op(y, depth)] != t2.op(f[y], img)) ok = false;
    }
    if (ok && extend_iso(t1, t2, p1, p2, f, used, depth + 1)) return true;
    used[img] = false;
    f[depth] = -1;
  }
  return false;
}

}  // namespace

std::optional<Perm> are_isomorphic(const CayleyTable& t1, const CayleyTable& t2, int max_n) {
  if (t1.n != t2.n) return std::nullopt;
  if (t1.n > max_n)
    throw std::invalid_argument("are_isomorphic: n exceeds the configured cap");
  auto p1 = profiles(t1), p2 = profiles(t2);
  {
    auto s1 = p1, s2 = p2;
    auto key = [](const EltProfile& p) { return std::tuple(p.orbit_size, p.idempotent, p.cycles); };
    auto lt = [&key](const EltProfile& a, const EltProfile& b) { return key(a) < key(b); };
    std::sort(s1.begin(), s1.end(), lt);
    std::sort(s2.begin(), s2.end(), lt);
    if (s1 != s2) return std::nullopt;
  }
  std::vector<Elt> f(t1.n, -1);
  std::vector<bool> used(t1.n, false);
  if (extend_iso(t1, t2, p1, p2, f, used, 0)) return Perm(f);
  return std::nullopt;
}

std::vector<Perm> automorphisms(const CayleyTable& t, int max_n) {
  if (t.n > max_n)
    throw std::invalid_argument("automorphisms: n exceeds the configured cap");
  auto prof = profiles(t);
  std::vector<Perm> out;
  std::vector<Elt> f(t.n, -1);
  std::vector<bool> used(t.n, false);
  // depth-first over all witnesses, in lexicographic order
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == t.n) {
      for (Elt x = 0; x < t.n; ++x)
        for (Elt y = 0; y < t.n; ++y)
          if (f[t.op(x, y)] != t.op(f[x], f[y])) return;
      out.emplace_back(f);
      return;
    }
    for (Elt img = 0; img < t.n; ++img) {
      if (used[img] || !(prof[depth] == prof[img])) continue;
      f[depth] = img;
      used[img] = true;
      bool ok = true;
      for (Elt y = 0; y <= depth && ok; ++y) {
        if (f[t.op(depth, y)] >= 0 && f[t.op(depth, y)] != t.op(img, f[y])) ok = false;
        if (ok && f[t.op(y, depth)] >= 0 && f[t.op(y, depth)] != t.op(f[y], img)) ok = false;
      }
      if (ok) self(self, depth + 1);
      used[img] = false;
      f[depth] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_homomorphism(const std::vector<Elt>& f, const CayleyTable& t1,
                     const CayleyTable& t2) {
  if (static_cast<int>(f.size()) != t1.n)
    throw std::invalid_argument("is_homomorphism: wrong domain size");
  for (Elt v : f)
    if (v < 0 || v >= t2.n)
      throw std::invalid_argument("is_homomorphism: value out of codomain");
  for (Elt x = 0; x < t1.n; ++x)
    for (Elt y = 0; y < t1.n; ++y)
      if (f[t1.op(x, y)] != t2.op(f[x], f[y])) return false;
  return true;
}

}  // namespace rbrack
