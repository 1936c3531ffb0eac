#include "rbrack/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "rbrack/construct.hpp"
#include "rbrack/group.hpp"

namespace rbrack {

std::vector<NamedTable> corpus_racks(int max_n) {
  std::vector<NamedTable> out;
  auto add = [&out, max_n](const std::string& name, CayleyTable t, bool quandle) {
    if (t.n <= max_n) out.push_back({name, std::move(t), quandle});
  };
  for (int n = 1; n <= std::min(max_n, 5); ++n)
    add("T" + std::to_string(n), trivial_quandle(n), true);
  for (int n = 2; n <= std::min(max_n, 6); ++n)
    add("R" + std::to_string(n), dihedral_quandle(n), true);

  FiniteGroup s3 = symmetric_group(3);
  add("Conj(S3)", conj_quandle(s3, 1), true);
  add("Conj2(S3)", conj_quandle(s3, 2), true);
  add("Core(S3)", core_quandle(s3), true);
  add("Core(C4)", core_quandle(cyclic_group(4)), true);
  {
    FiniteGroup c5 = cyclic_group(5);
    Perm doubling(std::vector<Elt>{0, 2, 4, 1, 3});  // x -> 2x mod 5
    add("Alex(C5,x2)", alexander_quandle(c5, doubling), true);
  }
  add("R3xT2", product_rack(dihedral_quandle(3), trivial_quandle(2)), true);
  add("R2xR2", product_rack(dihedral_quandle(2), dihedral_quandle(2)), true);
  return out;
}

std::vector<CayleyTable> all_racks_of_size(int n) {
  std::vector<std::vector<Elt>> perms;
  {
    std::vector<Elt> base(n);
    std::iota(base.begin(), base.end(), 0);
    do {
      perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
  }
  const int np = static_cast<int>(perms.size());
  std::vector<CayleyTable> out;
  std::vector<int> pick(n, 0);  // pick[y] = index of S_y
  while (true) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y)
      for (int z = 0; z < n && ok; ++z) {
        const auto& sy = perms[pick[y]];
        const auto& sz = perms[pick[z]];
        const auto& szy = perms[pick[sz[y]]];
        for (int x = 0; x < n; ++x)
          if (sz[sy[x]] != szy[sz[x]]) { ok = false; break; }
      }
    if (ok) {
      CayleyTable t;
      t.n = n;
      t.cells.resize(static_cast<size_t>(n) * n);
      for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y) t.op(x, y) = perms[pick[y]][x];
      out.push_back(std::move(t));
    }
    int i = n - 1;
    while (i >= 0 && ++pick[i] == np) pick[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace rbrack
