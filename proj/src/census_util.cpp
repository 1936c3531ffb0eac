#include "rbrack/census_util.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace rbrack {

long long map_space_size(int m, int n) {
  long long s = 1;
  for (int i = 0; i < n; ++i) {
    if (s > std::numeric_limits<long long>::max() / m)
      return std::numeric_limits<long long>::max();
    s *= m;
  }
  return s;
}

namespace {

// Enumerate maps whose first value lies in [lo, hi), lexicographically.
void scan_block(int n, int m, Elt lo, Elt hi,
                const std::function<bool(const OperatorMap&)>& pred,
                std::vector<OperatorMap>& out) {
  if (lo >= hi) return;
  OperatorMap cand;
  cand.map.assign(n, 0);
  cand.map[0] = lo;
  while (true) {
    if (pred(cand)) out.push_back(cand);
    int i = n - 1;
    while (i >= 0) {
      Elt limit = (i == 0) ? hi : m;
      if (++cand.map[i] < limit) break;
      cand.map[i] = (i == 0) ? lo : 0;
      --i;
    }
    if (i < 0) return;
  }
}

}  // namespace

std::vector<OperatorMap> enumerate_maps(
    int n, int m, const std::function<bool(const OperatorMap&)>& pred,
    long long max_space, int workers) {
  if (n <= 0 || m <= 0) throw std::invalid_argument("enumerate_maps: empty carrier");
  long long space = map_space_size(m, n);
  if (space > max_space)
    throw std::invalid_argument("enumerate_maps: candidate space " +
                                std::to_string(space) + " exceeds cap " +
                                std::to_string(max_space));
  if (workers < 1) workers = 1;
  workers = std::min(workers, m);

  std::vector<std::vector<OperatorMap>> parts(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    Elt lo = static_cast<Elt>(static_cast<long long>(m) * w / workers);
    Elt hi = static_cast<Elt>(static_cast<long long>(m) * (w + 1) / workers);
    pool.emplace_back(scan_block, n, m, lo, hi, std::cref(pred), std::ref(parts[w]));
  }
  for (auto& th : pool) th.join();

  std::vector<OperatorMap> out;
  for (auto& p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace rbrack
