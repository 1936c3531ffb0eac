#pragma once

#include <functional>
#include <vector>

#include "rbrack/group.hpp"

namespace rbrack {

// m^n, clamped so callers can compare against a cap without overflow.
long long map_space_size(int m, int n);

// All maps [0,n) -> [0,m) passing pred, in lexicographic order of their image
// sequences. The candidate space is partitioned across workers by the first
// map value; per-partition results are concatenated in partition order, so
// the output does not depend on the worker count.
std::vector<OperatorMap> enumerate_maps(
    int n, int m, const std::function<bool(const OperatorMap&)>& pred,
    long long max_space, int workers);

}  // namespace rbrack
