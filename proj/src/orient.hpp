#ifndef SKEWRING_ORIENT_HPP
#define SKEWRING_ORIENT_HPP

#include <vector>

#include "groupcore.hpp"

namespace skewring {

// An orientation homomorphism sigma: G -> {+1,-1}, stored by its kernel,
// an index-2 subgroup.
struct Orientation {
  const FiniteGroup* group = nullptr;
  Subgroup kernel;

  int sigma(int x) const { return kernel.contains(x) ? +1 : -1; }
};

// Kernel = closure of the seeds; throws InputError unless that closure has
// index exactly 2.
Orientation make_orientation(const FiniteGroup& g,
                             const std::vector<int>& seeds);

// All index-2 subgroups, each exactly once, deterministically ordered.
// Computed as pullbacks of the hyperplanes of G/G'G^2 (an F2 vector space);
// the count is 2^k - 1 where k is its rank.
std::vector<Subgroup> enumerate_kernels(const FiniteGroup& g);

// Independent oracle: full subgroup-lattice enumeration, filtered to index
// 2. Only for |G| <= 32.
std::vector<Subgroup> enumerate_kernels_bruteforce(const FiniteGroup& g);

}  // namespace skewring

#endif
