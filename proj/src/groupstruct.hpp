#ifndef SKEWRING_GROUPSTRUCT_HPP
#define SKEWRING_GROUPSTRUCT_HPP

#include <optional>
#include <vector>

#include "groupcore.hpp"

namespace skewring {

// Least common multiple of all element orders.
int exponent(const FiniteGroup& g);

bool is_2group(const FiniteGroup& g);

bool is_elementary_abelian_2(const FiniteGroup& g);
bool is_elementary_abelian_2(const Subgroup& s);

// Nonabelian 2-group in which every cyclic subgroup is normal.
bool is_hamiltonian_2group(const FiniteGroup& g);

struct FactorDecomposition {
  FiniteGroup core;
  // core element i corresponds to parent element core_embedding[i]
  std::vector<int> core_embedding;
  int stripped_rank = 0;
};

// Split off central C2 direct factors: G = core x C2^r with r maximal.
// Repeatedly finds a central involution outside the Frattini subgroup and
// complements it by an index-2 subgroup avoiding it. Requires a 2-group.
FactorDecomposition strip_c2_factors(const FiniteGroup& g);

// Backtracking isomorphism search over images of a greedy generating
// sequence. When kernels are given (both of index 2) the map must carry the
// first onto the second. Any returned map is verified multiplicative on all
// pairs. Deterministic; ties broken by element index.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g,
                                                 const FiniteGroup& h,
                                                 const Subgroup* g_kernel,
                                                 const Subgroup* h_kernel);

inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g,
                                                        const FiniteGroup& h) {
  return find_isomorphism(g, h, nullptr, nullptr);
}

}  // namespace skewring

#endif
