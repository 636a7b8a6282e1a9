#ifndef SKEWRING_GROUPCORE_HPP
#define SKEWRING_GROUPCORE_HPP

#include <string>
#include <vector>

#include "presdsl.hpp"

namespace skewring {

// Hard cap on the order of any group handled downstream. All catalog groups
// have order <= 32 and the x C2^r variants stay <= 256.
inline constexpr int kMaxGroupOrder = 512;
inline constexpr int kDefaultCosetLimit = 4096;

// A concrete finite group as a Cayley table. Element 0 is the identity.
// Immutable after construction.
class FiniteGroup {
 public:
  // Realize a presentation via coset enumeration over the trivial subgroup.
  // Throws RealizeError when the enumeration exceeds coset_limit.
  static FiniteGroup realize(const Presentation& p,
                             int coset_limit = kDefaultCosetLimit);

  // Componentwise product; element (x, y) has index x*|h| + y.
  static FiniteGroup direct_product(const FiniteGroup& g,
                                    const FiniteGroup& h);

  // Elementary abelian 2-group of the given rank, generators e1..er.
  static FiniteGroup elementary_abelian(int rank);

  // Plain-text Cayley table: "order n" then n rows of n indices.
  // Validates all invariants and throws InputError on the first failure.
  static FiniteGroup from_table_text(const std::string& text);

  int order() const { return n_; }
  int mul(int x, int y) const { return mul_[static_cast<size_t>(x) * n_ + y]; }
  int inv(int x) const { return inv_[x]; }
  int elem_order(int x) const { return elem_order_[x]; }
  int pow(int x, int e) const;
  bool is_abelian() const;

  const std::vector<int>& generator_elems() const { return generator_elems_; }
  const std::vector<std::string>& generator_names() const {
    return generator_names_;
  }

  // Shortest word for an element in the presentation's generators, "1" for
  // the identity. Stable across runs.
  const std::string& name(int x) const { return names_[x]; }

  // Evaluate a word over generator_elems starting at the identity.
  int eval_word(const Word& w) const;

  // The subgroup on the given (sorted, closed) member set as a group of its
  // own. members[i] becomes element i of the result; members[0] must be 0.
  FiniteGroup subgroup_as_group(const std::vector<int>& members) const;

 private:
  FiniteGroup() = default;
  void finish(bool check_assoc);

  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> elem_order_;
  std::vector<int> generator_elems_;
  std::vector<std::string> generator_names_;
  std::vector<std::string> names_;
};

// A subgroup as a sorted member set of its parent group.
struct Subgroup {
  const FiniteGroup* group = nullptr;
  std::vector<int> members;  // sorted, contains 0, closed under mul and inv

  int size() const { return static_cast<int>(members.size()); }
  int index() const { return group->order() / size(); }
  bool contains(int x) const;
  bool is_abelian() const;
  bool is_normal() const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

// Smallest subgroup containing the seed elements (worklist closure).
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seeds);

Subgroup center(const FiniteGroup& g);

// Closure of all commutators and all squares. For a 2-group this is the
// Frattini subgroup; the quotient is elementary abelian.
Subgroup derived_and_squares(const FiniteGroup& g);

// A short generating set of the subgroup, greedy by element index.
std::vector<int> subgroup_generators(const Subgroup& s);

// "{g1,g2,...}" with element display names; deterministic label for reports.
std::string subgroup_label(const Subgroup& s);

}  // namespace skewring

#endif
