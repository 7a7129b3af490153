#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistab/error.hpp"

namespace twistab {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Multiplication-table-backed finite group, immutable after construction.
// Elements are indices 0..order-1. The product convention is left-to-right:
// mul(a, b) applies a first, then b.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 720;

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const;
  bool abelian() const;

  const std::string& label(int a) const { return labels_[a]; }
  std::optional<int> element_by_label(const std::string& s) const;
  const std::string& name() const { return name_; }

  // Validates the table axioms; throws NonAssociative / NoIdentity /
  // NoInverse on malformed input.
  static GroupPtr from_table(int order, const std::vector<std::vector<int>>& mul,
                             std::vector<std::string> labels = {},
                             std::string name = {});

 private:
  FiniteGroup() = default;
  friend GroupPtr make_cyclic_group(int n);
  friend GroupPtr make_symmetric_group(int n);
  friend GroupPtr make_dihedral_group(int n);
  friend GroupPtr make_product_group(const GroupPtr& a, const GroupPtr& b);

  int order_ = 1;
  int identity_ = 0;
  std::vector<int> table_;    // row-major order x order
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::string name_;
};

GroupPtr make_trivial_group();
GroupPtr make_cyclic_group(int n);
GroupPtr make_symmetric_group(int n);  // n <= 6
GroupPtr make_dihedral_group(int n);   // order 2n
GroupPtr make_product_group(const GroupPtr& a, const GroupPtr& b);

struct GroupElement {
  const FiniteGroup* group = nullptr;
  int index = 0;

  bool operator==(const GroupElement&) const = default;
};

// Smallest subset closed under multiplication containing the generators and
// the identity, as sorted element indices. Throws ForeignElement when a
// generator belongs to a different group.
std::vector<int> generated_subgroup(const FiniteGroup& g,
                                    const std::vector<int>& gens);
std::vector<int> generated_subgroup(const FiniteGroup& g,
                                    const std::vector<GroupElement>& gens);

// All pairs commute. The input is expected to be multiplication-closed.
bool is_abelian(const FiniteGroup& g, const std::vector<int>& subgroup);

// Partition of the elements into conjugation orbits, each orbit sorted,
// orbits ordered by least element.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// Finite abelian group in invariant-factor form d1 | d2 | ... | dk, di >= 2.
// The empty list is the trivial group.
struct FiniteAbelianGroup {
  std::vector<long long> invariant_factors;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<long long> factors);

  long long order() const;
  bool trivial() const { return invariant_factors.empty(); }
  bool operator==(const FiniteAbelianGroup&) const = default;
  std::string to_string() const;
};

// Abstract isomorphism type of a multiplication-closed abelian subset.
FiniteAbelianGroup subgroup_abelian_type(const FiniteGroup& g,
                                         const std::vector<int>& subgroup);

// Tuples (g_1, ..., g_k) with g_i^{d_i} = e and all entries pairwise
// commuting, counted up to simultaneous conjugation; one representative
// (the lexicographically least tuple of its class) per class.
struct HomClasses {
  long long count = 0;
  std::vector<std::vector<int>> representatives;
};
HomClasses hom_classes(const FiniteAbelianGroup& a, const FiniteGroup& g);

// Cycle-notation helpers for symmetric-group labels, e.g. "(1 2)(3 4)";
// the identity is "e".
std::string permutation_cycle_label(const std::vector<int>& one_line);
std::vector<int> permutation_from_cycles(const std::string& text, int n);

}  // namespace twistab
