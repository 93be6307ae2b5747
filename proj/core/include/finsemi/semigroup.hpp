#ifndef FINSEMI_SEMIGROUP_HPP_
#define FINSEMI_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace finsemi {

//! Elements of a finite semigroup are indices 0 .. n-1.
using element = unsigned;

//! A sorted set of elements of a fixed ambient semigroup.
//!
//! Members are kept sorted ascending so that every set-valued result of the
//! library is deterministic.
class ElementSet {
 public:
  ElementSet() = default;

  //! Sorts and deduplicates; throws PreconditionError on out-of-range members.
  ElementSet(std::vector<element> members, unsigned parent_order);

  //! The full set {0, ..., n-1}.
  static ElementSet full(unsigned parent_order);

  //! Builds from a characteristic vector of length parent_order.
  static ElementSet from_indicator(const std::vector<bool>& in_set);

  bool contains(element x) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  unsigned parent_order() const { return parent_order_; }
  const std::vector<element>& members() const { return members_; }

  std::vector<element>::const_iterator begin() const { return members_.begin(); }
  std::vector<element>::const_iterator end() const { return members_.end(); }

  bool operator==(const ElementSet&) const = default;

  //! True if every member of this set is a member of other.
  bool subset_of(const ElementSet& other) const;

 private:
  std::vector<element> members_;
  unsigned parent_order_ = 0;
};

//! A finite semigroup given by its full Cayley table.
//!
//! Convention, fixed across the whole library and the file formats: the row
//! index is the left factor, i.e. table(i, j) = i * j.
//!
//! Instances are validated on construction (shape, entry range, and all n^3
//! associativity triples) and immutable afterwards, so they can be shared
//! freely across threads.
class FiniteSemigroup {
 public:
  //! Validates and builds. Throws MalformedTableError for a non-square grid,
  //! an out-of-range entry, an empty table, or a bad names list, and
  //! NonAssociativeError (with the lexicographically first violating triple)
  //! when the operation is not associative.
  static FiniteSemigroup from_table(
      const std::vector<std::vector<element>>& rows,
      std::optional<std::vector<std::string>> names = std::nullopt);

  unsigned order() const { return order_; }

  element product(element a, element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  bool has_names() const { return names_.has_value(); }
  const std::optional<std::vector<std::string>>& names() const { return names_; }

  //! The display string for an element: its name if names are present, its
  //! index otherwise.
  std::string display_name(element a) const;

  std::vector<std::vector<element>> table_rows() const;

  bool operator==(const FiniteSemigroup&) const = default;

 private:
  FiniteSemigroup(unsigned order, std::vector<element> table,
                  std::optional<std::vector<std::string>> names)
      : order_(order), table_(std::move(table)), names_(std::move(names)) {}

  unsigned order_ = 0;
  std::vector<element> table_;  // row-major, order_ x order_
  std::optional<std::vector<std::string>> names_;
};

//! Returns the two-sided identity of S, if S has one.
std::optional<element> identity_element(const FiniteSemigroup& S);

//! The monoid generated by S: S itself when S already has a two-sided
//! identity, otherwise S with one fresh identity element adjoined at index n.
FiniteSemigroup adjoin_identity(const FiniteSemigroup& S);

//! The dual semigroup: table'(i, j) = table(j, i).
FiniteSemigroup opposite(const FiniteSemigroup& S);

//! E(S), the set of idempotents, sorted.
ElementSet idempotents(const FiniteSemigroup& S);

//! Smallest product-closed subset of S containing gens (fixpoint iteration).
//! Throws PreconditionError when gens is empty.
ElementSet subsemigroup_closure(const FiniteSemigroup& S, const ElementSet& gens);

//! True if X is closed under the product of S.
bool is_subsemigroup(const FiniteSemigroup& S, const ElementSet& X);

//! The semigroup on a product-closed subset X, elements reindexed in the
//! sorted order of X. Element names are the display names of the members.
//! Throws NotClosedError when X is not closed, PreconditionError when empty.
FiniteSemigroup restrict_to(const FiniteSemigroup& S, const ElementSet& X);

//! True if S is a group (has an identity and two-sided inverses).
bool is_group(const FiniteSemigroup& S);

}  // namespace finsemi

#endif  // FINSEMI_SEMIGROUP_HPP_
