#ifndef FINSEMI_ENUMERATE_HPP_
#define FINSEMI_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finsemi/semigroup.hpp"
#include "finsemi/verify.hpp"

namespace finsemi {

//! Configuration of an exhaustive enumeration of all Cayley tables of a
//! given order.
//!
//! Labeled tables are the default semantics: the verified statements are
//! per-semigroup, not per-isomorphism-class. up_to_iso keeps only tables
//! that are lexicographically minimal in their orbit under simultaneous
//! row/column/value permutation; anti-isomorphism is deliberately not
//! quotiented (left-zero and right-zero must both appear). The optional
//! filter names a classification flag that emitted semigroups must satisfy.
struct EnumerationConfig {
  unsigned order = 1;
  bool up_to_iso = false;
  std::optional<std::string> filter;
};

//! Depth-first fill of the table in row-major order with incremental
//! associativity pruning; tables are emitted in lexicographic order of the
//! flattened table. Return false from the callback to stop early.
void for_each_semigroup(const EnumerationConfig& config,
                        const std::function<bool(const FiniteSemigroup&)>& visit);

std::vector<FiniteSemigroup> enumerate_semigroups(const EnumerationConfig& config);

std::uint64_t count_semigroups(const EnumerationConfig& config);

//! True iff the table of S is the lexicographic minimum of its orbit under
//! simultaneous permutation of rows, columns and values.
bool is_orbit_minimal(const FiniteSemigroup& S);

struct SweepCounterexample {
  std::string semigroup;  // fixture name or canonical table text
  std::vector<std::pair<std::string, std::string>> witness;
  std::string detail;

  auto operator<=>(const SweepCounterexample&) const = default;
};

struct SweepEntry {
  std::uint64_t holds = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t fails = 0;
  std::vector<SweepCounterexample> counterexamples;
};

//! Aggregated result of running a set of registered statements over a
//! corpus of semigroups. Counterexamples are sorted, so aggregation order
//! never shows in the output.
struct SweepReport {
  std::vector<unsigned> orders;
  bool up_to_iso = false;
  std::optional<std::string> filter;
  std::vector<std::string> fixtures;
  std::uint64_t semigroup_count = 0;
  std::map<std::string, SweepEntry> theorems;

  std::uint64_t total_failures() const;
  void merge(const SweepReport& other);
};

//! Runs the named statements over every semigroup of the configured order.
//! Throws UnknownTheoremError for an unregistered id.
SweepReport sweep(const EnumerationConfig& config,
                  const std::vector<std::string>& theorem_ids);

//! Same, over several orders at once.
SweepReport sweep_orders(const std::vector<unsigned>& orders, bool up_to_iso,
                         const std::vector<std::string>& theorem_ids);

//! Fixture-based counterexample search over named semigroups.
SweepReport sweep_semigroups(
    const std::vector<std::pair<std::string, FiniteSemigroup>>& fixtures,
    const std::vector<std::string>& theorem_ids);

std::string to_json_string(const SweepReport& report);

}  // namespace finsemi

#endif  // FINSEMI_ENUMERATE_HPP_
