#ifndef FINSEMI_VERIFY_HPP_
#define FINSEMI_VERIFY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finsemi/classes.hpp"
#include "finsemi/green.hpp"
#include "finsemi/inverses.hpp"
#include "finsemi/semigroup.hpp"

namespace finsemi {

//! Checker outcome. "vacuous" means the statement's hypotheses are never met
//! on this semigroup, so the claim was not exercised; it is deliberately
//! distinct from "holds" so sweeps can report hypothesis coverage.
enum class Outcome { holds, vacuous, fails };

std::string to_string(Outcome outcome);

//! Result of running one registered statement against one semigroup.
//!
//! A failing report always carries the lexicographically first witness. A
//! failing report means either a bug in this library or a genuine
//! counterexample to the registered statement; the detail string says so.
struct TheoremReport {
  std::string theorem_id;
  Outcome outcome = Outcome::vacuous;
  std::vector<std::pair<std::string, std::string>> witness;  // (role, element)
  std::string detail;

  bool holds() const { return outcome != Outcome::fails; }
};

//! Everything the checkers need, computed once per semigroup.
struct VerifyContext {
  FiniteSemigroup S;
  GreenData green;
  ElementSet idempotent_set;
  ElementSet group_invertible;                 // H(S)
  std::vector<std::optional<element>> sharp;   // group inverses
  std::vector<ElementSet> inverse_sets;        // V(a)
  std::vector<ElementSet> associate_sets;      // A(a)
  ClassificationReport classification;

  element product(element a, element b) const { return S.product(a, b); }
  bool rel_h(element a, element b) const { return green.rel_h(a, b); }
  bool in_vh(element x, element a) const {
    return in_inverses_mod_h(S, green, x, a);
  }
  bool in_ah(element x, element a) const {
    return in_associates_mod_h(S, green, x, a);
  }
};

VerifyContext make_context(const FiniteSemigroup& S);

//! All registered statement ids, sorted.
const std::vector<std::string>& theorem_ids();

bool is_registered_theorem(const std::string& theorem_id);

//! One-line description of a registered statement.
const std::string& theorem_summary(const std::string& theorem_id);

//! Runs one registered statement; throws UnknownTheoremError for an unknown
//! id.
TheoremReport verify(const VerifyContext& ctx, const std::string& theorem_id);
TheoremReport verify(const FiniteSemigroup& S, const std::string& theorem_id);

//! Runs the whole registry, reports ordered by theorem id.
std::vector<TheoremReport> verify_all(const VerifyContext& ctx);
std::vector<TheoremReport> verify_all(const FiniteSemigroup& S);

std::string to_json_string(const TheoremReport& report);
std::string to_json_string(const std::vector<TheoremReport>& reports);

}  // namespace finsemi

#endif  // FINSEMI_VERIFY_HPP_
