#ifndef FINSEMI_CLASSES_HPP_
#define FINSEMI_CLASSES_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finsemi/green.hpp"
#include "finsemi/semigroup.hpp"

namespace finsemi {

//! Z(E(S)) = { x : xe = ex for every idempotent e }.
ElementSet centralizer_of_idempotents(const FiniteSemigroup& S);

//! True iff a*b H b*a for all a, b in X, with H taken in the ambient S.
//! X need not be product-closed.
bool is_h_commutative_set(const FiniteSemigroup& S, const GreenData& G,
                          const ElementSet& X);

//! The lexicographically first pair of X violating a*b H b*a, if any.
std::optional<std::pair<element, element>> h_commutative_witness(
    const FiniteSemigroup& S, const GreenData& G, const ElementSet& X);

struct NagyCommutativity {
  bool r_commutative = false;
  bool l_commutative = false;
  bool h_commutative = false;
};

//! Commutativity up to an inner factor for the subsemigroup on X:
//! R-commutative iff every ab equals bax for some x in X^1, L-commutative
//! iff ab = xba, H-commutative iff ab = bxa. Throws NotClosedError when X is
//! not product-closed.
NagyCommutativity nagy_commutativity(const FiniteSemigroup& S,
                                     const ElementSet& X);

//! Truth table of every class predicate, with supporting witness sets and a
//! lexicographically-first counterexample tuple for each false flag.
//!
//! "fundamental" is only defined for inverse semigroups (mu = identity); the
//! optional is empty otherwise.
struct ClassificationReport {
  bool regular = false;
  bool inverse = false;
  bool completely_regular = false;
  bool clifford = false;
  bool e_commutative = false;
  bool e_semigroup = false;
  bool orthodox = false;
  bool solid = false;
  bool h_commutative_HS = false;
  bool completely_inverse = false;
  bool h_orthodox = false;
  bool h_inverse_closed = false;
  bool h_cliffordian = false;
  bool cryptic = false;
  bool combinatorial = false;
  std::optional<bool> fundamental;

  ElementSet idempotents;        // E(S)
  ElementSet group_invertible;   // H(S)
  ElementSet centralizer;        // Z(E(S))

  std::map<std::string, std::vector<element>> counterexamples;

  //! Flag lookup by name; an undefined "fundamental" reads as false.
  bool flag(std::string_view name) const;
  std::optional<bool> flag_or_null(std::string_view name) const;
};

//! The fixed flag-name list, in report order.
const std::vector<std::string>& classification_flag_names();

//! Decides every flag by its definitional test. The known implications
//! between flags are asserted before returning; a violation throws
//! InternalInconsistencyError (a library bug, never bad input).
ClassificationReport classify(const FiniteSemigroup& S);
ClassificationReport classify(const FiniteSemigroup& S, const GreenData& G);

std::string to_json_string(const ClassificationReport& report,
                           const FiniteSemigroup& S);
std::string to_text(const ClassificationReport& report,
                    const FiniteSemigroup& S);

}  // namespace finsemi

#endif  // FINSEMI_CLASSES_HPP_
