#ifndef FINSEMI_INVERSES_HPP_
#define FINSEMI_INVERSES_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "finsemi/green.hpp"
#include "finsemi/semigroup.hpp"

namespace finsemi {

//! A(a) = { x : a*x*a = a }, the associates (inner inverses) of a.
ElementSet associates(const FiniteSemigroup& S, element a);

//! V(a) = { x : a*x*a = a and x*a*x = x }, the reflexive inverses of a.
ElementSet inverses_of(const FiniteSemigroup& S, element a);

//! The group inverse: the unique commuting reflexive inverse of a, if any.
//! Found by scanning the H-class of a only; the result is cross-checked
//! against the criterion "a H a^2" and InternalInconsistencyError is thrown
//! if the two ever disagree.
std::optional<element> group_inverse(const FiniteSemigroup& S,
                                     const GreenData& G, element a);

//! H(S), the set of group invertible elements, computed two independent
//! ways ({a : a H a^2} and the union of H-classes of idempotents); throws
//! InternalInconsistencyError if the computations disagree.
ElementSet group_invertible_set(const FiniteSemigroup& S, const GreenData& G);

//! A(a)[H] = { x : a*x*a H a }.
ElementSet associates_mod_h(const FiniteSemigroup& S, const GreenData& G,
                            element a);

//! V(a)[H] = { x : a*x*a H a and x*a*x H x }.
ElementSet inverses_mod_h(const FiniteSemigroup& S, const GreenData& G,
                          element a);

//! O(1) membership tests for the two sets above.
bool in_associates_mod_h(const FiniteSemigroup& S, const GreenData& G,
                         element x, element a);
bool in_inverses_mod_h(const FiniteSemigroup& S, const GreenData& G,
                       element x, element a);

//! Variant reading of V(a)[H] that requires the outer product to fall in the
//! H-class of a instead: { x : a*x*a H a and x*a*x H a }. Kept as a
//! diagnostic; it is NOT the set the rest of the library uses.
ElementSet inverses_mod_h_variant(const FiniteSemigroup& S, const GreenData& G,
                                  element a);

//! All pairs (a, x) on which the two readings of V(a)[H] disagree, in
//! lexicographic order. Nonempty already on the left-zero semigroup of
//! order 2.
std::vector<std::pair<element, element>> vh_reading_disagreements(
    const FiniteSemigroup& S, const GreenData& G);

//! Result of inverting a_prime along a.
//!
//! When it exists, the value is the unique b with b*a'*a = a = a*a'*b and
//! b <=H a, and the two closed forms agree with it:
//!   via_left  = (a*a')# * a,
//!   via_right = a * (a'*a)#.
struct InverseAlongResult {
  bool exists = false;
  std::optional<element> value;
  std::optional<element> via_left;
  std::optional<element> via_right;
};

//! All solutions b of b*a'*a = a = a*a'*b with b <=H a, ascending. The
//! definition promises at most one; callers that rely on that should check.
std::vector<element> inverse_along_search(const FiniteSemigroup& S,
                                          const GreenData& G, element a_prime,
                                          element a);

//! Computes the inverse of a_prime along a by definitional search and by
//! both closed forms; throws InternalInconsistencyError whenever the three
//! routes disagree (including a non-singleton search result).
InverseAlongResult inverse_along(const FiniteSemigroup& S, const GreenData& G,
                                 element a_prime, element a);

//! Evaluates the five equivalent existence conditions for the inverse along
//! an element independently and returns true iff they all agree:
//!   1. the definitional search succeeds,
//!   2. a <=R a*a' and (a*a')# exists,
//!   3. a <=L a'*a and (a'*a)# exists,
//!   4. a*a'*a H a,
//!   5. a <=H a*a'*a.
bool check_thexist_equivalence(const FiniteSemigroup& S, const GreenData& G,
                               element a_prime, element a);

}  // namespace finsemi

#endif  // FINSEMI_INVERSES_HPP_
