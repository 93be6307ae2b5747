#ifndef FINSEMI_CONGRUENCE_HPP_
#define FINSEMI_CONGRUENCE_HPP_

#include <string>
#include <vector>

#include "finsemi/green.hpp"
#include "finsemi/semigroup.hpp"

namespace finsemi {

//! An equivalence relation on {0..n-1}, stored as a class-id array.
//!
//! Class ids are normalized by first occurrence (the id of the block of 0 is
//! 0, the next new block seen while scanning upward gets 1, ...), so equal
//! relations compare equal.
class Relation {
 public:
  Relation() = default;

  //! Normalizes the ids; every element must carry some id.
  static Relation from_class_ids(std::vector<unsigned> class_id);

  //! Builds from a pairwise matrix; throws PreconditionError when the matrix
  //! is not reflexive, symmetric and transitive.
  static Relation from_pair_matrix(const std::vector<std::vector<bool>>& related);

  static Relation identity(unsigned order);
  static Relation universal(unsigned order);

  unsigned order() const { return static_cast<unsigned>(class_id_.size()); }
  unsigned block_of(element a) const { return class_id_[a]; }
  bool related(element a, element b) const { return class_id_[a] == class_id_[b]; }
  std::size_t block_count() const;

  //! Blocks sorted by minimum member; members ascending.
  std::vector<std::vector<element>> blocks() const;

  //! True if every block of this relation lies inside a block of coarser.
  bool refines(const Relation& coarser) const;

  bool operator==(const Relation&) const = default;

 private:
  std::vector<unsigned> class_id_;
};

//! The H-relation of S as a Relation.
Relation h_relation(const GreenData& G);

//! Serializes as a block list, e.g. "{0} {e,b} {a,f}".
std::string to_text(const Relation& rel, const FiniteSemigroup& S);

//! True iff rel is compatible with the product on both sides.
bool is_congruence(const FiniteSemigroup& S, const Relation& rel);

//! True iff Green's relation H is a congruence on S.
bool is_cryptic(const FiniteSemigroup& S, const GreenData& G);

//! The quotient semigroup S/rel. Blocks become elements, ordered by minimum
//! representative; block names list the member names. Throws
//! NotACongruenceError when rel is not a congruence. Well-definedness of the
//! block product is asserted directly.
FiniteSemigroup quotient(const FiniteSemigroup& S, const Relation& rel);

//! The map a -> a^{-1} of an inverse semigroup; throws NotInverseError when
//! some element fails to have exactly one reflexive inverse.
std::vector<element> unique_inverses(const FiniteSemigroup& S);

//! The congruence mu: (a, b) related iff a^{-1}ea H b^{-1}eb for every
//! idempotent e. Requires S inverse. The result is cross-checked against the
//! kernel form {a^{-1}a = b^{-1}b and ab^{-1} in Z(E(S))};
//! InternalInconsistencyError signals any disagreement.
Relation mu(const FiniteSemigroup& S);
Relation mu(const FiniteSemigroup& S, const GreenData& G);

//! The two forms of mu individually (for independent comparison in tests).
Relation mu_conjugation_form(const FiniteSemigroup& S, const GreenData& G);
Relation mu_kernel_form(const FiniteSemigroup& S, const GreenData& G);

//! (a, b) related iff a^{-1}ha H b^{-1}hb for every group invertible h.
//! Requires S inverse.
Relation nu(const FiniteSemigroup& S, const GreenData& G);

//! A candidate Kernel: an inverse, self-conjugate subsemigroup K with
//! E(S) included in K included in Z(E(S)).
struct KernelCandidate {
  ElementSet members;
};

//! Checks all four Kernel conditions. Requires S inverse.
bool kernel_check(const FiniteSemigroup& S, const KernelCandidate& K);

//! The idempotent-separating congruence determined by a Kernel:
//! (a, b) related iff a^{-1}a = b^{-1}b and ab^{-1} in K. Requires S inverse
//! and a valid Kernel (NotAKernelError otherwise). That the result is an
//! idempotent-separating congruence contained in H is asserted.
Relation rho_k(const FiniteSemigroup& S, const KernelCandidate& K);
Relation rho_k(const FiniteSemigroup& S, const GreenData& G,
               const KernelCandidate& K);

//! Brute-force join of all congruences contained in H, built from principal
//! congruences of H-related pairs. Test oracle for mu; bounded because the
//! pair closure is expensive (BoundExceededError above the bound).
Relation max_congruence_in_h_oracle(const FiniteSemigroup& S,
                                    const GreenData& G, unsigned bound = 8);

//! The smallest congruence identifying a and b (pair closure under
//! translations and transitivity).
Relation principal_congruence(const FiniteSemigroup& S, element a, element b);

}  // namespace finsemi

#endif  // FINSEMI_CONGRUENCE_HPP_
