#ifndef FINSEMI_GREEN_HPP_
#define FINSEMI_GREEN_HPP_

#include <cstddef>
#include <vector>

#include "finsemi/semigroup.hpp"

namespace finsemi {

//! Dense square boolean matrix.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(unsigned n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

  bool at(element a, element b) const {
    return data_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  void set(element a, element b) { data_[static_cast<std::size_t>(a) * n_ + b] = 1; }
  unsigned dim() const { return n_; }

  bool operator==(const BoolMatrix&) const = default;

 private:
  unsigned n_ = 0;
  std::vector<char> data_;
};

//! Green's preorders and relations of a finite semigroup.
//!
//! leq_l(a, b) holds iff a = b or a = x*b for some x (i.e. a is in the
//! principal left ideal of b); leq_r dually; leq_h is the conjunction.
//! The K-classes are the symmetrizations, stored both as dense class-id
//! arrays (class ids assigned by first occurrence, so block k of the
//! partition is the one whose minimum element is the k-th smallest) and as
//! explicit block lists.
struct GreenData {
  BoolMatrix leqL, leqR, leqH;
  std::vector<unsigned> classL, classR, classH;
  std::vector<std::vector<element>> blocksL, blocksR, blocksH;

  bool leq_l(element a, element b) const { return leqL.at(a, b); }
  bool leq_r(element a, element b) const { return leqR.at(a, b); }
  bool leq_h(element a, element b) const { return leqH.at(a, b); }
  bool rel_l(element a, element b) const { return classL[a] == classL[b]; }
  bool rel_r(element a, element b) const { return classR[a] == classR[b]; }
  bool rel_h(element a, element b) const { return classH[a] == classH[b]; }
};

GreenData compute_green(const FiniteSemigroup& S);

//! The H-class of a.
ElementSet h_class(const FiniteSemigroup& S, const GreenData& G, element a);

//! True iff a*b lies in R_a intersect L_b. Also evaluated through the
//! equivalent test "L_a intersect R_b contains an idempotent"; the two are
//! compared and InternalInconsistencyError is thrown if they ever disagree.
bool is_trace_product(const FiniteSemigroup& S, const GreenData& G, element a,
                      element b);

//! For a trace product a*b, checks the four set equalities
//! H_a H_b = H_{ab} = a H_b = H_a b elementwise. Throws PreconditionError
//! when a*b is not a trace product.
bool h_class_product_check(const FiniteSemigroup& S, const GreenData& G,
                           element a, element b);

}  // namespace finsemi

#endif  // FINSEMI_GREEN_HPP_
