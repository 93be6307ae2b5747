#ifndef FINSEMI_CONSTRUCTIONS_HPP_
#define FINSEMI_CONSTRUCTIONS_HPP_

#include <string>
#include <vector>

#include "finsemi/semigroup.hpp"

namespace finsemi {

//! A partial injective map on {1..k}. Entry image[x-1] is the image of x,
//! or 0 when x is outside the domain; defined entries are pairwise distinct.
class PartialInjection {
 public:
  //! The empty map of the given degree.
  explicit PartialInjection(unsigned degree);

  //! Builds from the image array (1-based targets, 0 = undefined); throws
  //! PreconditionError when the defined entries repeat or overflow.
  static PartialInjection from_image(std::vector<unsigned> image);

  static PartialInjection identity(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(image_.size()); }

  //! Image of x (1-based); 0 when x is not in the domain.
  unsigned apply(unsigned x) const { return image_[x - 1]; }

  //! Left-to-right composition: (f.then(g))(x) = g(f(x)) where defined.
  PartialInjection then(const PartialInjection& g) const;

  std::vector<unsigned> domain() const;
  std::vector<unsigned> image_values() const;

  //! Display string: "0" for the empty map, "id{3,4}" for a restricted
  //! identity, "[1>2,2>1]" otherwise.
  std::string display() const;

  //! Sort key: the image tuple with undefined treated as the largest value,
  //! so identities come first and the empty map last.
  std::vector<unsigned> sort_key() const;

  bool operator==(const PartialInjection&) const = default;

 private:
  std::vector<unsigned> image_;
};

//! The symmetric inverse monoid I_k with its element legend. Elements are
//! ordered by PartialInjection::sort_key, so index 0 is the identity map.
struct SymmetricInverseMonoid {
  FiniteSemigroup semigroup;
  std::vector<PartialInjection> legend;

  //! Index of a partial injection in the legend; throws PreconditionError
  //! when absent.
  element index_of(const PartialInjection& p) const;
};

//! All partial injections on {1..k} under left-to-right composition;
//! throws DegreeTooLargeError outside 1 <= k <= 4 (order grows as
//! sum C(k,j)^2 j!: 2, 7, 34, 209).
SymmetricInverseMonoid symmetric_inverse_monoid(unsigned degree);

//! The seven-element subsemigroup {0, e, f, a, b, g, h} of I_4 built from
//! e:1->1, f:2->2, g:id{3,4}, a:1->2, b:2->1, h:3<->4 — a completely
//! inverse semigroup that is neither completely regular nor combinatorial.
FiniteSemigroup completely_inverse_s7();

//! The semigroup G u {a} over a group G with a*a = g*g, a*h = g*h and
//! h*a = h*g for all h in G. Throws NotAGroupError when G is not a group;
//! associativity of the result is re-checked on construction.
FiniteSemigroup group_adjoin(const FiniteSemigroup& G, element g);

FiniteSemigroup cyclic_group(unsigned m);
FiniteSemigroup left_zero(unsigned m);
FiniteSemigroup right_zero(unsigned m);
FiniteSemigroup null_semigroup(unsigned m);
FiniteSemigroup rectangular_band(unsigned p, unsigned q);
FiniteSemigroup semilattice_chain(unsigned m);

//! Builds a named stock semigroup. Accepted names (with '-' or '_'):
//! cyclic_group(m), left_zero(m), right_zero(m), null(m),
//! rectangular_band(p, q), semilattice_chain(m), symmetric_inverse(k),
//! s7(), group_adjoin(m, g) with G = cyclic_group(m).
//! Throws UnknownConstructionError for unknown names and PreconditionError
//! for a wrong parameter count.
FiniteSemigroup stock(const std::string& name,
                      const std::vector<unsigned>& params);

//! The stock construction names accepted above.
const std::vector<std::string>& stock_names();

}  // namespace finsemi

#endif  // FINSEMI_CONSTRUCTIONS_HPP_
