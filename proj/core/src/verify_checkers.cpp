// Executable checkers for every registered statement. Each checker evaluates
// its statement's hypotheses itself and reports "vacuous" when they are never
// met, "holds" when every exercised instance checks out, and "fails" with the
// lexicographically first witness otherwise.

#include <algorithm>
#include <set>
#include <sstream>

#include "finsemi/congruence.hpp"
#include "finsemi/errors.hpp"
#include "verify_internal.hpp"

namespace finsemi {
namespace detail {

namespace {

using Witness = std::vector<std::pair<std::string, element>>;

TheoremReport holds(std::size_t instances, const std::string& what) {
  TheoremReport r;
  r.outcome = Outcome::holds;
  r.detail = "checked " + std::to_string(instances) + " instance(s) of " + what;
  return r;
}

TheoremReport vacuous(const std::string& why) {
  TheoremReport r;
  r.outcome = Outcome::vacuous;
  r.detail = "hypothesis not met: " + why;
  return r;
}

TheoremReport fails(const VerifyContext& c, const Witness& witness,
                    const std::string& what) {
  TheoremReport r;
  r.outcome = Outcome::fails;
  std::ostringstream os;
  os << "violated: " << what << " at (";
  bool first = true;
  for (const auto& [role, el] : witness) {
    if (!first) {
      os << ", ";
    }
    first = false;
    const std::string name =
        el == c.S.order() ? std::string("1") : c.S.display_name(el);
    os << role << "=" << name;
    r.witness.emplace_back(role, name);
  }
  os << "); either an implementation bug or a genuine counterexample to the "
        "registered statement";
  r.detail = os.str();
  return r;
}

// Named witness roles rarely need elements of S at all (flag-level
// statements); this reporter takes pre-rendered strings instead.
TheoremReport fails_named(const std::vector<std::pair<std::string, std::string>>& witness,
                          const std::string& what) {
  TheoremReport r;
  r.outcome = Outcome::fails;
  r.witness = witness;
  std::ostringstream os;
  os << "violated: " << what << " at (";
  bool first = true;
  for (const auto& [role, name] : witness) {
    if (!first) {
      os << ", ";
    }
    first = false;
    os << role << "=" << name;
  }
  os << "); either an implementation bug or a genuine counterexample to the "
        "registered statement";
  r.detail = os.str();
  return r;
}

// Witness for a false classification flag, taken from the definitional scan.
std::vector<std::pair<std::string, std::string>> flag_witness(
    const VerifyContext& c, const std::string& flag) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("flag", flag);
  const auto it = c.classification.counterexamples.find(flag);
  if (it != c.classification.counterexamples.end()) {
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      out.emplace_back("x" + std::to_string(i), c.S.display_name(it->second[i]));
    }
  }
  return out;
}

// Product in S^1; the formal unit is represented by the sentinel value n.
element mul1(const VerifyContext& c, element x, element y) {
  const unsigned n = c.S.order();
  if (x == n) {
    return y;
  }
  if (y == n) {
    return x;
  }
  return c.product(x, y);
}

std::set<element> set_product(const VerifyContext& c,
                              const std::set<element>& X,
                              const std::set<element>& Y) {
  std::set<element> out;
  for (element x : X) {
    for (element y : Y) {
      out.insert(c.product(x, y));
    }
  }
  return out;
}

std::set<element> h_class_set(const VerifyContext& c, element a) {
  const std::vector<element>& block = c.green.blocksH[c.green.classH[a]];
  return std::set<element>(block.begin(), block.end());
}

bool is_trace_pair(const VerifyContext& c, element a, element b) {
  const element ab = c.product(a, b);
  return c.green.rel_r(ab, a) && c.green.rel_l(ab, b);
}

// H(S) as a Clifford semigroup: product-closed and, standalone, inverse and
// completely regular.
bool hs_is_clifford_semigroup(const VerifyContext& c) {
  if (!is_subsemigroup(c.S, c.group_invertible)) {
    return false;
  }
  const FiniteSemigroup sub = restrict_to(c.S, c.group_invertible);
  const GreenData Gs = compute_green(sub);
  if (group_invertible_set(sub, Gs).size() != sub.order()) {
    return false;
  }
  for (element a = 0; a < sub.order(); ++a) {
    if (inverses_of(sub, a).size() != 1) {
      return false;
    }
  }
  return true;
}

// H congruence restricted to H(S): a,b,c in H(S), a H b => ca H cb, ac H bc.
bool restricted_h_congruence(const VerifyContext& c) {
  for (element a : c.group_invertible) {
    for (element b : c.group_invertible) {
      if (!c.rel_h(a, b)) {
        continue;
      }
      for (element x : c.group_invertible) {
        if (!c.rel_h(c.product(x, a), c.product(x, b))
            || !c.rel_h(c.product(a, x), c.product(b, x))) {
          return false;
        }
      }
    }
  }
  return true;
}

// "H is a congruence and S/H is inverse", evaluated safely in that order.
bool quotient_by_h_cond(const VerifyContext& c) {
  if (!c.classification.cryptic) {
    return false;
  }
  const FiniteSemigroup q = quotient(c.S, h_relation(c.green));
  for (element a = 0; a < q.order(); ++a) {
    if (inverses_of(q, a).size() != 1) {
      return false;
    }
  }
  return true;
}

// Product-closed subsets: exhaustive for order <= 12, otherwise the closures
// of all generating sets of size <= 2.
std::vector<ElementSet> closed_subsets(const FiniteSemigroup& S) {
  std::vector<ElementSet> out;
  const unsigned n = S.order();
  if (n <= 12) {
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
      std::vector<element> members;
      for (element a = 0; a < n; ++a) {
        if (mask >> a & 1) {
          members.push_back(a);
        }
      }
      ElementSet X(std::move(members), n);
      if (is_subsemigroup(S, X)) {
        out.push_back(std::move(X));
      }
    }
  } else {
    std::set<std::vector<element>> seen;
    for (element a = 0; a < n; ++a) {
      for (element b = a; b < n; ++b) {
        const ElementSet closure =
            subsemigroup_closure(S, ElementSet({a, b}, n));
        if (seen.insert(closure.members()).second) {
          out.push_back(closure);
        }
      }
    }
    std::sort(out.begin(), out.end(),
              [](const ElementSet& x, const ElementSet& y) {
                return x.members() < y.members();
              });
  }
  return out;
}

bool subsemigroup_is_inverse(const FiniteSemigroup& sub) {
  for (element a = 0; a < sub.order(); ++a) {
    if (inverses_of(sub, a).size() != 1) {
      return false;
    }
  }
  return true;
}

// ------------------------------------------------------------------ checkers

TheoremReport chk_g_cancel(const VerifyContext& c) {
  const unsigned n = c.S.order();
  std::size_t count = 0;
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      const bool left = c.green.leq_l(a, b);
      const bool right = c.green.leq_r(a, b);
      if (!left && !right) {
        continue;
      }
      ++count;
      for (element x = 0; x <= n; ++x) {
        for (element y = 0; y <= n; ++y) {
          if (left && mul1(c, b, x) == mul1(c, b, y)
              && mul1(c, a, x) != mul1(c, a, y)) {
            return fails(c, {{"a", a}, {"b", b}, {"x", x}, {"y", y}},
                         "a <=L b and bx = by but ax != ay");
          }
          if (right && mul1(c, x, b) == mul1(c, y, b)
              && mul1(c, x, a) != mul1(c, y, a)) {
            return fails(c, {{"a", a}, {"b", b}, {"x", x}, {"y", y}},
                         "a <=R b and xb = yb but xa != ya");
          }
        }
      }
    }
  }
  return holds(count, "cancellation along the L/R preorders");
}

TheoremReport chk_g_elem(const VerifyContext& c) {
  const unsigned n = c.S.order();
  for (element a = 0; a < n; ++a) {
    for (element x = 0; x < n; ++x) {
      const element xa = c.product(x, a);
      const element ax = c.product(a, x);
      const element axa = c.product(ax, a);
      if (!c.green.leq_l(xa, a) || !c.green.leq_r(ax, a)
          || !c.green.leq_h(axa, a)) {
        return fails(c, {{"a", a}, {"c", x}},
                     "ca <=L a, ac <=R a, aca <=H a");
      }
    }
  }
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      for (element x = 0; x < n; ++x) {
        if (c.green.leq_l(a, b)
            && !c.green.leq_l(c.product(a, x), c.product(b, x))) {
          return fails(c, {{"a", a}, {"b", b}, {"c", x}},
                       "a <=L b implies ac <=L bc");
        }
        if (c.green.leq_r(a, b)
            && !c.green.leq_r(c.product(x, a), c.product(x, b))) {
          return fails(c, {{"a", a}, {"b", b}, {"c", x}},
                       "a <=R b implies ca <=R cb");
        }
      }
    }
  }
  return holds(static_cast<std::size_t>(n) * n, "elementary preorder bounds");
}

TheoremReport chk_g_lreg(const VerifyContext& c) {
  const unsigned n = c.S.order();
  std::size_t count = 0;
  for (element b = 0; b < n; ++b) {
    const ElementSet& vb = c.inverse_sets[b];
    if (vb.empty()) {
      continue;
    }
    for (element a = 0; a < n; ++a) {
      ++count;
      const bool lhs = c.green.leq_l(a, b);
      bool some = false;
      bool every = true;
      for (element bp : vb) {
        const bool eq = c.product(c.product(a, bp), b) == a;
        some = some || eq;
        every = every && eq;
      }
      if (lhs != some || some != every) {
        return fails(c, {{"a", a}, {"b", b}},
                     "for regular b: a <=L b iff a = ab'b for one (any) b' in V(b)");
      }
    }
  }
  if (c.classification.inverse) {
    const std::vector<element> inv = unique_inverses(c.S);
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        if (c.green.rel_l(a, b)
            != (c.product(inv[a], a) == c.product(inv[b], b))) {
          return fails(c, {{"a", a}, {"b", b}},
                       "in an inverse semigroup: a L b iff a^-1 a = b^-1 b");
        }
      }
    }
  }
  if (count == 0) {
    return vacuous("no regular element");
  }
  return holds(count, "the regular-element description of <=L");
}

TheoremReport chk_g_cliff(const VerifyContext& c) {
  const unsigned n = c.S.order();
  for (element a = 0; a < n; ++a) {
    const bool has_sharp = c.sharp[a].has_value();
    const bool h_square = c.rel_h(a, c.product(a, a));
    // H_a is a group: closed with an identity and inverses.
    const std::set<element> Ha = h_class_set(c, a);
    bool group = true;
    for (element x : Ha) {
      for (element y : Ha) {
        if (Ha.count(c.product(x, y)) == 0) {
          group = false;
        }
      }
    }
    if (group) {
      std::optional<element> ident;
      for (element e : Ha) {
        if (std::all_of(Ha.begin(), Ha.end(), [&](element x) {
              return c.product(e, x) == x && c.product(x, e) == x;
            })) {
          ident = e;
        }
      }
      if (!ident.has_value()) {
        group = false;
      } else {
        for (element x : Ha) {
          if (std::none_of(Ha.begin(), Ha.end(), [&](element y) {
                return c.product(x, y) == *ident && c.product(y, x) == *ident;
              })) {
            group = false;
          }
        }
      }
    }
    if (has_sharp != h_square || h_square != group) {
      return fails(c, {{"a", a}},
                   "a# exists iff a H a^2 iff H_a is a group");
    }
  }
  return holds(n, "the three-way group-invertibility criterion");
}

TheoremReport chk_g_regpair_h(const VerifyContext& c) {
  std::size_t count = 0;
  for (element a = 0; a < c.S.order(); ++a) {
    for (element ap : c.inverse_sets[a]) {
      ++count;
      if ((c.product(a, ap) == c.product(ap, a)) != c.rel_h(a, ap)) {
        return fails(c, {{"a", a}, {"a'", ap}},
                     "for a regular pair: aa' = a'a iff a H a'");
      }
    }
  }
  if (count == 0) {
    return vacuous("no regular pair");
  }
  return holds(count, "commuting regular pairs being H-related");
}

TheoremReport chk_eh_union(const VerifyContext& c) {
  const unsigned n = c.S.order();
  std::vector<element> idempotents_mod_h;
  for (element x = 0; x < n; ++x) {
    if (c.rel_h(c.product(x, x), x)) {
      idempotents_mod_h.push_back(x);
    }
  }
  // group_invertible_set already cross-checks the H-class union form.
  if (ElementSet(idempotents_mod_h, n) != c.group_invertible) {
    for (element x = 0; x < n; ++x) {
      const bool in_eh = c.rel_h(c.product(x, x), x);
      if (in_eh != c.group_invertible.contains(x)) {
        return fails(c, {{"x", x}}, "E(S)[H] = H(S)");
      }
    }
  }
  std::vector<element> by_sharp;
  for (element x = 0; x < n; ++x) {
    if (c.sharp[x].has_value()) {
      by_sharp.push_back(x);
    }
  }
  if (ElementSet(by_sharp, n) != c.group_invertible) {
    return fails(c, {{"x", by_sharp.empty() ? 0 : by_sharp.front()}},
                 "H(S) equals the set of elements with a group inverse");
  }
  return holds(n, "E(S)[H] = H(S) = union of H-classes of idempotents");
}

TheoremReport chk_iae_def_uniq(const VerifyContext& c) {
  const unsigned n = c.S.order();
  for (element a = 0; a < n; ++a) {
    for (element ap = 0; ap < n; ++ap) {
      if (inverse_along_search(c.S, c.green, ap, a).size() > 1) {
        return fails(c, {{"a'", ap}, {"a", a}},
                     "the inverse along an element is unique when it exists");
      }
    }
  }
  return holds(static_cast<std::size_t>(n) * n, "uniqueness of the inverse along");
}

TheoremReport chk_iae_outer(const VerifyContext& c) {
  const unsigned n = c.S.order();
  for (element a = 0; a < n; ++a) {
    for (element ap = 0; ap < n; ++ap) {
      const std::vector<element> defining =
          inverse_along_search(c.S, c.green, ap, a);
      std::vector<element> outer;
      for (element b = 0; b < n; ++b) {
        if (c.product(c.product(b, ap), b) == b && c.rel_h(b, a)) {
          outer.push_back(b);
        }
      }
      if (defining != outer) {
        return fails(c, {{"a'", ap}, {"a", a}},
                     "b a' b = b with b H a characterizes the inverse along");
      }
    }
  }
  return holds(static_cast<std::size_t>(n) * n,
               "the outer characterization of the inverse along");
}

TheoremReport chk_thexist(const VerifyContext& c) {
  const unsigned n = c.S.order();
  for (element a = 0; a < n; ++a) {
    for (element ap = 0; ap < n; ++ap) {
      if (!check_thexist_equivalence(c.S, c.green, ap, a)) {
        return fails(c, {{"a'", ap}, {"a", a}},
                     "the five existence conditions for the inverse along");
      }
      const std::vector<element> found =
          inverse_along_search(c.S, c.green, ap, a);
      if (!found.empty()) {
        const element apa = c.product(ap, a);
        const element aap = c.product(a, ap);
        if (!c.sharp[apa].has_value() || !c.sharp[aap].has_value()
            || c.product(a, *c.sharp[apa]) != found.front()
            || c.product(*c.sharp[aap], a) != found.front()) {
          return fails(c, {{"a'", ap}, {"a", a}},
                       "b = a(a'a)# = (aa')#a when the inverse along exists");
        }
      }
    }
  }
  return holds(static_cast<std::size_t>(n) * n,
               "the five-way existence equivalence and the closed form");
}

TheoremReport chk_cor_h(const VerifyContext& c) {
  const unsigned n = c.S.order();
  for (element a = 0; a < n; ++a) {
    const std::set<element> Ha = h_class_set(c, a);
    for (element ap = 0; ap < n; ++ap) {
      const bool lhs = c.rel_h(c.product(c.product(a, ap), a), a);
      const bool rhs = set_product(c, set_product(c, Ha, {ap}), Ha) == Ha;
      if (lhs != rhs) {
        return fails(c, {{"a", a}, {"a'", ap}},
                     "aa'a H a iff H_a a' H_a = H_a");
      }
    }
  }
  return holds(static_cast<std::size_t>(n) * n, "the H-class sandwich equality");
}

TheoremReport chk_th_trace(const VerifyContext& c) {
  const unsigned n = c.S.order();
  for (element a = 0; a < n; ++a) {
    for (element ap = 0; ap < n; ++ap) {
      const bool c1 = c.in_vh(ap, a);
      const std::vector<element> b = inverse_along_search(c.S, c.green, ap, a);
      const bool c2 =
          b.size() == 1
          && c.product(c.product(ap, b.front()), ap) == ap
          && c.product(c.product(b.front(), ap), b.front()) == b.front();
      const bool c3 = is_trace_pair(c, a, ap) && is_trace_pair(c, ap, a);
      if (c1 != c2 || c2 != c3) {
        return fails(c, {{"a", a}, {"a'", ap}},
                     "V(a)[H] matches the trace-product characterization");
      }
    }
  }
  return holds(static_cast<std::size_t>(n) * n,
               "the trace-product characterization of V(a)[H]");
}

TheoremReport chk_prop_hclass(const VerifyContext& c) {
  const unsigned n = c.S.order();
  std::size_t count = 0;
  for (element a = 0; a < n; ++a) {
    const std::set<element> Ha = h_class_set(c, a);
    for (element ap = 0; ap < n; ++ap) {
      if (!c.in_vh(ap, a)) {
        continue;
      }
      ++count;
      const std::set<element> Hap = h_class_set(c, ap);
      if (set_product(c, set_product(c, Ha, Hap), Ha) != Ha
          || set_product(c, set_product(c, {a}, Hap), {a}) != Ha) {
        return fails(c, {{"a", a}, {"a'", ap}},
                     "H_a H_a' H_a = H_a = a H_a' a for regular pairs modulo H");
      }
    }
  }
  if (count == 0) {
    return vacuous("no regular pair modulo H");
  }
  return holds(count, "the H-class sandwich for regular pairs modulo H");
}

TheoremReport chk_prop_sandwich(const VerifyContext& c) {
  const unsigned n = c.S.order();
  std::size_t count = 0;
  for (element a = 0; a < n; ++a) {
    std::vector<element> ah;
    for (element x = 0; x < n; ++x) {
      if (c.in_ah(x, a)) {
        ah.push_back(x);
      }
    }
    for (element ap : ah) {
      ++count;
      if (!c.group_invertible.contains(c.product(ap, a))
          || !c.group_invertible.contains(c.product(a, ap))) {
        return fails(c, {{"a", a}, {"a'", ap}},
                     "a' in A(a)[H] implies a'a, aa' in H(S)");
      }
    }
    for (element ap : ah) {
      for (element app : ah) {
        if (!c.in_vh(c.product(c.product(ap, a), app), a)) {
          return fails(c, {{"a", a}, {"a'", ap}, {"a''", app}},
                       "a', a'' in A(a)[H] implies a' a a'' in V(a)[H]");
        }
      }
    }
  }
  if (count == 0) {
    return vacuous("no associate modulo H");
  }
  return holds(count, "the sandwich closure of associates modulo H");
}

TheoremReport chk_prop_comm_h(const VerifyContext& c) {
  std::size_t count = 0;
  for (element a = 0; a < c.S.order(); ++a) {
    for (element ap = 0; ap < c.S.order(); ++ap) {
      if (!c.in_vh(ap, a)) {
        continue;
      }
      ++count;
      if (c.rel_h(c.product(ap, a), c.product(a, ap)) != c.rel_h(ap, a)) {
        return fails(c, {{"a", a}, {"a'", ap}},
                     "for a' in V(a)[H]: a'a H aa' iff a' H a");
      }
    }
  }
  if (count == 0) {
    return vacuous("no regular pair modulo H");
  }
  return holds(count, "H-commutation of the two products of a pair modulo H");
}

TheoremReport chk_lem_hreg(const VerifyContext& c) {
  const unsigned n = c.S.order();
  bool all_ah = true;
  element first_empty = 0;
  for (element a = 0; a < n && all_ah; ++a) {
    bool any = false;
    for (element x = 0; x < n && !any; ++x) {
      any = c.in_ah(x, a);
    }
    if (!any) {
      all_ah = false;
      first_empty = a;
    }
  }
  if (c.classification.regular != all_ah) {
    return fails(c, {{"a", first_empty}},
                 "S regular iff every A(a)[H] is nonempty");
  }
  return holds(n, "regularity being equivalent to regularity modulo H");
}

TheoremReport chk_th_weakinv(const VerifyContext& c) {
  const unsigned n = c.S.order();
  std::size_t count = 0;
  for (element a = 0; a < n; ++a) {
    if (c.inverse_sets[a].empty()) {
      continue;
    }
    ++count;
    const bool unique_inverse = c.inverse_sets[a].size() == 1;
    std::vector<element> vh;
    for (element x = 0; x < n; ++x) {
      if (c.in_vh(x, a)) {
        vh.push_back(x);
      }
    }
    bool h_unique = true;
    for (element x : vh) {
      for (element y : vh) {
        h_unique = h_unique && c.rel_h(x, y);
      }
    }
    if (unique_inverse != h_unique) {
      return fails(c, {{"a", a}},
                   "uniqueness of V(a) iff H-uniqueness of V(a)[H]");
    }
  }
  if (count == 0) {
    return vacuous("no regular element");
  }
  return holds(count, "the weak-inverse uniqueness equivalence");
}

TheoremReport chk_lem_ciisi(const VerifyContext& c) {
  if (!c.classification.h_commutative_HS) {
    return vacuous("H(S) is not an H-commutative set");
  }
  for (element e : c.idempotent_set) {
    for (element f : c.idempotent_set) {
      if (c.product(e, f) != c.product(f, e)) {
        return fails(c, {{"e", e}, {"f", f}},
                     "H-commutative H(S) forces commuting idempotents");
      }
    }
  }
  return holds(c.idempotent_set.size() * c.idempotent_set.size(),
               "commutativity of E(S) under H-commutative H(S)");
}

TheoremReport chk_reilly(const VerifyContext& c) {
  if (!c.classification.regular) {
    return vacuous("S is not regular");
  }
  const bool c1 = c.classification.e_semigroup;
  bool c2 = true;
  for (element e : c.idempotent_set) {
    for (element x : c.inverse_sets[e]) {
      c2 = c2 && c.idempotent_set.contains(x);
    }
  }
  bool c3 = true;
  for (element a = 0; a < c.S.order() && c3; ++a) {
    for (element ap : c.inverse_sets[a]) {
      for (element b = 0; b < c.S.order(); ++b) {
        for (element bp : c.inverse_sets[b]) {
          const element ab = c.product(a, b);
          const element bpap = c.product(bp, ap);
          if (c.product(c.product(ab, bpap), ab) != ab
              || c.product(c.product(bpap, ab), bpap) != bpap) {
            c3 = false;
          }
        }
      }
    }
  }
  if (c1 != c2 || c2 != c3) {
    return fails_named({{"E*E in E", c1 ? "true" : "false"},
                        {"inverses of idempotents idempotent", c2 ? "true" : "false"},
                        {"reversed pairs regular", c3 ? "true" : "false"}},
                       "the three orthodoxy characterizations agree");
  }
  return holds(3, "the orthodoxy characterizations");
}

TheoremReport chk_th_orthodox(const VerifyContext& c) {
  const unsigned n = c.S.order();
  std::optional<Witness> lhs_witness;
  for (element a = 0; a < n && !lhs_witness; ++a) {
    for (element b = 0; b < n && !lhs_witness; ++b) {
      const element ab = c.product(a, b);
      for (element ap = 0; ap < n && !lhs_witness; ++ap) {
        if (!c.in_vh(ap, a)) {
          continue;
        }
        for (element bp = 0; bp < n; ++bp) {
          if (c.in_vh(bp, b) && !c.in_vh(c.product(bp, ap), ab)) {
            lhs_witness = Witness{{"a", a}, {"b", b}, {"a'", ap}, {"b'", bp}};
            break;
          }
        }
      }
    }
  }
  const bool lhs = !lhs_witness.has_value();
  const bool rhs = c.classification.solid;
  if (lhs != rhs) {
    if (lhs_witness) {
      return fails(c, *lhs_witness,
                   "reversed products of inverses modulo H iff H(S) closed");
    }
    return fails_named(flag_witness(c, "solid"),
                       "reversed products of inverses modulo H iff H(S) closed");
  }
  return holds(1, "the antihomomorphism property iff H(S) is a semigroup");
}

TheoremReport chk_lem_hic_3(const VerifyContext& c) {
  if (!c.classification.h_inverse_closed) {
    return vacuous("S is not H-inverse-closed");
  }
  const unsigned n = c.S.order();
  const auto regular = [&](element x) { return !c.associate_sets[x].empty(); };
  std::size_t count = 0;
  for (element e : c.idempotent_set) {
    for (element f : c.idempotent_set) {
      const element ef = c.product(e, f);
      if (!regular(ef)) {
        continue;
      }
      ++count;
      if (!c.group_invertible.contains(ef)) {
        return fails(c, {{"e", e}, {"f", f}},
                     "regular products of idempotents are group invertible");
      }
    }
  }
  // Parts 2 and 3 silently rest on part 1 applied to h = a'a*bb', so they
  // only bind on instances where that idempotent product is regular. Without
  // the guard both parts have order-4 counterexamples (non-regular S with
  // a'a*bb' non-regular); on regular semigroups the guard always holds.
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      const element ab = c.product(a, b);
      for (element ap : c.associate_sets[a]) {
        const element apa = c.product(ap, a);
        for (element bp : c.associate_sets[b]) {
          if (!regular(c.product(apa, c.product(b, bp)))) {
            continue;
          }
          ++count;
          if (!c.in_ah(c.product(bp, ap), ab)) {
            return fails(c, {{"a", a}, {"b", b}, {"a'", ap}, {"b'", bp}},
                         "b'a' lands in A(ab)[H]");
          }
        }
      }
      for (element ap : c.inverse_sets[a]) {
        const element apa = c.product(ap, a);
        for (element bp : c.inverse_sets[b]) {
          const element bbp = c.product(b, bp);
          if (!regular(c.product(apa, bbp)) || !regular(c.product(bbp, apa))) {
            continue;
          }
          ++count;
          if (!c.in_vh(c.product(bp, ap), ab)) {
            return fails(c, {{"a", a}, {"b", b}, {"a'", ap}, {"b'", bp}},
                         "b'a' lands in V(ab)[H]");
          }
        }
      }
    }
  }
  return holds(count, "the three consequences of H-inverse-closedness");
}

TheoremReport chk_th_hic_suff(const VerifyContext& c) {
  const bool solid = c.classification.solid;
  const bool inverse = c.classification.inverse;
  if (!solid && !inverse) {
    return vacuous("S is neither solid nor inverse");
  }
  if (!c.classification.h_inverse_closed) {
    return fails_named(flag_witness(c, "h_inverse_closed"),
                       "solid or inverse semigroups are H-inverse-closed");
  }
  return holds(1, "the two sufficient conditions for H-inverse-closedness");
}

TheoremReport chk_lem_rol(const VerifyContext& c) {
  std::size_t count = 0;
  for (element a : c.group_invertible) {
    const element sa = *c.sharp[a];
    for (element b : c.group_invertible) {
      const element sb = *c.sharp[b];
      const element ab = c.product(a, b);
      const element ba = c.product(b, a);
      const bool hyp = ab == c.product(c.product(b, sb), ab)
                       && ab == c.product(ab, c.product(a, sa))
                       && ba == c.product(ba, c.product(b, sb))
                       && ba == c.product(c.product(a, sa), ba);
      if (!hyp) {
        continue;
      }
      ++count;
      if (!c.group_invertible.contains(ab) || c.sharp[ab] != c.product(sb, sa)) {
        return fails(c, {{"a", a}, {"b", b}},
                     "(ab)# = b#a# under the absorption hypotheses");
      }
    }
  }
  if (count == 0) {
    return vacuous("no pair meets the absorption hypotheses");
  }
  return holds(count, "the reverse-order law under absorption");
}

TheoremReport chk_th_rol(const VerifyContext& c) {
  std::size_t count = 0;
  for (element a : c.group_invertible) {
    for (element b : c.group_invertible) {
      const element ab = c.product(a, b);
      if (!c.rel_h(c.product(b, a), ab)) {
        continue;
      }
      ++count;
      if (!c.group_invertible.contains(ab)
          || c.sharp[ab] != c.product(*c.sharp[b], *c.sharp[a])) {
        return fails(c, {{"a", a}, {"b", b}},
                     "ba H ab forces ab group invertible with (ab)# = b#a#");
      }
    }
  }
  if (count == 0) {
    return vacuous("no H-commuting pair in H(S)");
  }
  return holds(count, "the reverse-order law for H-commuting pairs");
}

TheoremReport chk_cor_ciisho(const VerifyContext& c) {
  const bool hcomm = c.classification.h_commutative_HS;
  const bool ci = c.classification.completely_inverse;
  if (!hcomm && !ci) {
    return vacuous("H(S) is not H-commutative and S is not completely inverse");
  }
  if (hcomm && !c.classification.solid) {
    return fails_named(flag_witness(c, "solid"),
                       "H-commutative H(S) is product-closed");
  }
  if (ci && !c.classification.h_orthodox) {
    return fails_named(flag_witness(c, "h_orthodox"),
                       "completely inverse semigroups are H-orthodox");
  }
  return holds(1, "closure consequences of H-commutativity");
}

TheoremReport chk_lem_rol_conv(const VerifyContext& c) {
  std::size_t count = 0;
  for (element a : c.group_invertible) {
    for (element b : c.group_invertible) {
      const element ab = c.product(a, b);
      const element ba = c.product(b, a);
      if (!c.group_invertible.contains(ab) || !c.group_invertible.contains(ba)) {
        continue;
      }
      if (c.sharp[ab] != c.product(*c.sharp[b], *c.sharp[a])
          || c.sharp[ba] != c.product(*c.sharp[a], *c.sharp[b])) {
        continue;
      }
      ++count;
      if (!c.rel_h(ab, ba)) {
        return fails(c, {{"a", a}, {"b", b}},
                     "reverse-order group inverses force ab H ba");
      }
    }
  }
  if (count == 0) {
    return vacuous("no pair satisfies both reverse-order laws");
  }
  return holds(count, "the converse reverse-order lemma");
}

TheoremReport chk_th_ihoisci(const VerifyContext& c) {
  const bool hcomm = c.classification.h_commutative_HS;
  const bool clifford_hs = hs_is_clifford_semigroup(c);
  if (hcomm != clifford_hs) {
    return fails_named({{"H(S) H-commutative", hcomm ? "true" : "false"},
                        {"H(S) Clifford semigroup", clifford_hs ? "true" : "false"}},
                       "H(S) H-commutative iff H(S) is a Clifford semigroup");
  }
  const bool ci = c.classification.completely_inverse;
  const bool rhs = c.classification.inverse && c.classification.h_orthodox;
  if (ci != rhs) {
    return fails_named(flag_witness(c, ci ? (c.classification.inverse
                                                 ? "h_orthodox"
                                                 : "inverse")
                                          : "completely_inverse"),
                       "completely inverse iff inverse and H-orthodox");
  }
  return holds(2, "both clauses of the Clifford characterization");
}

TheoremReport chk_lem_zinh(const VerifyContext& c) {
  if (!c.classification.regular) {
    return vacuous("S is not regular");
  }
  for (element z : c.classification.centralizer) {
    if (!c.group_invertible.contains(z)) {
      return fails(c, {{"z", z}}, "Z(E(S)) lies inside H(S) for regular S");
    }
  }
  return holds(c.classification.centralizer.size(),
               "the inclusion Z(E(S)) in H(S)");
}

TheoremReport chk_lem_hinz(const VerifyContext& c) {
  if (!c.classification.h_commutative_HS) {
    return vacuous("H(S) is not an H-commutative set");
  }
  for (element h : c.group_invertible) {
    if (!c.classification.centralizer.contains(h)) {
      return fails(c, {{"h", h}},
                   "H-commutative H(S) lies inside Z(E(S))");
    }
  }
  return holds(c.group_invertible.size(), "the inclusion H(S) in Z(E(S))");
}

TheoremReport chk_cor_commut(const VerifyContext& c) {
  const bool lhs = c.classification.completely_inverse;
  const bool rhs = c.classification.regular
                   && c.group_invertible == c.classification.centralizer;
  if (lhs != rhs) {
    return fails_named({{"completely_inverse", lhs ? "true" : "false"},
                        {"regular and H(S)=Z(E(S))", rhs ? "true" : "false"}},
                       "completely inverse iff regular with H(S) = Z(E(S))");
  }
  return holds(1, "the centralizer characterization");
}

TheoremReport chk_th_commut(const VerifyContext& c) {
  const bool lhs = c.classification.h_cliffordian;
  const bool rhs = c.group_invertible.subset_of(c.classification.centralizer);
  if (lhs != rhs) {
    return fails_named({{"h_cliffordian", lhs ? "true" : "false"},
                        {"H(S) in Z(E(S))", rhs ? "true" : "false"}},
                       "H-Cliffordian iff H(S) inside Z(E(S))");
  }
  return holds(1, "the non-regular centralizer characterization");
}

TheoremReport chk_cor_subsgp(const VerifyContext& c) {
  if (!c.classification.completely_inverse) {
    return vacuous("S is not completely inverse");
  }
  std::size_t count = 0;
  for (const ElementSet& X : closed_subsets(c.S)) {
    const FiniteSemigroup sub = restrict_to(c.S, X);
    if (!subsemigroup_is_inverse(sub)) {
      continue;
    }
    ++count;
    const GreenData Gs = compute_green(sub);
    const ClassificationReport sub_report = classify(sub, Gs);
    if (!sub_report.completely_inverse) {
      return fails(c, {{"t", X.members().front()}},
                   "inverse subsemigroups of completely inverse semigroups "
                   "are completely inverse");
    }
  }
  if (count == 0) {
    return vacuous("no inverse subsemigroup found");
  }
  return holds(count, "heredity to inverse subsemigroups");
}

TheoremReport chk_th_tully(const VerifyContext& c) {
  std::vector<std::pair<std::string, FiniteSemigroup>> targets;
  targets.emplace_back("S", c.S);
  if (c.classification.solid && !c.group_invertible.empty()) {
    targets.emplace_back("H(S)", restrict_to(c.S, c.group_invertible));
  }
  if (!c.idempotent_set.empty()) {
    targets.emplace_back(
        "<E(S)>", restrict_to(c.S, subsemigroup_closure(c.S, c.idempotent_set)));
  }
  for (const auto& [label, T] : targets) {
    const GreenData Gt = compute_green(T);
    const NagyCommutativity nagy =
        nagy_commutativity(T, ElementSet::full(T.order()));
    bool tully = true;
    for (element a = 0; a < T.order() && tully; ++a) {
      for (element b = 0; b < T.order() && tully; ++b) {
        tully = Gt.rel_h(T.product(a, b), T.product(b, a));
      }
    }
    const auto comm_congruence = [&](const std::vector<unsigned>& ids) {
      const Relation rel = Relation::from_class_ids(ids);
      if (!is_congruence(T, rel)) {
        return false;
      }
      const FiniteSemigroup q = quotient(T, rel);
      for (element a = 0; a < q.order(); ++a) {
        for (element b = 0; b < q.order(); ++b) {
          if (q.product(a, b) != q.product(b, a)) {
            return false;
          }
        }
      }
      return true;
    };
    const bool bad = nagy.h_commutative != (nagy.r_commutative && nagy.l_commutative)
                     || nagy.h_commutative != tully
                     || nagy.r_commutative != comm_congruence(Gt.classR)
                     || nagy.l_commutative != comm_congruence(Gt.classL)
                     || nagy.h_commutative != comm_congruence(Gt.classH);
    if (bad) {
      return fails_named({{"target", label}},
                         "the Nagy commutativity equivalences");
    }
  }
  return holds(targets.size(), "the commutativity-by-congruence equivalences");
}

TheoremReport chk_th_cicong(const VerifyContext& c) {
  const bool lhs = c.classification.completely_inverse;
  const bool rhs = c.classification.inverse && c.classification.cryptic;
  if (lhs != rhs) {
    return fails_named(flag_witness(c, lhs ? (c.classification.inverse
                                                  ? "cryptic"
                                                  : "inverse")
                                           : "completely_inverse"),
                       "completely inverse iff inverse and cryptic");
  }
  return holds(1, "the crypticity characterization");
}

TheoremReport chk_cor_lallement(const VerifyContext& c) {
  const bool lhs = c.classification.completely_inverse;
  const bool rhs = c.classification.inverse && restricted_h_congruence(c);
  if (lhs != rhs) {
    return fails_named({{"completely_inverse", lhs ? "true" : "false"},
                        {"inverse with H compatible on H(S)", rhs ? "true" : "false"}},
                       "compatibility of H on H(S) suffices for crypticity");
  }
  return holds(1, "the Lallement-style reduction to H(S)");
}

TheoremReport chk_th_nonregcong(const VerifyContext& c) {
  const bool restricted = restricted_h_congruence(c);
  if (restricted && c.classification.e_semigroup && !c.classification.solid) {
    return fails_named(flag_witness(c, "solid"),
                       "restricted compatibility plus E-semigroup forces solidity");
  }
  const bool lhs = c.classification.h_cliffordian;
  const bool rhs = c.classification.e_commutative && restricted;
  if (lhs != rhs) {
    return fails_named({{"h_cliffordian", lhs ? "true" : "false"},
                        {"E-commutative with restricted compatibility",
                         rhs ? "true" : "false"}},
                       "the non-regular congruence characterization");
  }
  return holds(2, "both parts of the non-regular congruence statement");
}

TheoremReport chk_cor_quotient(const VerifyContext& c) {
  const bool ci = c.classification.completely_inverse;
  const bool rhs = quotient_by_h_cond(c);
  if (ci != rhs) {
    return fails_named({{"completely_inverse", ci ? "true" : "false"},
                        {"cryptic with inverse quotient", rhs ? "true" : "false"}},
                       "completely inverse iff cryptic with S/H inverse");
  }
  if (ci) {
    const FiniteSemigroup q = quotient(c.S, h_relation(c.green));
    const GreenData Gq = compute_green(q);
    const ClassificationReport qr = classify(q, Gq);
    if (!qr.combinatorial || !qr.inverse || !qr.completely_inverse) {
      return fails_named({{"S/H combinatorial", qr.combinatorial ? "true" : "false"},
                          {"S/H inverse", qr.inverse ? "true" : "false"}},
                         "the quotient S/H is combinatorial and inverse");
    }
  }
  return holds(1, "the quotient characterization");
}

TheoremReport chk_cor_selfc(const VerifyContext& c) {
  if (!c.classification.completely_inverse) {
    return vacuous("S is not completely inverse");
  }
  std::size_t count = 0;
  for (element a = 0; a < c.S.order(); ++a) {
    for (element ap = 0; ap < c.S.order(); ++ap) {
      if (!c.in_vh(ap, a)) {
        continue;
      }
      ++count;
      for (element u : c.green.blocksH[c.green.classH[ap]]) {
        for (element k : c.group_invertible) {
          for (element v : c.green.blocksH[c.green.classH[a]]) {
            if (!c.group_invertible.contains(
                    c.product(c.product(u, k), v))) {
              return fails(c, {{"a", a}, {"a'", ap}, {"u", u}, {"k", k}, {"v", v}},
                           "H_a' H(S) H_a stays inside H(S)");
            }
          }
        }
      }
    }
  }
  if (count == 0) {
    return vacuous("no regular pair modulo H");
  }
  return holds(count, "self-conjugacy of H(S) across H-classes");
}

TheoremReport chk_lem_selfc(const VerifyContext& c) {
  if (!c.classification.h_commutative_HS) {
    return vacuous("H(S) is not an H-commutative set");
  }
  std::size_t count = 0;
  for (element a = 0; a < c.S.order(); ++a) {
    for (element ap = 0; ap < c.S.order(); ++ap) {
      if (!c.in_vh(ap, a)) {
        continue;
      }
      ++count;
      for (element k : c.group_invertible) {
        if (!c.group_invertible.contains(
                c.product(c.product(ap, k), a))) {
          return fails(c, {{"a", a}, {"a'", ap}, {"h", k}},
                       "a' H(S) a stays inside H(S)");
        }
      }
    }
  }
  if (count == 0) {
    return vacuous("no regular pair modulo H");
  }
  return holds(count, "self-conjugacy without regularity");
}

TheoremReport chk_cor_munu(const VerifyContext& c) {
  if (!c.classification.completely_inverse) {
    return vacuous("S is not completely inverse");
  }
  if (!kernel_check(c.S, KernelCandidate{c.group_invertible})) {
    return fails_named({{"kernel", "H(S)"}},
                       "H(S) is a Kernel on a completely inverse semigroup");
  }
  const Relation rho = rho_k(c.S, c.green, KernelCandidate{c.group_invertible});
  const Relation m = mu(c.S, c.green);
  const Relation v = nu(c.S, c.green);
  const Relation h = h_relation(c.green);
  if (!(rho == v && v == m && m == h)) {
    return fails_named({{"rho_H(S)", to_text(rho, c.S)},
                        {"nu", to_text(v, c.S)},
                        {"mu", to_text(m, c.S)},
                        {"H", to_text(h, c.S)}},
                       "rho_H(S) = nu = mu = H on completely inverse semigroups");
  }
  return holds(4, "the coincidence of the four congruences");
}

TheoremReport chk_concl_6eq(const VerifyContext& c) {
  const bool c1 = c.classification.regular && c.classification.h_commutative_HS;
  const bool c2 = c.classification.regular && hs_is_clifford_semigroup(c);
  const bool c3 = c.classification.regular
                  && c.group_invertible == c.classification.centralizer;
  const bool c4 = c.classification.inverse && c.classification.h_orthodox;
  const bool c5 = c.classification.inverse && c.classification.cryptic;
  const bool c6 = quotient_by_h_cond(c);
  const bool flag = c.classification.completely_inverse;
  if (c1 != c2 || c2 != c3 || c3 != c4 || c4 != c5 || c5 != c6 || c6 != flag) {
    const auto b = [](bool v) { return v ? "true" : "false"; };
    return fails_named({{"(1) regular, H(S) H-commutative", b(c1)},
                        {"(2) regular, H(S) Clifford", b(c2)},
                        {"(3) regular, H(S)=Z(E(S))", b(c3)},
                        {"(4) inverse, H-orthodox", b(c4)},
                        {"(5) inverse, cryptic", b(c5)},
                        {"(6) cryptic, S/H inverse", b(c6)},
                        {"flag", b(flag)}},
                       "the six characterizations agree");
  }
  return holds(6, "the six-way equivalence");
}

TheoremReport chk_diag_impl(const VerifyContext& c) {
  struct Arrow {
    const char* name;
    bool hypothesis;
    bool conclusion;
    const char* conclusion_flag;
  };
  const ClassificationReport& f = c.classification;
  const std::vector<Arrow> arrows = {
      {"completely_inverse => inverse", f.completely_inverse, f.inverse, "inverse"},
      {"completely_inverse => h_orthodox", f.completely_inverse, f.h_orthodox,
       "h_orthodox"},
      {"completely_inverse => cryptic and inverse", f.completely_inverse,
       f.cryptic && f.inverse, "cryptic"},
      {"completely_regular => h_orthodox", f.completely_regular, f.h_orthodox,
       "h_orthodox"},
      {"h_orthodox => h_inverse_closed", f.h_orthodox, f.h_inverse_closed,
       "h_inverse_closed"},
      {"inverse => h_inverse_closed", f.inverse, f.h_inverse_closed,
       "h_inverse_closed"},
      {"inverse => orthodox", f.inverse, f.orthodox, "orthodox"},
  };
  std::size_t exercised = 0;
  for (const Arrow& arrow : arrows) {
    if (!arrow.hypothesis) {
      continue;
    }
    ++exercised;
    if (!arrow.conclusion) {
      auto witness = flag_witness(c, arrow.conclusion_flag);
      witness.insert(witness.begin(), {"arrow", arrow.name});
      return fails_named(witness, "the implication diagram");
    }
  }
  if (exercised == 0) {
    return vacuous("no arrow hypothesis holds on this semigroup");
  }
  return holds(exercised, "implication arrows");
}

TheoremReport chk_ex_fund(const VerifyContext& c) {
  if (!c.classification.inverse) {
    return vacuous("S is not inverse");
  }
  if (!c.classification.fundamental.value_or(false)) {
    return vacuous("S is not fundamental");
  }
  if (c.classification.completely_inverse != c.classification.combinatorial) {
    return fails_named(flag_witness(c, c.classification.completely_inverse
                                           ? "combinatorial"
                                           : "completely_inverse"),
                       "fundamental inverse semigroups: completely inverse "
                       "iff combinatorial");
  }
  return holds(1, "the fundamental-combinatorial equivalence");
}

}  // namespace

const std::vector<CheckerEntry>& checker_registry() {
  static const std::vector<CheckerEntry> registry = {
      {"G-CANCEL", "cancellation along Green's preorders", chk_g_cancel},
      {"G-ELEM", "elementary bounds ca <=L a, ac <=R a, aca <=H a and the "
                 "one-sided congruence property", chk_g_elem},
      {"G-LREG", "description of <=L below a regular element", chk_g_lreg},
      {"G-CLIFF", "a# exists iff a H a^2 iff H_a is a group", chk_g_cliff},
      {"G-REGPAIR-H", "a regular pair commutes iff its members are H-related",
       chk_g_regpair_h},
      {"EH-UNION", "E(S)[H] = H(S) = union of H-classes of idempotents",
       chk_eh_union},
      {"IAE-DEF-UNIQ", "uniqueness of the inverse along an element",
       chk_iae_def_uniq},
      {"IAE-OUTER", "outer characterization b a' b = b, b H a", chk_iae_outer},
      {"THEXIST", "five-way existence equivalence and b = a(a'a)# = (aa')#a",
       chk_thexist},
      {"COR-H", "aa'a H a iff H_a a' H_a = H_a", chk_cor_h},
      {"TH-TRACE", "V(a)[H] via trace products", chk_th_trace},
      {"PROP-HCLASS", "H_a H_a' H_a = H_a = a H_a' a for regular pairs mod H",
       chk_prop_hclass},
      {"PROP-SANDWICH", "a'a, aa' in H(S) and a' a a'' in V(a)[H]",
       chk_prop_sandwich},
      {"PROP-COMM-H", "a'a H aa' iff a' H a for pairs modulo H",
       chk_prop_comm_h},
      {"LEM-HREG", "regularity is regularity modulo H", chk_lem_hreg},
      {"TH-WEAKINV", "V(a) unique iff V(a)[H] H-unique", chk_th_weakinv},
      {"LEM-CIISI", "H-commutative H(S) forces commuting idempotents",
       chk_lem_ciisi},
      {"REILLY-1.3", "three equivalent orthodoxy conditions", chk_reilly},
      {"TH-ORTHODOX", "antihomomorphy modulo H iff H(S) is a semigroup",
       chk_th_orthodox},
      {"LEM-HIC-3", "three consequences of H-inverse-closedness", chk_lem_hic_3},
      {"TH-HIC-SUFF", "solid or inverse implies H-inverse-closed",
       chk_th_hic_suff},
      {"LEM-ROL", "reverse-order law under absorption identities", chk_lem_rol},
      {"TH-ROL", "reverse-order law for H-commuting group invertibles",
       chk_th_rol},
      {"COR-CIISHO", "H-commutativity closes H(S); completely inverse "
                     "implies H-orthodox", chk_cor_ciisho},
      {"LEM-ROL-CONV", "reverse-order laws force ab H ba", chk_lem_rol_conv},
      {"TH-IHOISCI", "H-commutative H(S) iff Clifford H(S); completely "
                     "inverse iff inverse and H-orthodox", chk_th_ihoisci},
      {"LEM-ZINH", "Z(E(S)) inside H(S) for regular S", chk_lem_zinh},
      {"LEM-HINZ", "H(S) inside Z(E(S)) under H-commutativity", chk_lem_hinz},
      {"COR-COMMUT", "completely inverse iff regular with H(S) = Z(E(S))",
       chk_cor_commut},
      {"TH-COMMUT", "H-Cliffordian iff H(S) inside Z(E(S))", chk_th_commut},
      {"COR-SUBSGP", "inverse subsemigroups inherit complete inverseness",
       chk_cor_subsgp},
      {"TH-TULLY", "Nagy commutativity equivalences", chk_th_tully},
      {"TH-CICONG", "completely inverse iff inverse and cryptic", chk_th_cicong},
      {"COR-LALLEMENT", "compatibility of H restricted to H(S) suffices",
       chk_cor_lallement},
      {"TH-NONREGCONG", "non-regular congruence characterizations",
       chk_th_nonregcong},
      {"COR-QUOTIENT", "completely inverse iff cryptic with inverse "
                       "(combinatorial) quotient", chk_cor_quotient},
      {"COR-SELFC", "H_a' H(S) H_a inside H(S)", chk_cor_selfc},
      {"LEM-SELFC", "a' H(S) a inside H(S) without regularity", chk_lem_selfc},
      {"COR-MUNU", "rho_H(S) = nu = mu = H", chk_cor_munu},
      {"CONCL-6EQ", "six-way characterization of completely inverse",
       chk_concl_6eq},
      {"DIAG-IMPL", "the implication diagram between the classes",
       chk_diag_impl},
      {"EX-FUND", "fundamental inverse: completely inverse iff combinatorial",
       chk_ex_fund},
  };
  return registry;
}

}  // namespace detail
}  // namespace finsemi
