#include "finsemi/inverses.hpp"

#include <algorithm>

#include "finsemi/errors.hpp"

namespace finsemi {

namespace {

void require_element(const FiniteSemigroup& S, element a, const char* who) {
  if (a >= S.order()) {
    throw PreconditionError(std::string(who) + ": element out of range");
  }
}

}  // namespace

std::vector<element> inverse_along_search(const FiniteSemigroup& S,
                                          const GreenData& G, element a_prime,
                                          element a) {
  require_element(S, a, "inverse_along_search");
  require_element(S, a_prime, "inverse_along_search");
  std::vector<element> out;
  for (element b = 0; b < S.order(); ++b) {
    if (S.product(S.product(b, a_prime), a) == a
        && S.product(S.product(a, a_prime), b) == a && G.leq_h(b, a)) {
      out.push_back(b);
    }
  }
  return out;
}

ElementSet associates(const FiniteSemigroup& S, element a) {
  require_element(S, a, "associates");
  std::vector<element> out;
  for (element x = 0; x < S.order(); ++x) {
    if (S.product(S.product(a, x), a) == a) {
      out.push_back(x);
    }
  }
  return ElementSet(std::move(out), S.order());
}

ElementSet inverses_of(const FiniteSemigroup& S, element a) {
  require_element(S, a, "inverses_of");
  std::vector<element> out;
  for (element x = 0; x < S.order(); ++x) {
    if (S.product(S.product(a, x), a) == a
        && S.product(S.product(x, a), x) == x) {
      out.push_back(x);
    }
  }
  return ElementSet(std::move(out), S.order());
}

std::optional<element> group_inverse(const FiniteSemigroup& S,
                                     const GreenData& G, element a) {
  require_element(S, a, "group_inverse");
  std::optional<element> found;
  for (element x : G.blocksH[G.classH[a]]) {
    if (S.product(S.product(a, x), a) == a
        && S.product(S.product(x, a), x) == x
        && S.product(a, x) == S.product(x, a)) {
      if (found.has_value()) {
        throw InternalInconsistencyError("two distinct commuting inverses of "
                                         + S.display_name(a));
      }
      found = x;
    }
  }
  const bool criterion = G.rel_h(a, S.product(a, a));
  if (found.has_value() != criterion) {
    throw InternalInconsistencyError(
        "group inverse search and the a H a^2 criterion disagree at "
        + S.display_name(a));
  }
  return found;
}

ElementSet group_invertible_set(const FiniteSemigroup& S, const GreenData& G) {
  const unsigned n = S.order();
  std::vector<element> by_criterion;
  for (element a = 0; a < n; ++a) {
    if (G.rel_h(a, S.product(a, a))) {
      by_criterion.push_back(a);
    }
  }
  std::vector<bool> in_union(n, false);
  for (element e = 0; e < n; ++e) {
    if (S.product(e, e) == e) {
      for (element b : G.blocksH[G.classH[e]]) {
        in_union[b] = true;
      }
    }
  }
  const ElementSet result(std::move(by_criterion), n);
  if (result != ElementSet::from_indicator(in_union)) {
    throw InternalInconsistencyError(
        "group invertible set: the a H a^2 criterion and the union of "
        "H-classes of idempotents disagree");
  }
  return result;
}

bool in_associates_mod_h(const FiniteSemigroup& S, const GreenData& G,
                         element x, element a) {
  return G.rel_h(S.product(S.product(a, x), a), a);
}

bool in_inverses_mod_h(const FiniteSemigroup& S, const GreenData& G,
                       element x, element a) {
  return in_associates_mod_h(S, G, x, a)
         && G.rel_h(S.product(S.product(x, a), x), x);
}

ElementSet associates_mod_h(const FiniteSemigroup& S, const GreenData& G,
                            element a) {
  require_element(S, a, "associates_mod_h");
  std::vector<element> out;
  for (element x = 0; x < S.order(); ++x) {
    if (in_associates_mod_h(S, G, x, a)) {
      out.push_back(x);
    }
  }
  return ElementSet(std::move(out), S.order());
}

ElementSet inverses_mod_h(const FiniteSemigroup& S, const GreenData& G,
                          element a) {
  require_element(S, a, "inverses_mod_h");
  std::vector<element> out;
  for (element x = 0; x < S.order(); ++x) {
    if (in_inverses_mod_h(S, G, x, a)) {
      out.push_back(x);
    }
  }
  return ElementSet(std::move(out), S.order());
}

ElementSet inverses_mod_h_variant(const FiniteSemigroup& S, const GreenData& G,
                                  element a) {
  require_element(S, a, "inverses_mod_h_variant");
  std::vector<element> out;
  for (element x = 0; x < S.order(); ++x) {
    if (in_associates_mod_h(S, G, x, a)
        && G.rel_h(S.product(S.product(x, a), x), a)) {
      out.push_back(x);
    }
  }
  return ElementSet(std::move(out), S.order());
}

std::vector<std::pair<element, element>> vh_reading_disagreements(
    const FiniteSemigroup& S, const GreenData& G) {
  std::vector<std::pair<element, element>> out;
  for (element a = 0; a < S.order(); ++a) {
    const ElementSet adopted = inverses_mod_h(S, G, a);
    const ElementSet variant = inverses_mod_h_variant(S, G, a);
    for (element x = 0; x < S.order(); ++x) {
      if (adopted.contains(x) != variant.contains(x)) {
        out.emplace_back(a, x);
      }
    }
  }
  return out;
}

InverseAlongResult inverse_along(const FiniteSemigroup& S, const GreenData& G,
                                 element a_prime, element a) {
  require_element(S, a, "inverse_along");
  require_element(S, a_prime, "inverse_along");
  const element aapa = S.product(S.product(a, a_prime), a);
  const bool exists = G.rel_h(aapa, a);
  const std::vector<element> found = inverse_along_search(S, G, a_prime, a);

  InverseAlongResult result;
  result.exists = exists;
  if (!exists) {
    if (!found.empty()) {
      throw InternalInconsistencyError(
          "inverse along: the existence criterion failed but the search found "
          + S.display_name(found.front()));
    }
    return result;
  }
  if (found.size() != 1) {
    throw InternalInconsistencyError(
        "inverse along: expected exactly one solution, found "
        + std::to_string(found.size()));
  }
  const std::optional<element> sharp_right = group_inverse(S, G, S.product(a_prime, a));
  const std::optional<element> sharp_left = group_inverse(S, G, S.product(a, a_prime));
  if (!sharp_right.has_value() || !sharp_left.has_value()) {
    throw InternalInconsistencyError(
        "inverse along: closed forms need (a'a)# and (aa')# to exist");
  }
  result.value = found.front();
  result.via_right = S.product(a, *sharp_right);
  result.via_left = S.product(*sharp_left, a);
  if (result.via_left != result.value || result.via_right != result.value) {
    throw InternalInconsistencyError(
        "inverse along: closed forms disagree with the definitional search at ("
        + S.display_name(a_prime) + ", " + S.display_name(a) + ")");
  }
  return result;
}

bool check_thexist_equivalence(const FiniteSemigroup& S, const GreenData& G,
                               element a_prime, element a) {
  require_element(S, a, "check_thexist_equivalence");
  require_element(S, a_prime, "check_thexist_equivalence");
  const element aap = S.product(a, a_prime);
  const element apa = S.product(a_prime, a);
  const element aapa = S.product(aap, a);

  const bool c1 = !inverse_along_search(S, G, a_prime, a).empty();
  const bool c2 = G.leq_r(a, aap) && group_inverse(S, G, aap).has_value();
  const bool c3 = G.leq_l(a, apa) && group_inverse(S, G, apa).has_value();
  const bool c4 = G.rel_h(aapa, a);
  const bool c5 = G.leq_h(a, aapa);
  return c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5;
}

}  // namespace finsemi
