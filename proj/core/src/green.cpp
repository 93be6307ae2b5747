#include "finsemi/green.hpp"

#include <algorithm>
#include <set>

#include "finsemi/errors.hpp"

namespace finsemi {

namespace {

void classes_of(const BoolMatrix& leq, std::vector<unsigned>& class_id,
                std::vector<std::vector<element>>& blocks) {
  const unsigned n = leq.dim();
  class_id.assign(n, 0);
  blocks.clear();
  std::vector<bool> assigned(n, false);
  for (element a = 0; a < n; ++a) {
    if (assigned[a]) {
      continue;
    }
    const unsigned id = static_cast<unsigned>(blocks.size());
    blocks.push_back({a});
    class_id[a] = id;
    assigned[a] = true;
    for (element b = a + 1; b < n; ++b) {
      if (!assigned[b] && leq.at(a, b) && leq.at(b, a)) {
        class_id[b] = id;
        blocks[id].push_back(b);
        assigned[b] = true;
      }
    }
  }
}

}  // namespace

GreenData compute_green(const FiniteSemigroup& S) {
  const unsigned n = S.order();
  GreenData G;
  G.leqL = BoolMatrix(n);
  G.leqR = BoolMatrix(n);
  G.leqH = BoolMatrix(n);
  // a <=L b iff a lies in S^1 b = {b} u Sb; marking every x*b costs O(n^2)
  // and the result is transitive by construction.
  for (element b = 0; b < n; ++b) {
    G.leqL.set(b, b);
    G.leqR.set(b, b);
    for (element x = 0; x < n; ++x) {
      G.leqL.set(S.product(x, b), b);
      G.leqR.set(S.product(b, x), b);
    }
  }
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      if (G.leqL.at(a, b) && G.leqR.at(a, b)) {
        G.leqH.set(a, b);
      }
    }
  }
  classes_of(G.leqL, G.classL, G.blocksL);
  classes_of(G.leqR, G.classR, G.blocksR);
  classes_of(G.leqH, G.classH, G.blocksH);
  return G;
}

ElementSet h_class(const FiniteSemigroup& S, const GreenData& G, element a) {
  if (a >= S.order()) {
    throw PreconditionError("h_class: element out of range");
  }
  return ElementSet(G.blocksH[G.classH[a]], S.order());
}

bool is_trace_product(const FiniteSemigroup& S, const GreenData& G, element a,
                      element b) {
  const element ab = S.product(a, b);
  const bool direct = G.rel_r(ab, a) && G.rel_l(ab, b);
  bool via_idempotent = false;
  for (element e = 0; e < S.order() && !via_idempotent; ++e) {
    via_idempotent = S.product(e, e) == e && G.rel_l(e, a) && G.rel_r(e, b);
  }
  if (direct != via_idempotent) {
    throw InternalInconsistencyError(
        "trace-product tests disagree at (" + S.display_name(a) + ", "
        + S.display_name(b) + ")");
  }
  return direct;
}

bool h_class_product_check(const FiniteSemigroup& S, const GreenData& G,
                           element a, element b) {
  if (!is_trace_product(S, G, a, b)) {
    throw PreconditionError("h_class_product_check requires a*b to be a trace product");
  }
  const std::vector<element>& Ha = G.blocksH[G.classH[a]];
  const std::vector<element>& Hb = G.blocksH[G.classH[b]];
  const std::vector<element>& Hab = G.blocksH[G.classH[S.product(a, b)]];
  const std::set<element> expected(Hab.begin(), Hab.end());

  std::set<element> set_product;
  for (element x : Ha) {
    for (element y : Hb) {
      set_product.insert(S.product(x, y));
    }
  }
  if (set_product != expected) {
    return false;
  }
  std::set<element> left_translate;
  for (element y : Hb) {
    left_translate.insert(S.product(a, y));
  }
  if (left_translate != expected) {
    return false;
  }
  std::set<element> right_translate;
  for (element x : Ha) {
    right_translate.insert(S.product(x, b));
  }
  return right_translate == expected;
}

}  // namespace finsemi
