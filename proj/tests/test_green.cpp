#include <doctest.h>

#include "finsemi/constructions.hpp"
#include "finsemi/enumerate.hpp"
#include "finsemi/errors.hpp"
#include "finsemi/green.hpp"
#include "finsemi/inverses.hpp"

using namespace finsemi;

namespace {

void check_preorder_axioms(const FiniteSemigroup& S, const GreenData& G) {
  const unsigned n = S.order();
  for (const BoolMatrix* leq : {&G.leqL, &G.leqR, &G.leqH}) {
    for (element a = 0; a < n; ++a) {
      CHECK(leq->at(a, a));
      for (element b = 0; b < n; ++b) {
        for (element c = 0; c < n; ++c) {
          if (leq->at(a, b) && leq->at(b, c)) {
            CHECK(leq->at(a, c));
          }
        }
      }
    }
  }
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      CHECK(G.leq_h(a, b) == (G.leq_l(a, b) && G.leq_r(a, b)));
      CHECK(G.rel_l(a, b) == (G.leq_l(a, b) && G.leq_l(b, a)));
      CHECK(G.rel_r(a, b) == (G.leq_r(a, b) && G.leq_r(b, a)));
      CHECK(G.rel_h(a, b) == (G.leq_h(a, b) && G.leq_h(b, a)));
    }
  }
}

}  // namespace

TEST_CASE("a group is a single H-class") {
  const FiniteSemigroup z3 = cyclic_group(3);
  const GreenData G = compute_green(z3);
  for (element a = 0; a < 3; ++a) {
    for (element b = 0; b < 3; ++b) {
      CHECK(G.leq_l(a, b));
      CHECK(G.leq_r(a, b));
      CHECK(G.rel_h(a, b));
    }
  }
  CHECK(h_class(z3, G, 0) == ElementSet::full(3));
}

TEST_CASE("the seven-element example has the expected partitions") {
  const FiniteSemigroup s7 = completely_inverse_s7();
  const GreenData G = compute_green(s7);
  CHECK(G.classH == std::vector<unsigned>{0, 1, 2, 3, 4, 5, 5});
  CHECK(G.classL == std::vector<unsigned>{0, 1, 2, 2, 1, 3, 3});
  CHECK(G.classR == std::vector<unsigned>{0, 1, 2, 1, 2, 3, 3});
  CHECK(h_class(s7, G, 5) == ElementSet({5, 6}, 7));  // H_g = {g, h}
  CHECK(G.rel_h(5, 6));
}

TEST_CASE("left-zero: L universal, R and H trivial") {
  const FiniteSemigroup lz = left_zero(2);
  const GreenData G = compute_green(lz);
  CHECK(G.rel_l(0, 1));
  CHECK_FALSE(G.rel_r(0, 1));
  CHECK_FALSE(G.rel_h(0, 1));
}

TEST_CASE("combinatorial semigroups have singleton H-classes") {
  const FiniteSemigroup chain = semilattice_chain(3);
  const GreenData G = compute_green(chain);
  for (element a = 0; a < 3; ++a) {
    CHECK(h_class(chain, G, a) == ElementSet({a}, 3));
  }
}

TEST_CASE("preorder axioms hold over all semigroups of order <= 3 and fixtures") {
  for (unsigned n = 1; n <= 3; ++n) {
    for_each_semigroup({n, false, {}}, [](const FiniteSemigroup& S) {
      check_preorder_axioms(S, compute_green(S));
      return true;
    });
  }
  const FiniteSemigroup s7 = completely_inverse_s7();
  check_preorder_axioms(s7, compute_green(s7));
  const FiniteSemigroup i2 = symmetric_inverse_monoid(2).semigroup;
  check_preorder_axioms(i2, compute_green(i2));
}

TEST_CASE("duality: leqL of S equals leqR of the opposite semigroup") {
  for_each_semigroup({3, false, {}}, [](const FiniteSemigroup& S) {
    const GreenData G = compute_green(S);
    const GreenData Gop = compute_green(opposite(S));
    CHECK(G.leqL == Gop.leqR);
    CHECK(G.leqR == Gop.leqL);
    return true;
  });
}

TEST_CASE("distinct idempotents are never H-related") {
  const auto check_separation = [](const FiniteSemigroup& S) {
    const GreenData G = compute_green(S);
    for (element e : idempotents(S)) {
      for (element f : idempotents(S)) {
        if (e != f) {
          CHECK_FALSE(G.rel_h(e, f));
        }
      }
    }
  };
  for_each_semigroup({3, false, {}}, [&](const FiniteSemigroup& S) {
    check_separation(S);
    return true;
  });
  check_separation(symmetric_inverse_monoid(3).semigroup);
}

TEST_CASE("trace products") {
  const FiniteSemigroup z3 = cyclic_group(3);
  const GreenData Gz = compute_green(z3);
  for (element a = 0; a < 3; ++a) {
    for (element b = 0; b < 3; ++b) {
      CHECK(is_trace_product(z3, Gz, a, b));
    }
  }

  const SymmetricInverseMonoid i2 = symmetric_inverse_monoid(2);
  const GreenData Gi = compute_green(i2.semigroup);
  const element alpha = i2.index_of(PartialInjection::from_image({1, 0}));
  const element beta = i2.index_of(PartialInjection::from_image({2, 1}));
  // beta*alpha falls out of R_beta, and indeed is not group invertible.
  CHECK_FALSE(is_trace_product(i2.semigroup, Gi, beta, alpha));
  CHECK_FALSE(group_invertible_set(i2.semigroup, Gi)
                  .contains(i2.semigroup.product(beta, alpha)));

  const FiniteSemigroup s7 = completely_inverse_s7();
  const GreenData Gs = compute_green(s7);
  CHECK_FALSE(is_trace_product(s7, Gs, 1, 2));  // e*f = 0 is not in R_e
  CHECK(is_trace_product(s7, Gs, 5, 6));        // g*h = h
}

TEST_CASE("H-class products along trace products") {
  const FiniteSemigroup z3 = cyclic_group(3);
  const GreenData Gz = compute_green(z3);
  CHECK(h_class_product_check(z3, Gz, 1, 2));

  const FiniteSemigroup s7 = completely_inverse_s7();
  const GreenData Gs = compute_green(s7);
  CHECK(h_class_product_check(s7, Gs, 5, 6));
  CHECK_THROWS_AS(h_class_product_check(s7, Gs, 1, 2), PreconditionError);
}

TEST_CASE("H-class products hold for every trace product of order <= 4") {
  for (unsigned n = 1; n <= 4; ++n) {
    for_each_semigroup({n, false, {}}, [](const FiniteSemigroup& S) {
      const GreenData G = compute_green(S);
      for (element a = 0; a < S.order(); ++a) {
        for (element b = 0; b < S.order(); ++b) {
          if (is_trace_product(S, G, a, b)) {
            CHECK(h_class_product_check(S, G, a, b));
          }
        }
      }
      return true;
    });
  }
}

TEST_CASE("h_class rejects out-of-range elements") {
  const FiniteSemigroup z2 = cyclic_group(2);
  CHECK_THROWS_AS(h_class(z2, compute_green(z2), 2), PreconditionError);
}
