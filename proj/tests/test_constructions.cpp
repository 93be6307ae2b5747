#include <doctest.h>

#include "finsemi/classes.hpp"
#include "finsemi/constructions.hpp"
#include "finsemi/errors.hpp"
#include "finsemi/green.hpp"
#include "finsemi/inverses.hpp"

using namespace finsemi;

TEST_CASE("partial injection composition and display") {
  const PartialInjection a = PartialInjection::from_image({2, 0});  // 1->2
  const PartialInjection b = PartialInjection::from_image({0, 1});  // 2->1
  CHECK(a.then(b) == PartialInjection::from_image({1, 0}));         // 1->1
  CHECK(b.then(a) == PartialInjection::from_image({0, 2}));         // 2->2
  CHECK(a.then(a) == PartialInjection(2));                          // empty

  CHECK(PartialInjection(2).display() == "0");
  CHECK(PartialInjection::identity(2).display() == "id{1,2}");
  CHECK(PartialInjection::from_image({1, 0}).display() == "id{1}");
  CHECK(a.display() == "[1>2]");
  CHECK(PartialInjection::from_image({2, 1}).display() == "[1>2,2>1]");

  CHECK_THROWS_AS(PartialInjection::from_image({1, 1}), PreconditionError);
  CHECK_THROWS_AS(PartialInjection::from_image({3, 0}), PreconditionError);
}

TEST_CASE("symmetric inverse monoid sizes") {
  CHECK(symmetric_inverse_monoid(1).semigroup.order() == 2);
  CHECK(symmetric_inverse_monoid(2).semigroup.order() == 7);
  CHECK(symmetric_inverse_monoid(3).semigroup.order() == 34);
  CHECK(symmetric_inverse_monoid(4).semigroup.order() == 209);
  CHECK_THROWS_AS(symmetric_inverse_monoid(0), DegreeTooLargeError);
  CHECK_THROWS_AS(symmetric_inverse_monoid(5), DegreeTooLargeError);
}

TEST_CASE("I_k is an inverse monoid for every supported degree") {
  for (unsigned k = 1; k <= 3; ++k) {
    CHECK(classify(symmetric_inverse_monoid(k).semigroup).inverse);
  }
  // Degree 4 is big; check unique inverses directly instead of classifying.
  const FiniteSemigroup i4 = symmetric_inverse_monoid(4).semigroup;
  CHECK(identity_element(i4) == 0);
  for (element a = 0; a < i4.order(); ++a) {
    CHECK(inverses_of(i4, a).size() == 1);
  }
}

TEST_CASE("I2 is the paper-style counterexample") {
  const SymmetricInverseMonoid i2 = symmetric_inverse_monoid(2);
  const ClassificationReport r = classify(i2.semigroup);
  CHECK(r.inverse);
  CHECK_FALSE(r.h_orthodox);

  const element alpha = i2.index_of(PartialInjection::from_image({1, 0}));
  const element beta = i2.index_of(PartialInjection::from_image({2, 1}));
  CHECK(alpha == 1);
  CHECK(beta == 2);
  CHECK(i2.semigroup.display_name(alpha) == "id{1}");

  const GreenData G = compute_green(i2.semigroup);
  const element ab = i2.semigroup.product(alpha, beta);
  const element ba = i2.semigroup.product(beta, alpha);
  CHECK_FALSE(G.rel_l(ab, ba));
  CHECK_FALSE(G.rel_h(ab, ba));
  CHECK_FALSE(group_invertible_set(i2.semigroup, G).contains(ba));
}

TEST_CASE("the domain-mismatch counterexample survives the dual convention") {
  // opposite(I2) composes right-to-left; the products alpha*beta and
  // beta*alpha swap but stay H-unrelated.
  const SymmetricInverseMonoid i2 = symmetric_inverse_monoid(2);
  const FiniteSemigroup dual = opposite(i2.semigroup);
  const GreenData G = compute_green(dual);
  const element alpha = 1, beta = 2;
  CHECK_FALSE(G.rel_h(dual.product(alpha, beta), dual.product(beta, alpha)));
  CHECK_FALSE(group_invertible_set(dual, G).contains(dual.product(beta, alpha)));
}

TEST_CASE("the seven-element completely inverse example") {
  const FiniteSemigroup s7 = completely_inverse_s7();
  REQUIRE(s7.order() == 7);
  CHECK(s7.names() == std::vector<std::string>{"0", "e", "f", "a", "b", "g", "h"});
  CHECK(s7.product(6, 6) == 5);  // h*h = g
  CHECK(s7.product(3, 4) == 1);  // a*b = e
  CHECK(s7.product(4, 3) == 2);  // b*a = f
  CHECK(idempotents(s7) == ElementSet({0, 1, 2, 5}, 7));

  const ClassificationReport r = classify(s7);
  CHECK(r.completely_inverse);
  CHECK_FALSE(r.completely_regular);
  CHECK_FALSE(r.combinatorial);
}

TEST_CASE("group_adjoin") {
  const FiniteSemigroup adj = group_adjoin(cyclic_group(2), 1);
  REQUIRE(adj.order() == 3);
  CHECK(adj.product(2, 2) == 0);  // a^2 = g^2 = identity
  CHECK(adj.product(2, 0) == 1);  // a*h = g*h
  CHECK(adj.product(0, 2) == 1);

  const GreenData G = compute_green(adj);
  CHECK(group_invertible_set(adj, G) == ElementSet({0, 1}, 3));
  CHECK(associates(adj, 2).empty());  // the adjoined element is not regular

  const ClassificationReport r = classify(adj);
  CHECK(r.h_cliffordian);
  CHECK_FALSE(r.regular);
  CHECK_FALSE(r.completely_inverse);

  // degenerate case: the trivial group
  const FiniteSemigroup tiny = group_adjoin(cyclic_group(1), 0);
  REQUIRE(tiny.order() == 2);
  CHECK(tiny.product(1, 1) == 0);
  CHECK(tiny.product(1, 0) == 0);
  CHECK(tiny.product(0, 1) == 0);

  CHECK_THROWS_AS(group_adjoin(left_zero(2), 0), NotAGroupError);
  CHECK_THROWS_AS(group_adjoin(cyclic_group(2), 5), PreconditionError);
}

TEST_CASE("the adjoined element is never regular over small cyclic groups") {
  for (unsigned m = 1; m <= 4; ++m) {
    for (element g = 0; g < m; ++g) {
      const FiniteSemigroup adj = group_adjoin(cyclic_group(m), g);
      CHECK(associates(adj, m).empty());
    }
  }
}

TEST_CASE("stock constructions classify as expected") {
  CHECK(classify(cyclic_group(3)).completely_inverse);

  const ClassificationReport band = classify(rectangular_band(2, 2));
  CHECK(band.completely_regular);
  CHECK(band.h_orthodox);
  CHECK(band.orthodox);
  CHECK_FALSE(band.inverse);

  CHECK_FALSE(classify(null_semigroup(2)).regular);

  const ClassificationReport chain = classify(semilattice_chain(4));
  CHECK(chain.combinatorial);
  CHECK(chain.completely_inverse);
  CHECK(chain.fundamental == true);
}

TEST_CASE("stock dispatch") {
  CHECK(stock("cyclic-group", {3}) == cyclic_group(3));
  CHECK(stock("cyclic_group", {3}) == cyclic_group(3));
  CHECK(stock("rectangular_band", {2, 3}) == rectangular_band(2, 3));
  CHECK(stock("s7", {}) == completely_inverse_s7());
  CHECK(stock("symmetric-inverse", {2}) == symmetric_inverse_monoid(2).semigroup);
  CHECK(stock("group-adjoin", {2, 1}) == group_adjoin(cyclic_group(2), 1));
  CHECK_THROWS_AS(stock("latin-square", {3}), UnknownConstructionError);
  CHECK_THROWS_AS(stock("cyclic_group", {}), PreconditionError);
  CHECK_THROWS_AS(stock("cyclic_group", {0}), PreconditionError);
}

TEST_CASE("every construction exports with a names line when built from maps") {
  const SymmetricInverseMonoid i1 = symmetric_inverse_monoid(1);
  REQUIRE(i1.semigroup.has_names());
  CHECK(*i1.semigroup.names() == std::vector<std::string>{"id{1}", "0"});
}
