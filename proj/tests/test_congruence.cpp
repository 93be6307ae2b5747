#include <doctest.h>

#include "finsemi/classes.hpp"
#include "finsemi/congruence.hpp"
#include "finsemi/constructions.hpp"
#include "finsemi/enumerate.hpp"
#include "finsemi/errors.hpp"

using namespace finsemi;

TEST_CASE("is_congruence on the extremes and on H") {
  const FiniteSemigroup s7 = completely_inverse_s7();
  CHECK(is_congruence(s7, Relation::identity(7)));
  CHECK(is_congruence(s7, Relation::universal(7)));

  const FiniteSemigroup i2 = symmetric_inverse_monoid(2).semigroup;
  CHECK_FALSE(is_congruence(i2, h_relation(compute_green(i2))));
}

TEST_CASE("crypticity") {
  const FiniteSemigroup z3 = cyclic_group(3);
  CHECK(is_cryptic(z3, compute_green(z3)));
  const FiniteSemigroup chain = semilattice_chain(3);
  CHECK(is_cryptic(chain, compute_green(chain)));
  const FiniteSemigroup s7 = completely_inverse_s7();
  CHECK(is_cryptic(s7, compute_green(s7)));
  const FiniteSemigroup i2 = symmetric_inverse_monoid(2).semigroup;
  CHECK_FALSE(is_cryptic(i2, compute_green(i2)));
}

TEST_CASE("quotients") {
  const FiniteSemigroup s7 = completely_inverse_s7();

  const FiniteSemigroup copy = quotient(s7, Relation::identity(7));
  CHECK(copy.order() == 7);
  CHECK(copy.table_rows() == s7.table_rows());

  CHECK(quotient(s7, Relation::universal(7)).order() == 1);

  const FiniteSemigroup q = quotient(s7, h_relation(compute_green(s7)));
  REQUIRE(q.order() == 6);
  CHECK(q.display_name(5) == "{g,h}");
  const ClassificationReport r = classify(q);
  CHECK(r.combinatorial);
  CHECK(r.inverse);
  CHECK(r.completely_inverse);

  const FiniteSemigroup i2 = symmetric_inverse_monoid(2).semigroup;
  CHECK_THROWS_AS(quotient(i2, h_relation(compute_green(i2))),
                  NotACongruenceError);
}

TEST_CASE("unique_inverses") {
  const std::vector<element> inv = unique_inverses(completely_inverse_s7());
  CHECK(inv == std::vector<element>{0, 1, 2, 4, 3, 5, 6});
  CHECK_THROWS_AS(unique_inverses(left_zero(2)), NotInverseError);
  CHECK_THROWS_AS(unique_inverses(null_semigroup(2)), NotInverseError);
}

TEST_CASE("mu on groups, chains and the seven-element example") {
  CHECK(mu(cyclic_group(3)) == Relation::universal(3));
  CHECK(mu(semilattice_chain(3)) == Relation::identity(3));

  const FiniteSemigroup s7 = completely_inverse_s7();
  const GreenData G = compute_green(s7);
  CHECK(mu(s7, G) == h_relation(G));

  CHECK_THROWS_AS(mu(left_zero(2)), NotInverseError);
}

TEST_CASE("the two forms of mu agree on every inverse semigroup of order <= 3") {
  for (unsigned n = 1; n <= 3; ++n) {
    for_each_semigroup({n, false, std::optional<std::string>{"inverse"}},
                       [](const FiniteSemigroup& S) {
                         const GreenData G = compute_green(S);
                         CHECK(mu_conjugation_form(S, G) == mu_kernel_form(S, G));
                         return true;
                       });
  }
}

TEST_CASE("nu coincides with mu on the fixtures") {
  const FiniteSemigroup z3 = cyclic_group(3);
  CHECK(nu(z3, compute_green(z3)) == Relation::universal(3));
  const FiniteSemigroup s7 = completely_inverse_s7();
  const GreenData G = compute_green(s7);
  CHECK(nu(s7, G) == mu(s7, G));
  CHECK(nu(s7, G) == h_relation(G));
}

TEST_CASE("kernel_check") {
  const FiniteSemigroup s7 = completely_inverse_s7();
  CHECK(kernel_check(s7, {idempotents(s7)}));
  CHECK(kernel_check(s7, {centralizer_of_idempotents(s7)}));
  CHECK_FALSE(kernel_check(s7, {ElementSet({0}, 7)}));  // misses idempotents

  const FiniteSemigroup i2 = symmetric_inverse_monoid(2).semigroup;
  CHECK(kernel_check(i2, {idempotents(i2)}));
  CHECK(kernel_check(i2, {centralizer_of_idempotents(i2)}));

  CHECK_THROWS_AS(kernel_check(left_zero(2), {ElementSet({0}, 2)}),
                  NotInverseError);
}

TEST_CASE("rho_K") {
  // K = E on a combinatorial inverse semigroup refines H = identity.
  const FiniteSemigroup chain = semilattice_chain(3);
  CHECK(rho_k(chain, {idempotents(chain)}) == Relation::identity(3));

  // K = Z(E(S)) on the seven-element example reproduces H.
  const FiniteSemigroup s7 = completely_inverse_s7();
  const GreenData G = compute_green(s7);
  CHECK(rho_k(s7, G, {centralizer_of_idempotents(s7)}) == h_relation(G));

  // K = S on a group gives the universal relation.
  const FiniteSemigroup z3 = cyclic_group(3);
  CHECK(rho_k(z3, {ElementSet::full(3)}) == Relation::universal(3));

  CHECK_THROWS_AS(rho_k(s7, {ElementSet({0, 3}, 7)}), NotAKernelError);
}

TEST_CASE("every rho_K is an idempotent-separating congruence inside H") {
  const FiniteSemigroup i2 = symmetric_inverse_monoid(2).semigroup;
  const GreenData G = compute_green(i2);
  for (const ElementSet& K : {idempotents(i2), centralizer_of_idempotents(i2)}) {
    const Relation rel = rho_k(i2, G, {K});
    CHECK(is_congruence(i2, rel));
    CHECK(rel.refines(h_relation(G)));
  }
}

TEST_CASE("principal congruences and the brute-force oracle") {
  const FiniteSemigroup s7 = completely_inverse_s7();
  const GreenData G = compute_green(s7);
  // The only nontrivial H-pair is (g, h); its principal congruence is H.
  CHECK(principal_congruence(s7, 5, 6) == h_relation(G));

  CHECK(max_congruence_in_h_oracle(s7, G) == mu(s7, G));

  const FiniteSemigroup chain = semilattice_chain(3);
  CHECK(max_congruence_in_h_oracle(chain, compute_green(chain))
        == Relation::identity(3));

  const FiniteSemigroup z3 = cyclic_group(3);
  CHECK(max_congruence_in_h_oracle(z3, compute_green(z3))
        == Relation::universal(3));

  const FiniteSemigroup i2 = symmetric_inverse_monoid(2).semigroup;
  CHECK(max_congruence_in_h_oracle(i2, compute_green(i2))
        == mu(i2, compute_green(i2)));

  const FiniteSemigroup z9 = cyclic_group(9);
  CHECK_THROWS_AS(max_congruence_in_h_oracle(z9, compute_green(z9)),
                  BoundExceededError);
}

TEST_CASE("mu equals the oracle on every inverse semigroup of order <= 4") {
  for (unsigned n = 1; n <= 4; ++n) {
    for_each_semigroup({n, false, std::optional<std::string>{"inverse"}},
                       [](const FiniteSemigroup& S) {
                         const GreenData G = compute_green(S);
                         CHECK(mu(S, G) == max_congruence_in_h_oracle(S, G));
                         return true;
                       });
  }
}

TEST_CASE("relations serialize as block lists") {
  const FiniteSemigroup s7 = completely_inverse_s7();
  const GreenData G = compute_green(s7);
  CHECK(to_text(h_relation(G), s7) == "{0} {e} {f} {a} {b} {g,h}");
  CHECK(to_text(Relation::universal(3), cyclic_group(3)) == "{0,1,2}");
}

TEST_CASE("relation plumbing") {
  const Relation rel = Relation::from_class_ids({7, 7, 2, 7});
  CHECK(rel.block_count() == 2);
  CHECK(rel.related(0, 3));
  CHECK_FALSE(rel.related(0, 2));
  CHECK(rel.blocks() == std::vector<std::vector<element>>{{0, 1, 3}, {2}});
  CHECK(Relation::identity(3).refines(Relation::universal(3)));
  CHECK_FALSE(Relation::universal(3).refines(Relation::identity(3)));
  CHECK_THROWS_AS(Relation::from_pair_matrix({{true, true}, {false, true}}),
                  PreconditionError);
}
