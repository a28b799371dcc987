#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "fsing/errors.hpp"
#include "fsing/frobroot.hpp"

using namespace fsing;
using fsing::testing::I;
using fsing::testing::P;

namespace {

std::vector<std::string> gb(const Ideal& A) {
  return testing::strings(A.groebner_basis().elements());
}

}  // namespace

TEST_CASE("nu") {
  CHECK(nu(1, 7) == 1);
  CHECK(nu(2, 2) == 3);
  CHECK(nu(3, 3) == 13);
  CHECK(nu(62, 2) == (std::uint64_t{1} << 62) - 1);
  CHECK_THROWS_AS(nu(64, 2), InputError);
  CHECK_THROWS_AS(nu(0, 2), InputError);
}

TEST_CASE("frobenius_root examples") {
  Ring R(2, {"x", "y"});
  CHECK(frobenius_root(Polynomial(R), 1).is_zero());
  CHECK(gb(frobenius_root(P(R, "x^2*y + x*y^2"), 1)) == std::vector<std::string>{"x", "y"});
  CHECK(gb(frobenius_root(I(R, {"x^2", "y^2"}), 1)) == std::vector<std::string>{"x", "y"});
  CHECK(frobenius_root(Ideal::zero(R), 1).is_zero());
  CHECK(gb(frobenius_root(P(R, "x^4*y^2"), 2)) == std::vector<std::string>{"x"});
  Ring R3(3, {"x", "y"});
  // x^3 sits over residue 1 with quotient x, x^4*y over residue x*y with quotient x
  CHECK(gb(frobenius_root(P(R3, "2*x^3 + x^4*y"), 1)) == std::vector<std::string>{"x"});
  CHECK(gb(frobenius_root(P(R3, "2*x^3 + x^3*y^3 + x*y"), 1)) == std::vector<std::string>{"1"});
}

TEST_CASE("frobenius_root on the example u is the unit ideal") {
  Ring R = testing::minors_ring();
  CHECK(frobenius_root(testing::minors_u(R), 1).is_unit());
}

TEST_CASE("root adjunction and minimality (random)") {
  std::mt19937_64 rng(101);
  int minimality_checks = 0;
  for (std::uint32_t p : {2u, 3u}) {
    Ring R = testing::ring_xyz(p);
    for (int trial = 0; trial < 50; ++trial) {
      unsigned e = 1 + trial % 2;
      std::uint64_t q = frobenius_exponent(p, e);
      auto g = testing::random_poly(R, rng, 6, 3 * static_cast<std::uint32_t>(q));
      Ideal root = frobenius_root(g, e);
      CHECK(testing::recompose(g, q) == g);
      CHECK(frobenius_power_ideal(root, e).contains(g));

      // L random, g a random element of L^[q]: the root must sit inside L.
      Ideal L = testing::random_ideal(R, rng, 2, 2, 2);
      Ideal Lq = frobenius_power_ideal(L, e);
      Polynomial h = testing::random_element(Lq, rng, 3, 2);
      Ideal hroot = frobenius_root(h, e);
      CHECK(frobenius_power_ideal(hroot, e).contains(h));
      CHECK(L.contains(hroot));
      ++minimality_checks;
    }
  }
  CHECK(minimality_checks == 100);
}

TEST_CASE("frobenius_root is additive over sums") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u}) {
    Ring R = testing::ring_xyz(p);
    for (int trial = 0; trial < 20; ++trial) {
      Ideal A = testing::random_ideal(R, rng, 2, 4, 5);
      Ideal B = testing::random_ideal(R, rng, 2, 4, 5);
      CHECK(ideal_equal(frobenius_root(ideal_sum(A, B), 1),
                        ideal_sum(frobenius_root(A, 1), frobenius_root(B, 1))));
    }
  }
}

TEST_CASE("star_closure examples") {
  Ring R(2, {"x", "y"});
  Ideal A = I(R, {"x^2"});
  CHECK(ideal_equal(star_closure(A, Polynomial(R), 1), A));
  CHECK(star_closure(A, P(R, "1"), 1).is_unit());
  // u = x: (x^2) -> root(x^3) = (x), then root(x^2) = (x) again
  CHECK(gb(star_closure(A, P(R, "x"), 1)) == std::vector<std::string>{"x"});
  // u = y^3: root(x^2*y^3) = (x*y) and root(x*y^4) = (y^2): (x^2, x*y, y^2)
  CHECK(gb(star_closure(A, P(R, "y^3"), 1)) == std::vector<std::string>{"x^2", "x*y", "y^2"});
  CHECK_THROWS_AS(star_closure(A, P(R, "1"), 1, ChainLimits{0}), InternalError);
}

TEST_CASE("star_closure is the smallest u-stable ideal over A (random)") {
  std::mt19937_64 rng(23);
  for (std::uint32_t p : {2u, 3u}) {
    Ring R = testing::ring_xyz(p);
    for (int trial = 0; trial < 8; ++trial) {
      Ideal A = testing::random_ideal(R, rng, 2, 2, 3);
      Polynomial u = testing::random_poly(R, rng, 3, 2 * p + 1);
      Ideal L = star_closure(A, u, 1);
      CHECK(L.contains(A));
      Ideal Lp = frobenius_power_ideal(L, 1);
      for (const auto& g : L.generators()) CHECK(Lp.contains(u * g));

      // u-stable ideals over A from three independent constructions
      std::vector<Ideal> family;
      family.push_back(Ideal::unit(R));
      for (int k = 0; k < 3; ++k) {
        // u ∈ B^[p] forces u B ⊆ B^[p]
        Ideal C = testing::random_ideal(R, rng, 1, 2, 2);
        family.push_back(ideal_sum(ideal_sum(A, C), frobenius_root(u, 1)));
        family.push_back(star_closure(ideal_sum(A, C), u, 1));
      }
      for (const auto& B : family) {
        REQUIRE(B.contains(A));
        CHECK(B.contains(L));
      }
    }
  }
}

TEST_CASE("FrobeniusPair validates u I ⊆ I^[p]") {
  Ring R(2, {"x", "y"});
  CHECK_NOTHROW(FrobeniusPair(I(R, {"x*y"}), P(R, "x*y")));
  CHECK_THROWS_AS(FrobeniusPair(I(R, {"x*y"}), P(R, "x")), PreconditionError);
  CHECK_THROWS_AS(FrobeniusPair(I(R, {"x"}), P(R, "x"), 0), InputError);
  Ring S = testing::minors_ring();
  CHECK_NOTHROW(FrobeniusPair(testing::minors_ideal(S), testing::minors_u(S)));
}

TEST_CASE("nilpotency_analysis examples") {
  Ring S = testing::minors_ring();
  auto rep = nilpotency_analysis(FrobeniusPair(testing::minors_ideal(S), testing::minors_u(S)));
  CHECK(rep.torsion_free);
  CHECK(rep.eta == 0);
  CHECK(rep.nil_ideal.is_unit());
  CHECK(rep.chain.size() == 2);

  Ring R(2, {"x", "y"});
  Ideal A = I(R, {"x^3 + y^2"});
  auto zero = nilpotency_analysis(FrobeniusPair(A, Polynomial(R)));
  CHECK(zero.eta == 1);
  CHECK(ideal_equal(zero.nil_ideal, A));
  CHECK_FALSE(zero.torsion_free);

  Ring Rx(2, {"x"});
  auto sq = nilpotency_analysis(FrobeniusPair(Ideal::zero(Rx), P(Rx, "x^2")));
  REQUIRE(sq.chain.size() == 2);
  CHECK(gb(sq.chain[0]) == std::vector<std::string>{"x"});
  CHECK(gb(sq.chain[1]) == std::vector<std::string>{"x"});
  CHECK(sq.eta == 1);
  CHECK_FALSE(sq.torsion_free);
}

TEST_CASE("nilpotency chain matches the direct formula root(u^nu_k, k) + I") {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u}) {
    Ring R = testing::ring_xyz(p);
    for (int trial = 0; trial < 10; ++trial) {
      // hypersurface f with u = f^(p-1) * h keeps u I ⊆ I^[p]
      Polynomial f = testing::random_poly(R, rng, 3, 3);
      if (f.is_zero()) continue;
      Polynomial u = f.pow(p - 1) * testing::random_poly(R, rng, 2, 2);
      Ideal A(R, {f});
      auto rep = nilpotency_analysis(FrobeniusPair(A, u), {ChainFormula::smallest_containing_I, true, {}});
      for (std::size_t k = 1; k <= rep.chain.size() && k <= 3; ++k) {
        Polynomial power = u.pow(nu(static_cast<unsigned>(k), p));
        Ideal direct = ideal_sum(frobenius_root(power, static_cast<unsigned>(k)), A);
        CHECK(ideal_equal(direct, rep.chain[k - 1]));
        // the other formula, also literal
        Ideal other = ideal_sum(frobenius_root(ideal_sum(Ideal(R, {power}), A), static_cast<unsigned>(k)), A);
        const auto& oc = rep.other_chain;
        CHECK(ideal_equal(other, oc[std::min(k, oc.size()) - 1]));
      }
      for (std::size_t k = 1; k < rep.chain.size(); ++k) CHECK(rep.chain[k - 1].contains(rep.chain[k]));
      // at the stable index u^nu lies in J^[q]
      std::size_t a = rep.chain.size() - 1;
      if (a <= 3) {
        Polynomial power = u.pow(nu(static_cast<unsigned>(a), p));
        CHECK(frobenius_power_ideal(rep.nil_ideal, static_cast<unsigned>(a)).contains(power));
      }
    }
  }
}

TEST_CASE("the two chain formulas can disagree") {
  // u = 0, I = (x): the first formula gives I, the second root(I) + I = (1)
  Ring R(2, {"x", "y"});
  auto rep = nilpotency_analysis(FrobeniusPair(I(R, {"x"}), Polynomial(R)),
                                 {ChainFormula::smallest_containing_I, true, {}});
  CHECK(gb(rep.nil_ideal) == std::vector<std::string>{"x"});
  CHECK(rep.other_chain.front().is_unit());
  REQUIRE(rep.formulas_disagree_at.has_value());
  CHECK(*rep.formulas_disagree_at == 1);

  Ring S = testing::minors_ring();
  auto minors = nilpotency_analysis(FrobeniusPair(testing::minors_ideal(S), testing::minors_u(S)),
                                   {ChainFormula::smallest_containing_I, true, {}});
  CHECK_FALSE(minors.formulas_disagree_at.has_value());
}

TEST_CASE("stable_colon_chain examples") {
  Ring Rx(2, {"x"});
  auto zero = stable_colon_chain(FrobeniusPair(I(Rx, {"x"}), Polynomial(Rx)));
  CHECK(zero.stable.is_unit());
  auto sq = stable_colon_chain(FrobeniusPair(I(Rx, {"x^2"}), P(Rx, "x^2")));
  REQUIRE(sq.chain.size() == 2);
  CHECK(gb(sq.chain[0]) == std::vector<std::string>{"x^2"});
  CHECK(gb(sq.stable) == std::vector<std::string>{"x^2"});
  auto one = stable_colon_chain(FrobeniusPair(Ideal::zero(Rx), P(Rx, "1")));
  CHECK(one.stable.is_zero());
}

TEST_CASE("stable_colon_chain matches the direct colons and is an E_S-ideal") {
  std::mt19937_64 rng(47);
  for (std::uint32_t p : {2u, 3u}) {
    Ring R = testing::ring_xyz(p);
    for (int trial = 0; trial < 8; ++trial) {
      Polynomial f = testing::random_poly(R, rng, 3, 2);
      if (f.is_zero() || f.is_constant()) continue;
      Polynomial u = f.pow(p - 1) * testing::random_poly(R, rng, 2, 2);
      FrobeniusPair fp(Ideal(R, {f}), u);
      auto cc = stable_colon_chain(fp);
      CHECK(is_es_ideal(cc.stable, fp));
      for (std::size_t k = 1; k < cc.chain.size(); ++k) CHECK(cc.chain[k].contains(cc.chain[k - 1]));
      for (std::size_t k = 1; k <= cc.chain.size() && k <= 2; ++k) {
        Polynomial power = u.pow(nu(static_cast<unsigned>(k), p));
        Ideal direct = ideal_colon(frobenius_power_ideal(fp.ideal(), static_cast<unsigned>(k)), power);
        CHECK(ideal_equal(direct, cc.chain[k - 1]));
      }
    }
  }
}

TEST_CASE("is_es_ideal examples") {
  Ring R(2, {"x", "y"});
  FrobeniusPair fp(I(R, {"x*y"}), P(R, "x*y"));
  CHECK(is_es_ideal(fp.ideal(), fp));
  CHECK(is_es_ideal(Ideal::unit(R), fp));
  CHECK_FALSE(is_es_ideal(Ideal::zero(R), fp));
  FrobeniusPair fx(Ideal::zero(R), P(R, "x"));
  CHECK(is_es_ideal(I(R, {"x"}), fx));
  CHECK_FALSE(is_es_ideal(I(R, {"x + y"}), FrobeniusPair(Ideal::zero(R), P(R, "1"))));
  Ring other(2, {"a", "b"});
  CHECK_THROWS_AS(is_es_ideal(Ideal::unit(other), fp), InputError);
}

TEST_CASE("fedder_f_injective examples") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ring R(p, {"x", "y", "z"});
    auto res = fedder_f_injective({P(R, "x")});
    CHECK(res.f_injective);
    CHECK(res.u == P(R, "x").pow(p - 1));
  }
  Ring R2(2, {"x", "y", "z"});
  auto cusp = fedder_f_injective({P(R2, "x^3 + y^3 + z^3")});
  CHECK_FALSE(cusp.f_injective);
  CHECK(cusp.u == P(R2, "x^3 + y^3 + z^3"));
  Ring R3(3, {"x", "y"});
  auto node = fedder_f_injective({P(R3, "x^2 + y^2")});
  CHECK(node.f_injective);
  CHECK(node.u == P(R3, "x^4 + 2*x^2*y^2 + y^4"));
  CHECK_THROWS_AS(fedder_f_injective({}), InputError);
}

TEST_CASE("Fedder verdict equals torsion-freeness for complete intersections") {
  std::mt19937_64 rng(59);
  int compared = 0;
  for (std::uint32_t p : {2u, 3u}) {
    Ring R = testing::ring_xyz(p);
    for (int trial = 0; trial < 15; ++trial) {
      // f in x, y and g in z only: a regular sequence when both are non-constant
      std::vector<Polynomial> seq;
      Polynomial a = testing::random_poly(R, rng, 3, 3);
      Polynomial b(R);
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto m = a.monomial_at(i);
        m[2] = 0;
        b += Polynomial::monomial(R, a.term(i).coefficient, m);
      }
      if (b.is_zero() || b.is_constant()) continue;
      seq.push_back(b);
      if (trial % 2 == 0) seq.push_back(P(R, trial % 4 == 0 ? "z^2" : "z^3 + z^2"));
      auto fedder = fedder_f_injective(seq);
      auto rep = nilpotency_analysis(FrobeniusPair(Ideal(R, seq), fedder.u));
      CHECK(fedder.f_injective == rep.torsion_free);
      ++compared;
    }
  }
  CHECK(compared >= 20);
}

TEST_CASE("twisted_matrix_chain") {
  Ring R(2, {"x", "y"});
  Polynomial u = P(R, "x^2 + x*y^3");
  auto one = twisted_matrix_chain(PolyMatrix::from_rows(R, {{u}}), 3);
  for (std::size_t k = 1; k <= 3; ++k) {
    Ideal direct = frobenius_root(u.pow(nu(static_cast<unsigned>(k), 2)), static_cast<unsigned>(k));
    CHECK(ideal_equal(one[0].chain[k - 1], direct));
  }

  auto id = twisted_matrix_chain(PolyMatrix::identity(R, 2), 2);
  CHECK(id[0].chain[0].is_unit());
  CHECK(id[1].chain[0].is_zero());
  CHECK(id[3].stabilized);
  CHECK(id[1].stabilized);

  auto zero = twisted_matrix_chain(PolyMatrix(R, 2, 2), 2);
  for (const auto& c : zero) {
    CHECK(c.stabilized);
    CHECK(c.chain.back().is_zero());
  }
  CHECK_THROWS_AS(twisted_matrix_chain(PolyMatrix(R, 1, 2), 2), InputError);
}
