#include "doctest.h"
#include "support.hpp"

#include "fsing/canonical.hpp"
#include "fsing/detail/engine.hpp"

#include <set>

using namespace fsing;
using fsing::testing::I;
using fsing::testing::P;

namespace {

// Membership of v in the column span of S via a module Groebner basis; built
// directly on the engine so it shares nothing with syzygy_matrix's extraction.
detail::TermBuffer pack_column(const Ring& R, const std::vector<Polynomial>& v) {
  const std::size_t s = R.nvars() + 2;
  detail::TermBuffer out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& b = v[i].buffer();
    for (std::size_t t = 0; t < b.size(); ++t) {
      std::vector<std::uint32_t> key(b.key(t, s), b.key(t, s) + s);
      key[0] = static_cast<std::uint32_t>(i);
      out.push(b.coeffs[t], key.data(), s);
    }
  }
  return out;
}

bool in_column_span(const PolyMatrix& S, const std::vector<Polynomial>& v) {
  const Ring& R = S.ring();
  auto L = detail::layout_of(R);
  std::vector<detail::TermBuffer> cols;
  for (std::size_t c = 0; c < S.cols(); ++c) cols.push_back(pack_column(R, S.column(c)));
  auto G = detail::reduced_groebner_basis(L, cols, GbStrategy::serial);
  detail::DivisorSet D(L, std::span<const detail::TermBuffer>(G));
  return detail::normal_form(L, pack_column(R, v), D).empty();
}

bool has_constant_entry(const PolyMatrix& M) {
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (M(i, j).is_unit()) return true;
  return false;
}

std::set<std::string> entry_set(const PolyMatrix& M) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!M(i, j).is_zero()) out.insert(to_string(M(i, j).monic()));
  return out;
}

std::vector<std::size_t> ranks(const std::vector<ResolutionStep>& res) {
  std::vector<std::size_t> out;
  if (res.empty()) return out;
  out.push_back(res[0].differential.rows());
  for (const auto& s : res) out.push_back(s.differential.cols());
  return out;
}

void check_resolution(const Ideal& A, const std::vector<ResolutionStep>& res) {
  for (std::size_t i = 0; i < res.size(); ++i) {
    CHECK_FALSE(has_constant_entry(res[i].differential));
    if (i + 1 < res.size()) CHECK((res[i].differential * res[i + 1].differential).is_zero());
  }
  // exactness: every syzygy of d_i lies in the image of d_{i+1}
  for (std::size_t i = 0; i < res.size(); ++i) {
    PolyMatrix K = syzygy_matrix(res[i].differential);
    for (std::size_t c = 0; c < K.cols(); ++c) {
      REQUIRE(i + 1 < res.size());
      CHECK(in_column_span(res[i + 1].differential, K.column(c)));
    }
  }
  // the first differential generates A
  CHECK(ideal_equal(Ideal(A.ring(), res[0].differential.row(0)), A));
}

}  // namespace

TEST_CASE("syzygy_matrix examples") {
  Ring R(3, {"x", "y", "z"});
  auto S = syzygy_matrix(PolyMatrix::from_rows(R, {{P(R, "x"), P(R, "y")}}));
  REQUIRE(S.cols() == 1);
  CHECK(((S(0, 0) == P(R, "y") && S(1, 0) == P(R, "-x")) ||
         (S(0, 0) == P(R, "-y") && S(1, 0) == P(R, "x"))));
  CHECK(syzygy_matrix(PolyMatrix::from_rows(R, {{P(R, "x")}})).cols() == 0);

  PolyMatrix M = PolyMatrix::from_rows(R, {{P(R, "x"), P(R, "y"), P(R, "z")}});
  auto K = syzygy_matrix(M);
  CHECK(K.cols() == 3);
  CHECK((M * K).is_zero());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> a;
    for (std::size_t c = 0; c < K.cols(); ++c) a.push_back(testing::random_poly(R, rng, 3, 2));
    auto image = M.apply(K.apply(a));
    CHECK(image[0].is_zero());
  }
}

TEST_CASE("syzygies of random rows are complete (Koszul relations lie in the span)") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    Ring R = testing::ring_xyz(p);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Polynomial> f;
      for (int i = 0; i < 3; ++i) f.push_back(testing::random_poly(R, rng, 3, 2));
      if (std::any_of(f.begin(), f.end(), [](const Polynomial& g) { return g.is_zero(); })) continue;
      PolyMatrix M = PolyMatrix::from_rows(R, {f});
      PolyMatrix S = syzygy_matrix(M);
      CHECK((M * S).is_zero());
      for (int k = 0; k < 20; ++k) {
        // random combination of the three Koszul relations
        Polynomial a = testing::random_poly(R, rng, 2, 2), b = testing::random_poly(R, rng, 2, 2),
                   c = testing::random_poly(R, rng, 2, 2);
        std::vector<Polynomial> v{a * f[1] + b * f[2], -(a * f[0]) + c * f[2], -(b * f[0]) - c * f[1]};
        CHECK(M.apply(v)[0].is_zero());
        CHECK(in_column_span(S, v));
      }
    }
  }
}

TEST_CASE("syzygies of a 2x3 matrix") {
  Ring R(5, {"a", "b", "c", "d", "e", "f"});
  PolyMatrix M = PolyMatrix::from_rows(
      R, {{P(R, "a"), P(R, "b"), P(R, "c")}, {P(R, "d"), P(R, "e"), P(R, "f")}});
  PolyMatrix S = syzygy_matrix(M);
  CHECK((M * S).is_zero());
  // the cross product of the rows is a syzygy
  std::vector<Polynomial> cross{P(R, "b*f - c*e"), P(R, "c*d - a*f"), P(R, "a*e - b*d")};
  CHECK(in_column_span(S, cross));
}

TEST_CASE("free_resolution examples") {
  Ring R1(2, {"x"});
  auto r1 = free_resolution(I(R1, {"x"}), 4);
  CHECK(ranks(r1) == std::vector<std::size_t>{1, 1});

  Ring R2(3, {"x", "y"});
  auto r2 = free_resolution(I(R2, {"x", "y"}), 4);
  CHECK(ranks(r2) == std::vector<std::size_t>{1, 2, 1});
  check_resolution(I(R2, {"x", "y"}), r2);

  // redundant generators are pruned away
  auto r3 = free_resolution(I(R2, {"x", "y", "x + y", "x*y"}), 4);
  CHECK(ranks(r3) == std::vector<std::size_t>{1, 2, 1});

  Ring S = testing::minors_ring();
  Ideal minors = testing::minors_ideal(S);
  auto rp = free_resolution(minors, 6);
  CHECK(ranks(rp) == std::vector<std::size_t>{1, 6, 8, 3});
  check_resolution(minors, rp);
  CHECK(codimension(minors) == 3);

  CHECK_THROWS_AS(free_resolution(Ideal::unit(R2), 3), InputError);
  Ring R3(2, {"x", "y", "z"});
  try {
    free_resolution(I(R3, {"x", "y", "z"}), 2);
    FAIL("expected ResolutionTooLong");
  } catch (const ResolutionTooLong& e) {
    CHECK(e.partial().size() == 2);
  }
}

TEST_CASE("free resolutions of random homogeneous ideals") {
  std::mt19937_64 rng(19);
  for (std::uint32_t p : {2u, 3u}) {
    Ring R = testing::ring_xyz(p);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Polynomial> gens;
      for (int i = 0; i < 3; ++i) gens.push_back(testing::random_homogeneous(R, rng, 3, 2 + i % 2));
      Ideal A(R, gens);
      if (A.is_zero() || A.is_unit()) continue;
      auto res = free_resolution(A, 4);
      CHECK(res.size() <= 3);
      check_resolution(A, res);
    }
  }
}

TEST_CASE("resolution length equals codimension for complete intersections") {
  Ring R(3, {"x", "y", "z", "w"});
  for (const auto& gens : std::vector<std::vector<const char*>>{
           {"x^2"}, {"x^2", "y^3"}, {"x*y", "z^2 + w^2"}, {"x^2 + y^2", "z^3", "w*x"}}) {
    std::vector<Polynomial> v;
    for (auto g : gens) v.push_back(P(R, g));
    Ideal A(R, v);
    CHECK(free_resolution(A, 5).size() == codimension(A));
  }
  // two planes meeting in a point: codim 2, depth 1, not Cohen-Macaulay
  Ideal planes = I(R, {"x*z", "x*w", "y*z", "y*w"});
  CHECK(codimension(planes) == 2);
  CHECK(free_resolution(planes, 5).size() == 3);
}

TEST_CASE("ext_presentation examples") {
  Ring R1(2, {"x"});
  auto e1 = ext_presentation(I(R1, {"x"}), 1);
  CHECK(e1.rows() == 1);
  CHECK(entry_set(e1) == std::set<std::string>{"x"});

  Ring R2(2, {"x", "y"});
  auto e2 = ext_presentation(I(R2, {"x", "y"}), 2);
  CHECK(e2.rows() == 1);
  CHECK(entry_set(e2) == std::set<std::string>{"x", "y"});
  CHECK_THROWS_AS(ext_presentation(I(R2, {"x", "y"}), 1), PreconditionError);

  Ring S = testing::minors_ring();
  auto ep = ext_presentation(testing::minors_ideal(S), 3);
  CHECK(ep.rows() == 3);
  CHECK(ep.cols() == 8);
  CHECK_FALSE(has_constant_entry(ep));

  // Ext^2 of two planes through a point is the sum of their canonical modules
  Ring R4(3, {"x", "y", "z", "w"});
  auto planes = ext_presentation(I(R4, {"x*z", "x*w", "y*z", "y*w"}), 2);
  CHECK(planes.rows() == 2);
  CHECK_FALSE(has_constant_entry(planes));
  // complete intersections are Gorenstein: one generator
  CHECK(ext_presentation(I(R4, {"x^2 + y*z", "w^3"}), 2).rows() == 1);
}

TEST_CASE("u_generator examples") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ring R(p, {"x", "y", "z"});
    Polynomial f = P(R, "x^2 + y*z + z^3");
    CHECK(u_generator(Ideal(R, {f}), Ideal::unit(R)) == f.pow(p - 1));
  }
  Ring R2(2, {"x", "y"});
  CHECK(u_generator(I(R2, {"x", "y"}), Ideal::unit(R2)) == P(R2, "x*y"));
  CHECK_THROWS_AS(u_generator(I(R2, {"x"}), I(R2, {"y"})), PreconditionError);

  Ring S = testing::minors_ring();
  Ideal minors = testing::minors_ideal(S);
  Polynomial u = u_generator(minors, testing::minors_canonical(S));
  Ideal Ip = frobenius_power_ideal(minors, 1);
  CHECK(u == Ip.groebner_basis().normal_form(testing::minors_u(S)));
  CHECK(to_string(u) == to_string(testing::minors_u(S)));
}

TEST_CASE("u_generator satisfies its contract on complete intersections") {
  std::mt19937_64 rng(29);
  for (std::uint32_t p : {2u, 3u}) {
    Ring R(p, {"x", "y", "z", "w"});
    for (int trial = 0; trial < 6; ++trial) {
      // f in x, y and g in z, w form a regular sequence
      Polynomial f = testing::random_homogeneous(R, rng, 3, 2);
      Polynomial g = testing::random_homogeneous(R, rng, 3, 2);
      Polynomial fx(R), gz(R);
      for (std::size_t i = 0; i < f.size(); ++i) {
        auto m = f.monomial_at(i);
        if (m[2] == 0 && m[3] == 0) fx += Polynomial::monomial(R, f.term(i).coefficient, m);
      }
      for (std::size_t i = 0; i < g.size(); ++i) {
        auto m = g.monomial_at(i);
        if (m[0] == 0 && m[1] == 0) gz += Polynomial::monomial(R, g.term(i).coefficient, m);
      }
      if (fx.is_zero() || gz.is_zero()) continue;
      Ideal A(R, {fx, gz});
      Polynomial u = u_generator(A, Ideal::unit(R));
      Ideal Ap = frobenius_power_ideal(A, 1);
      CHECK(Ap.contains(ideal_scale(A, u)));
      Ideal M = ideal_colon(Ap, A);
      CHECK(ideal_sum(Ideal(R, {u}), Ap).contains(M));
      CHECK(ideal_equal(ideal_sum(Ideal(R, {u}), Ap),
                        ideal_sum(Ideal(R, {(fx * gz).pow(p - 1)}), Ap)));
    }
  }
}

TEST_CASE("derivative and jacobian_ideal") {
  Ring R(3, {"x", "y"});
  CHECK(derivative(P(R, "x^3*y + 2*x*y^2 + y"), 0) == P(R, "2*y^2"));
  CHECK(derivative(P(R, "x^3*y + 2*x*y^2 + y"), 1) == P(R, "x^3 + x*y + 1"));
  CHECK_THROWS_AS(derivative(P(R, "x"), 2), InputError);
  CHECK(jacobian_ideal(I(R, {"x*y"}), 1).contains(I(R, {"x", "y"})));
  CHECK(jacobian_ideal(I(R, {"x"}), 1).is_unit());
}

TEST_CASE("suggest_test_element examples") {
  Ring R(2, {"x", "y"});
  CHECK(suggest_test_element(I(R, {"x"})) == P(R, "1"));
  CHECK(suggest_test_element(I(R, {"x*y"})) == P(R, "x + y"));
  CHECK_THROWS_AS(suggest_test_element(I(R, {"x^2"})), PreconditionError);
  Ring R3(3, {"x", "y"});
  CHECK_THROWS_AS(suggest_test_element(I(R3, {"x^2"})), PreconditionError);
}

TEST_CASE("suggested test elements are nonzerodivisors") {
  Ring S = testing::minors_ring();
  Ideal minors = testing::minors_ideal(S);
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Polynomial c = suggest_test_element(minors, {seed, 200});
    CHECK(ideal_equal(ideal_colon(minors, c), minors));
    CHECK(jacobian_ideal(minors, 3).contains(c));
    seen.insert(to_string(c));
  }
  CHECK(seen.size() > 1);

  std::mt19937_64 rng(37);
  Ring R(3, {"x", "y", "z"});
  for (int trial = 0; trial < 6; ++trial) {
    Polynomial f = testing::random_homogeneous(R, rng, 4, 3);
    if (f.is_zero()) continue;
    Ideal A(R, {f});
    try {
      Polynomial c = suggest_test_element(A, {static_cast<std::uint64_t>(trial), 50});
      CHECK(ideal_equal(ideal_colon(A, c), A));
    } catch (const PreconditionError&) {
      // f with a repeated factor has no admissible candidate; that is allowed
    }
  }
}
