#ifndef FSING_TESTS_SUPPORT_HPP
#define FSING_TESTS_SUPPORT_HPP

// Shared helpers for the unit and acceptance suites: concise constructors and
// seeded random generators for property checks.

#include "fsing/ideal.hpp"
#include "fsing/parser.hpp"

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace fsing::testing {

inline Polynomial P(const Ring& R, const std::string& text) { return parse_polynomial(text, R); }

inline Ideal I(const Ring& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(parse_polynomial(g, R));
  return Ideal(R, std::move(v));
}

inline std::vector<std::string> strings(const std::vector<Polynomial>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(to_string(f));
  return out;
}

inline Ring ring_xyz(std::uint32_t p, std::size_t n = 3) {
  static const char* names[] = {"x", "y", "z", "w", "v"};
  std::vector<std::string> v(names, names + n);
  return Ring(p, v);
}

/// Random polynomial with at most `terms` terms of total degree <= `max_deg`.
inline Polynomial random_poly(const Ring& R, std::mt19937_64& rng, std::size_t terms,
                              std::uint32_t max_deg) {
  std::uniform_int_distribution<std::uint32_t> coeff(1, R.characteristic() - 1);
  std::vector<std::pair<std::int64_t, Monomial>> t;
  for (std::size_t k = 0; k < terms; ++k) {
    std::uniform_int_distribution<std::uint32_t> deg_dist(0, max_deg);
    std::uint32_t remaining = deg_dist(rng);
    Monomial m(R.nvars());
    for (std::size_t v = 0; v < R.nvars() && remaining > 0; ++v) {
      std::uniform_int_distribution<std::uint32_t> e(0, remaining);
      std::uint32_t ev = (v + 1 == R.nvars()) ? remaining : e(rng);
      m[v] = ev;
      remaining -= ev;
    }
    // shuffle which variable got the leftover so the last one is not favoured
    std::vector<std::uint32_t> ex(m.exponents().begin(), m.exponents().end());
    std::shuffle(ex.begin(), ex.end(), rng);
    t.emplace_back(coeff(rng), Monomial(ex));
  }
  return Polynomial::from_terms(R, t);
}

inline Polynomial random_homogeneous(const Ring& R, std::mt19937_64& rng, std::size_t terms,
                                     std::uint32_t deg) {
  std::uniform_int_distribution<std::uint32_t> coeff(1, R.characteristic() - 1);
  std::uniform_int_distribution<std::size_t> var(0, R.nvars() - 1);
  std::vector<std::pair<std::int64_t, Monomial>> t;
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m(R.nvars());
    for (std::uint32_t d = 0; d < deg; ++d) m[var(rng)] += 1;
    t.emplace_back(coeff(rng), m);
  }
  return Polynomial::from_terms(R, t);
}

inline Ideal random_ideal(const Ring& R, std::mt19937_64& rng, std::size_t gens,
                          std::size_t terms, std::uint32_t max_deg) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < gens; ++i) v.push_back(random_poly(R, rng, terms, max_deg));
  return Ideal(R, std::move(v));
}

/// Random element of A: sum of random multiples of its generators.
inline Polynomial random_element(const Ideal& A, std::mt19937_64& rng, std::size_t terms,
                                 std::uint32_t max_deg) {
  Polynomial f(A.ring());
  for (const auto& g : A.generators()) f += random_poly(A.ring(), rng, terms, max_deg) * g;
  return f;
}

// The two-dimensional Cohen-Macaulay example over F_2: 2x2 minors of
// [[x1, x2, x2, x5], [x4, x4, x3, x1]].
inline Ring minors_ring() { return Ring(2, {"x1", "x2", "x3", "x4", "x5"}); }

inline Ideal minors_ideal(const Ring& R) {
  return I(R, {"x1*x4 + x2*x4", "x1*x3 + x2*x4", "x1^2 + x4*x5", "x2*x3 + x2*x4", "x1*x2 + x4*x5",
               "x1*x2 + x3*x5"});
}

inline Ideal minors_canonical(const Ring& R) {
  return ideal_sum(I(R, {"x1", "x4", "x5"}), minors_ideal(R));
}

inline Polynomial minors_u(const Ring& R) {
  return P(R,
           "x1^3*x2*x3 + x1^3*x2*x4 + x1^2*x3*x4*x5 + x1*x2*x3*x4*x5 + x1*x2*x4^2*x5 + "
           "x2^2*x4^2*x5 + x3*x4^2*x5^2 + x4^3*x5^2");
}

}  // namespace fsing::testing

#endif  // FSING_TESTS_SUPPORT_HPP
