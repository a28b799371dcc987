#ifndef FSING_POLYNOMIAL_HPP
#define FSING_POLYNOMIAL_HPP

#include "fsing/detail/terms.hpp"
#include "fsing/ring.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fsing {

struct TermView {
  std::uint32_t coefficient;
  std::span<const std::uint32_t> exponents;
};

/// Sparse polynomial over a Ring. Terms are stored strictly descending in
/// the ring's monomial order with nonzero coefficients, so equal polynomials
/// have identical term lists.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, std::int64_t c);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial monomial(const Ring& ring, std::uint32_t c, const Monomial& m);
  /// Arbitrary (coefficient, monomial) list; duplicates are combined.
  static Polynomial from_terms(const Ring& ring,
                               const std::vector<std::pair<std::int64_t, Monomial>>& terms);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Nonzero constant.
  bool is_unit() const noexcept { return !is_zero() && is_constant(); }

  TermView term(std::size_t i) const;
  std::uint32_t leading_coefficient() const;
  Monomial leading_monomial() const;
  Monomial monomial_at(std::size_t i) const;
  /// Maximum total degree over the terms; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  bool operator==(const Polynomial& o) const;

  Polynomial scaled(std::uint32_t c) const;
  Polynomial monic() const;
  /// Repeated squaring.
  Polynomial pow(std::uint64_t n) const;
  /// f^(p^e), computed termwise: coefficients are fixed by Frobenius on F_p.
  Polynomial frobenius_power(unsigned e) const;
  /// Same polynomial re-sorted for a ring with identical variables.
  Polynomial in_ring(const Ring& target) const;

  // Internal access for the algebra kernels.
  const detail::TermBuffer& buffer() const noexcept { return terms_; }
  static Polynomial from_buffer(const Ring& ring, detail::TermBuffer terms);

 private:
  Ring ring_;
  detail::TermBuffer terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial frobenius_power_poly(const Polynomial& f, unsigned e);

/// p^e; throws InputError if it does not fit 32 bits or e == 0.
std::uint32_t frobenius_exponent(std::uint32_t p, unsigned e);

}  // namespace fsing

#endif  // FSING_POLYNOMIAL_HPP
