#include "fsing/polynomial.hpp"

#include "fsing/errors.hpp"

#include <limits>
#include <string>

namespace fsing {

using detail::Layout;
using detail::TermBuffer;

std::uint32_t frobenius_exponent(std::uint32_t p, unsigned e) {
  if (e == 0) throw InputError("Frobenius exponent e must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > std::numeric_limits<std::uint32_t>::max()) {
      throw InputError("p^e = " + std::to_string(p) + "^" + std::to_string(e) +
                       " does not fit 32 bits");
    }
  }
  return static_cast<std::uint32_t>(q);
}

Polynomial Polynomial::from_buffer(const Ring& ring, TermBuffer terms) {
  Polynomial f(ring);
  f.terms_ = std::move(terms);
  return f;
}

Polynomial Polynomial::constant(const Ring& ring, std::int64_t c) {
  Polynomial f(ring);
  std::uint32_t v = ring.field().reduce_signed(c);
  if (v != 0) {
    std::vector<std::uint32_t> key(ring.nvars() + 2, 0);
    f.terms_.push(v, key.data(), key.size());
  }
  return f;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  if (index >= ring.nvars()) throw InputError("variable index out of range");
  Polynomial f(ring);
  std::vector<std::uint32_t> key(ring.nvars() + 2, 0);
  key[1] = 1;
  key[2 + index] = 1;
  f.terms_.push(1, key.data(), key.size());
  return f;
}

Polynomial Polynomial::monomial(const Ring& ring, std::uint32_t c, const Monomial& m) {
  return from_terms(ring, {{static_cast<std::int64_t>(c), m}});
}

Polynomial Polynomial::from_terms(const Ring& ring,
                                  const std::vector<std::pair<std::int64_t, Monomial>>& terms) {
  const Layout L = detail::layout_of(ring);
  TermBuffer buf;
  std::vector<std::uint32_t> key(L.stride());
  for (const auto& [c, m] : terms) {
    if (m.size() != ring.nvars()) throw InputError("monomial length does not match ring");
    std::uint64_t deg = m.degree();
    if (deg > std::numeric_limits<std::uint32_t>::max()) {
      throw InputError("total degree exceeds 32 bits");
    }
    key[0] = 0;
    key[1] = static_cast<std::uint32_t>(deg);
    for (std::size_t i = 0; i < m.size(); ++i) key[2 + i] = m[i];
    buf.push(ring.field().reduce_signed(c), key.data(), key.size());
  }
  detail::canonicalize(L, buf);
  return from_buffer(ring, std::move(buf));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.keys[1] == 0);
}

TermView Polynomial::term(std::size_t i) const {
  const std::size_t s = ring_.nvars() + 2;
  return TermView{terms_.coeffs.at(i),
                  std::span<const std::uint32_t>(terms_.key(i, s) + 2, ring_.nvars())};
}

std::uint32_t Polynomial::leading_coefficient() const {
  if (is_zero()) throw InputError("leading coefficient of zero polynomial");
  return terms_.coeffs[0];
}

Monomial Polynomial::monomial_at(std::size_t i) const {
  auto t = term(i);
  return Monomial(std::vector<std::uint32_t>(t.exponents.begin(), t.exponents.end()));
}

Monomial Polynomial::leading_monomial() const {
  if (is_zero()) throw InputError("leading monomial of zero polynomial");
  return monomial_at(0);
}

std::uint64_t Polynomial::degree() const noexcept {
  const std::size_t s = ring_.nvars() + 2;
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) d = std::max<std::uint64_t>(d, terms_.key(i, s)[1]);
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_, "polynomial addition");
  return from_buffer(ring_, detail::add(detail::layout_of(ring_), terms_, o.terms_));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_, "polynomial subtraction");
  return from_buffer(ring_, detail::sub(detail::layout_of(ring_), terms_, o.terms_));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_, "polynomial multiplication");
  const Layout L = detail::layout_of(ring_);
  // multiply() walks the rows of its first argument
  if (terms_.size() <= o.terms_.size()) return from_buffer(ring_, detail::multiply(L, terms_, o.terms_));
  return from_buffer(ring_, detail::multiply(L, o.terms_, terms_));
}

Polynomial Polynomial::operator-() const {
  return from_buffer(ring_, detail::scale(detail::layout_of(ring_), terms_,
                                          ring_.field().neg(1)));
}

bool Polynomial::operator==(const Polynomial& o) const {
  return ring_.same_variables(o.ring_) && ring_.order() == o.ring_.order() &&
         terms_ == o.terms_;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  return from_buffer(ring_, detail::scale(detail::layout_of(ring_), terms_, c));
}

Polynomial Polynomial::monic() const {
  TermBuffer t = terms_;
  detail::make_monic(detail::layout_of(ring_), t);
  return from_buffer(ring_, std::move(t));
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::frobenius_power(unsigned e) const {
  const std::uint64_t q = frobenius_exponent(ring_.characteristic(), e);
  const std::size_t s = ring_.nvars() + 2;
  TermBuffer out = terms_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t* k = out.key(i, s);
    for (std::size_t v = 1; v < s; ++v) {
      std::uint64_t x = static_cast<std::uint64_t>(k[v]) * q;
      if (x > std::numeric_limits<std::uint32_t>::max()) {
        throw InputError("exponent overflow in Frobenius power");
      }
      k[v] = static_cast<std::uint32_t>(x);
    }
  }
  // x -> x^q is strictly monotone for every order used here, so the term
  // order is preserved; coefficients satisfy c^q = c in F_p.
  return from_buffer(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const Ring& target) const {
  if (!ring_.same_variables(target)) throw InputError("in_ring: incompatible rings");
  if (ring_.order() == target.order()) return from_buffer(target, terms_);
  TermBuffer t = terms_;
  detail::canonicalize(detail::layout_of(target), t);
  return from_buffer(target, std::move(t));
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_sub(const Polynomial& f, const Polynomial& g) { return f - g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Polynomial frobenius_power_poly(const Polynomial& f, unsigned e) { return f.frobenius_power(e); }

}  // namespace fsing
