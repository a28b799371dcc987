#include "fsing/field.hpp"

#include "fsing/errors.hpp"

#include <string>

namespace fsing {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31)) {
    throw InputError("characteristic " + std::to_string(p) + " outside [2, 2^31)");
  }
  if (!is_prime(p)) {
    throw InputError("characteristic " + std::to_string(p) + " is not prime");
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw InputError("division by zero in F_" + std::to_string(p_));
  // extended Euclid on (a, p)
  std::int64_t r0 = p_, r1 = a % p_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce_signed(s0);
}

FieldElement::FieldElement(std::uint64_t value, std::uint32_t p)
    : value_(PrimeField(p).reduce(value)), p_(p) {}

void FieldElement::check_same(const FieldElement& o) const {
  if (p_ != o.p_) {
    throw InputError("field mismatch: F_" + std::to_string(p_) + " vs F_" +
                     std::to_string(o.p_));
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return FieldElement(static_cast<std::uint64_t>(value_) + o.value_, p_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return FieldElement(static_cast<std::uint64_t>(value_) + p_ - o.value_, p_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return FieldElement(static_cast<std::uint64_t>(value_) * o.value_, p_);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(value_ == 0 ? 0 : p_ - value_, p_);
}

FieldElement FieldElement::inverse() const {
  return FieldElement(PrimeField(p_).inv(value_), p_);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  return FieldElement(PrimeField(p_).pow(value_, e), p_);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << a.value();
}

}  // namespace fsing
