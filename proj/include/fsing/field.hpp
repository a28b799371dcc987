#ifndef FSING_FIELD_HPP
#define FSING_FIELD_HPP

#include <cstdint>
#include <ostream>

namespace fsing {

/// Trial-division primality test.
bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for a prime 2 <= p < 2^31. Values are kept in [0, p);
/// products go through 64-bit intermediates.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  std::uint32_t reduce(std::uint64_t a) const noexcept {
    return static_cast<std::uint32_t>(a % p_);
  }
  std::uint32_t reduce_signed(std::int64_t a) const noexcept {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;  // < 2^32 since both < 2^31
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  // Throws InputError on zero.
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

/// A single element of F_p carrying its modulus.
class FieldElement {
 public:
  FieldElement(std::uint64_t value, std::uint32_t p);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return p_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const noexcept {
    return p_ == o.p_ && value_ == o.value_;
  }

 private:
  void check_same(const FieldElement& o) const;
  std::uint32_t value_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

}  // namespace fsing

#endif  // FSING_FIELD_HPP
