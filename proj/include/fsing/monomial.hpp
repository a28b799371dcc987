#ifndef FSING_MONOMIAL_HPP
#define FSING_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fsing {

enum class OrderKind { lex, grevlex, elimination };

/// Monomial order. `elimination(k)` compares the degree in the first k
/// variables first (grevlex inside each block), so any polynomial whose
/// leading term avoids the first k variables lies entirely in the rest.
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex, 0); }
  static MonomialOrder elimination(std::size_t k) {
    return MonomialOrder(OrderKind::elimination, k);
  }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  std::string name() const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(OrderKind kind, std::size_t block) : kind_(kind), block_(block) {}
  OrderKind kind_;
  std::size_t block_;
};

/// Exponent vector, one entry per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  // Throws InputError when an exponent would exceed 32 bits.
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a,
                                       const Monomial& b);

namespace detail {

// Compares two packed exponent records [deg, e_0, ..., e_{n-1}] of n variables.
// Returns -1, 0, 1.
inline int compare_packed(const MonomialOrder& order, const std::uint32_t* a,
                          const std::uint32_t* b, std::size_t n) noexcept {
  switch (order.kind()) {
    case OrderKind::grevlex:
      if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
      for (std::size_t i = n; i >= 1; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::lex:
      for (std::size_t i = 1; i <= n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::elimination: {
      const std::size_t k = order.block();
      std::uint64_t da = 0, db = 0;
      for (std::size_t i = 1; i <= k; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = k; i >= 1; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
      for (std::size_t i = n; i > k; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

}  // namespace detail
}  // namespace fsing

#endif  // FSING_MONOMIAL_HPP
