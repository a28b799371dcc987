#ifndef FSING_DETAIL_TERMS_HPP
#define FSING_DETAIL_TERMS_HPP

// Flat term storage shared by polynomials and module vectors. Each term owns a
// packed key of stride nvars + 2: [component, total degree, e_0, ..., e_{n-1}].
// Polynomials always use component 0. Terms are kept strictly descending in
// the position-over-term order: lower component first, then the monomial order.

#include "fsing/field.hpp"
#include "fsing/monomial.hpp"
#include "fsing/ring.hpp"

#include <cstdint>
#include <vector>

namespace fsing::detail {

struct Layout {
  PrimeField field;
  std::size_t nvars;
  MonomialOrder order;

  std::size_t stride() const noexcept { return nvars + 2; }

  int compare(const std::uint32_t* a, const std::uint32_t* b) const noexcept {
    if (a[0] != b[0]) return a[0] < b[0] ? 1 : -1;
    return compare_packed(order, a + 1, b + 1, nvars);
  }
};

inline Layout layout_of(const Ring& ring) {
  return Layout{ring.field(), ring.nvars(), ring.order()};
}

struct TermBuffer {
  std::vector<std::uint32_t> coeffs;
  std::vector<std::uint32_t> keys;

  std::size_t size() const noexcept { return coeffs.size(); }
  bool empty() const noexcept { return coeffs.empty(); }
  const std::uint32_t* key(std::size_t i, std::size_t stride) const noexcept {
    return keys.data() + i * stride;
  }
  std::uint32_t* key(std::size_t i, std::size_t stride) noexcept {
    return keys.data() + i * stride;
  }
  void clear() noexcept {
    coeffs.clear();
    keys.clear();
  }
  void push(std::uint32_t c, const std::uint32_t* k, std::size_t stride) {
    coeffs.push_back(c);
    keys.insert(keys.end(), k, k + stride);
  }
  bool operator==(const TermBuffer&) const = default;
};

using Key = std::vector<std::uint32_t>;

// Bit i%64 set when variable i occurs; used to reject divisibility quickly.
inline std::uint64_t divmask(const std::uint32_t* key, std::size_t nvars) noexcept {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (key[2 + i] != 0) m |= std::uint64_t{1} << (i % 64);
  }
  return m;
}

// a | b as module monomials (same component, exponentwise <=).
inline bool key_divides(const std::uint32_t* a, const std::uint32_t* b,
                        std::size_t nvars) noexcept {
  if (a[0] != b[0] || a[1] > b[1]) return false;
  for (std::size_t i = 2; i < nvars + 2; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// out = b / a (component 0). Requires key_divides(a, b).
void key_quotient(const std::uint32_t* b, const std::uint32_t* a, std::size_t nvars,
                  std::uint32_t* out) noexcept;
// out = lcm(a, b) carrying a's component.
void key_lcm(const std::uint32_t* a, const std::uint32_t* b, std::size_t nvars,
             std::uint32_t* out);
bool keys_coprime(const std::uint32_t* a, const std::uint32_t* b, std::size_t nvars) noexcept;

// Sorts, merges equal keys, drops zero coefficients.
void canonicalize(const Layout& L, TermBuffer& t);

TermBuffer add(const Layout& L, const TermBuffer& a, const TermBuffer& b);
TermBuffer sub(const Layout& L, const TermBuffer& a, const TermBuffer& b);
TermBuffer scale(const Layout& L, const TermBuffer& a, std::uint32_t c);
// Makes the leading coefficient 1; no-op on zero.
void make_monic(const Layout& L, TermBuffer& a);

// out = c * m * g where m is a component-0 key; result keeps g's components.
void mul_term(const Layout& L, const TermBuffer& g, std::uint32_t c, const std::uint32_t* m,
              TermBuffer& out);

// f := f[0, from) followed by (f[from, end) - c * m * g). The caller guarantees
// that every term of c*m*g is below f[from-1].
void sub_mul_tail(const Layout& L, TermBuffer& f, std::size_t from, std::uint32_t c,
                  const std::uint32_t* m, const TermBuffer& g, TermBuffer& scratch);

// Product of a component-0 buffer with any buffer.
TermBuffer multiply(const Layout& L, const TermBuffer& a, const TermBuffer& b);

}  // namespace fsing::detail

#endif  // FSING_DETAIL_TERMS_HPP
