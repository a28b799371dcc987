#ifndef FSING_DETAIL_ENGINE_HPP
#define FSING_DETAIL_ENGINE_HPP

// Buchberger engine over packed term buffers. Works for ideals (all terms in
// component 0) and for submodules of free modules (position-over-term).
//
// Two kernels compute the same reduced basis:
//   serial   - one S-pair at a time; the reference implementation.
//   parallel - all pairs of the lowest sugar degree are reduced concurrently
//              with OpenMP, then inserted in a fixed order.
// Reduced Groebner bases are unique, so both must agree exactly.

#include "fsing/detail/terms.hpp"

#include <span>
#include <vector>

namespace fsing {

enum class GbStrategy { serial, parallel };

/// Process-wide default used when a caller does not pick a kernel.
void set_default_gb_strategy(GbStrategy s) noexcept;
GbStrategy default_gb_strategy() noexcept;

namespace detail {

/// Monic divisors with cached divisibility masks.
class DivisorSet {
 public:
  DivisorSet(const Layout& L, std::span<const TermBuffer> polys);
  DivisorSet(const Layout& L, std::vector<const TermBuffer*> polys);

  std::size_t size() const noexcept { return polys_.size(); }
  const TermBuffer& operator[](std::size_t i) const { return *polys_[i]; }
  // Index of the first element whose leading key divides `key`, or size().
  std::size_t find_divisor(const std::uint32_t* key, std::size_t skip = SIZE_MAX) const noexcept;

 private:
  std::size_t nvars_;
  std::size_t stride_;
  std::vector<const TermBuffer*> polys_;
  std::vector<std::uint64_t> masks_;
};

/// Full normal form of f with respect to a set of monic polynomials.
/// `skip` excludes one divisor (used for inter-reduction).
TermBuffer normal_form(const Layout& L, TermBuffer f, const DivisorSet& G,
                       std::size_t skip = SIZE_MAX);

/// Normal forms of many inputs; the parallel strategy distributes them over threads.
std::vector<TermBuffer> normal_forms(const Layout& L, std::span<const TermBuffer> fs,
                                     const DivisorSet& G, GbStrategy strategy);

/// Reduced Groebner basis (monic, sorted by descending leading term).
/// Zero inputs are ignored; the empty result is the zero submodule.
std::vector<TermBuffer> reduced_groebner_basis(const Layout& L, std::vector<TermBuffer> input,
                                               GbStrategy strategy);

/// Division with quotient tracking: f = sum q_i * G_i + r. G need not be a
/// Groebner basis. Used for exact division and lifting.
struct Division {
  std::vector<TermBuffer> quotients;
  TermBuffer remainder;
};
Division divide(const Layout& L, const TermBuffer& f, std::span<const TermBuffer> G);

}  // namespace detail
}  // namespace fsing

#endif  // FSING_DETAIL_ENGINE_HPP
