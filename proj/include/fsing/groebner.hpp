#ifndef FSING_GROEBNER_HPP
#define FSING_GROEBNER_HPP

#include "fsing/detail/engine.hpp"
#include "fsing/polynomial.hpp"

#include <memory>
#include <vector>

namespace fsing {

/// A reduced Groebner basis: monic elements, no term of any element divisible
/// by another element's leading term, sorted by descending leading monomial.
class GBasis {
 public:
  /// `elements` must already be a reduced Groebner basis in `ring`'s order.
  GBasis(Ring ring, std::vector<Polynomial> elements);

  const Ring& ring() const noexcept { return impl_->ring; }
  const MonomialOrder& order() const noexcept { return impl_->ring.order(); }
  const std::vector<Polynomial>& elements() const noexcept { return impl_->elements; }
  std::size_t size() const noexcept { return impl_->elements.size(); }
  bool empty() const noexcept { return impl_->elements.empty(); }
  bool is_unit() const noexcept;

  Polynomial normal_form(const Polynomial& f) const;
  std::vector<Polynomial> normal_forms(const std::vector<Polynomial>& fs,
                                       GbStrategy strategy = default_gb_strategy()) const;

  const detail::DivisorSet& divisors() const noexcept { return impl_->divisors; }

 private:
  struct Impl {
    Impl(Ring r, std::vector<Polynomial> e);
    Ring ring;
    std::vector<Polynomial> elements;
    detail::DivisorSet divisors;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Remainder of f modulo G: f - r lies in the ideal and no term of r is
/// divisible by a leading term of G.
Polynomial normal_form(const Polynomial& f, const GBasis& G);

/// Reduced Groebner basis of the ideal generated by `gens` in `ring`'s order.
GBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens,
                  GbStrategy strategy = default_gb_strategy());

}  // namespace fsing

#endif  // FSING_GROEBNER_HPP
