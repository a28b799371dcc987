#ifndef FSING_IDEAL_HPP
#define FSING_IDEAL_HPP

#include "fsing/groebner.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace fsing {

/// Finitely generated ideal of a polynomial ring. Immutable; copies share a
/// write-once cache of reduced Groebner bases keyed by monomial order.
class Ideal {
 public:
  /// Zero generators are dropped.
  Ideal(Ring ring, std::vector<Polynomial> generators);
  static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
  static Ideal unit(const Ring& ring);
  /// An ideal whose generators are the elements of an existing reduced basis.
  static Ideal from_basis(const GBasis& G);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const;

  /// Reduced basis in the ring's own order (cached).
  const GBasis& groebner_basis() const;
  /// Reduced basis in another order; elements live in ring().with_order(order).
  const GBasis& groebner_basis(const MonomialOrder& order) const;

  bool contains(const Polynomial& f) const;
  /// B is a subset of this ideal.
  bool contains(const Ideal& B) const;

 private:
  struct Cache;
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

GBasis buchberger(const Ideal& I);
bool ideal_membership(const Polynomial& f, const Ideal& I);
Ideal ideal_sum(const Ideal& A, const Ideal& B);
Ideal ideal_product(const Ideal& A, const Ideal& B);
/// Generators of A ∩ B by eliminating t from t*A + (1 - t)*B.
Ideal ideal_intersection(const Ideal& A, const Ideal& B);
/// (A : f) = (A ∩ (f)) / f. The zero element gives the unit ideal.
Ideal ideal_colon(const Ideal& A, const Polynomial& f);
/// (A : B) as the intersection of (A : b) over the generators of B.
Ideal ideal_colon(const Ideal& A, const Ideal& B);
/// Ideal generated by g^(p^e) for the generators g.
Ideal frobenius_power_ideal(const Ideal& I, unsigned e);
/// Identical reduced Groebner bases (same ring and order required).
bool ideal_equal(const Ideal& A, const Ideal& B);
/// B ⊆ A.
bool ideal_contains(const Ideal& A, const Ideal& B);
/// Ideal generated by f times each generator of A.
Ideal ideal_scale(const Ideal& A, const Polynomial& f);

/// Krull dimension of R/I via the largest set of variables independent modulo
/// the leading-term ideal. std::nullopt for the unit ideal (R/I = 0).
std::optional<std::size_t> krull_dimension(const Ideal& I);

/// Exact quotient f / g; throws InternalError when g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace fsing

#endif  // FSING_IDEAL_HPP
