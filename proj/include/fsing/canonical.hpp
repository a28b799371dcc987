#ifndef FSING_CANONICAL_HPP
#define FSING_CANONICAL_HPP

// Syzygies, minimal free resolutions, Ext presentations, the generator u of
// the Frobenius action on the canonical module, and test element candidates.

#include "fsing/errors.hpp"
#include "fsing/ideal.hpp"
#include "fsing/matrix.hpp"

#include <cstdint>
#include <vector>

namespace fsing {

/// Columns generate { v : M v = 0 }. Computed from a position-over-term
/// Groebner basis of the columns (M_j, e_j) of the stacked matrix [M; 1].
PolyMatrix syzygy_matrix(const PolyMatrix& M);

struct ResolutionStep {
  /// F_i -> F_{i-1}; the first step is the 1 x n row of generators.
  PolyMatrix differential;
};

/// Thrown when the resolution is longer than requested; carries the steps
/// computed so far.
class ResolutionTooLong : public PreconditionError {
 public:
  ResolutionTooLong(std::size_t max_length, std::vector<ResolutionStep> partial);
  const std::vector<ResolutionStep>& partial() const noexcept { return partial_; }

 private:
  std::vector<ResolutionStep> partial_;
};

/// Minimal (no constant nonzero entries) free resolution of R/I, at most
/// `max_length` differentials. I must be proper and nonzero.
std::vector<ResolutionStep> free_resolution(const Ideal& I, std::size_t max_length);

/// nvars - dim R/I. I must be proper.
std::size_t codimension(const Ideal& I);

/// Presentation of Ext^delta(R/I, R): its cokernel is the module, and no entry
/// is a nonzero constant, so the row count is the minimal number of generators.
/// delta must equal codimension(I).
PolyMatrix ext_presentation(const Ideal& I, std::size_t delta);

/// Removes constant entries from a presentation matrix without changing its
/// cokernel.
PolyMatrix prune_presentation(PolyMatrix P);

struct UGeneratorOptions {
  std::uint64_t seed = 0;
  /// random F_p-combinations tried after the single generators
  std::size_t random_attempts = 500;
};

/// Generator u of ((I^[p] : I) ∩ (J^[p] : J)) modulo I^[p], in normal form
/// with respect to I^[p] (monic). J is the pre-image in R of a canonical
/// ideal of R/I; J = (1) for Gorenstein rings.
Polynomial u_generator(const Ideal& I, const Ideal& J, const UGeneratorOptions& options = {});

/// Polynomial partial derivative d f / d x_var.
Polynomial derivative(const Polynomial& f, std::size_t var);

/// Ideal of k x k minors of the Jacobian matrix of I's generators, plus I.
Ideal jacobian_ideal(const Ideal& I, std::size_t k);

struct TestElementOptions {
  std::uint64_t seed = 0;
  std::size_t max_draws = 200;
};

/// A seeded random F_p-combination c of the generators of the Jacobian ideal
/// (minors of size codim) with (I : c) = I. R/I is assumed reduced and
/// equidimensional; throws PreconditionError when no draw succeeds.
Polynomial suggest_test_element(const Ideal& I, const TestElementOptions& options = {});

}  // namespace fsing

#endif  // FSING_CANONICAL_HPP
