#ifndef FSING_TESTIDEAL_HPP
#define FSING_TESTIDEAL_HPP

// Parameter test ideals of Cohen-Macaulay quotients R/I:
//   tau = ((c J + I)^{*u} : J)
// with J the pre-image of a canonical ideal, u the generator of the Frobenius
// action on the canonical module and c a parameter test element.

#include "fsing/canonical.hpp"
#include "fsing/frobroot.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fsing {

struct StageTiming {
  std::string stage;
  double seconds;
};

struct TestIdealOptions {
  std::uint64_t seed = 0;
  std::size_t test_element_draws = 200;
  ChainLimits limits;
};

struct TestIdealReport {
  Polynomial u;
  Ideal J;
  Polynomial c;
  /// c was drawn by suggest_test_element rather than supplied
  bool c_suggested;
  /// (c J + I)^{*u}
  Ideal star;
  Ideal tau;
  bool f_rational;
  NilpotencyReport nilpotency;
  std::size_t resolution_length;
  std::uint64_t seed;
  std::vector<StageTiming> timings;
};

/// `canonical` is the pre-image J of a canonical ideal; std::nullopt means
/// R/I is Gorenstein and J = (1). Without `c` a test element is drawn with
/// options.seed.
/// Throws PreconditionError when R/I is not Cohen-Macaulay, the Frobenius
/// action is not torsion-free, c is a zero divisor, or u cannot be found.
TestIdealReport parameter_test_ideal(const Ideal& I, const std::optional<Ideal>& canonical,
                                     const std::optional<Polynomial>& c = std::nullopt,
                                     const TestIdealOptions& options = {});

enum class InjectivityMode {
  /// I is generated by a regular sequence; u = (product of generators)^(p-1)
  complete_intersection,
  /// u from u_generator(I, J)
  general
};

struct FInjectivityReport {
  bool f_injective;
  std::size_t eta;
  Ideal nil_ideal;
  Polynomial u;
};

/// F-injectivity as torsion-freeness of the Frobenius action on the top local
/// cohomology. `canonical` is used in general mode only (std::nullopt: J = (1)).
FInjectivityReport f_injectivity_report(const Ideal& I, InjectivityMode mode,
                                        const std::optional<Ideal>& canonical = std::nullopt);

}  // namespace fsing

#endif  // FSING_TESTIDEAL_HPP
