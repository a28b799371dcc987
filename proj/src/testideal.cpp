#include "fsing/testideal.hpp"

#include "fsing/errors.hpp"

#include <chrono>

namespace fsing {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<StageTiming>& out) : out_(out) {}
  void lap(std::string stage) {
    auto now = std::chrono::steady_clock::now();
    out_.push_back({std::move(stage), std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }

 private:
  std::vector<StageTiming>& out_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

TestIdealReport parameter_test_ideal(const Ideal& I, const std::optional<Ideal>& canonical,
                                     const std::optional<Polynomial>& c,
                                     const TestIdealOptions& options) {
  const Ring& R = I.ring();
  if (canonical) require_same_ring(R, canonical->ring(), "test-ideal");
  if (c) require_same_ring(R, c->ring(), "test-ideal");
  std::vector<StageTiming> timings;
  Stopwatch clock(timings);

  const std::size_t codim = codimension(I);
  const std::size_t length = free_resolution(I, R.nvars() + 1).size();
  if (length != codim) {
    throw PreconditionError("cohen-macaulay check",
                            "R/I is not Cohen-Macaulay (resolution length " +
                                std::to_string(length) + ", codimension " + std::to_string(codim) + ")");
  }
  clock.lap("cohen-macaulay check");

  Ideal J = canonical ? Ideal::from_basis(canonical->groebner_basis()) : Ideal::unit(R);
  Polynomial u = u_generator(I, J, {options.seed, 500});
  clock.lap("u");

  FrobeniusPair fp(I, u);
  NilpotencyReport nil = nilpotency_analysis(fp, {ChainFormula::smallest_containing_I, false, options.limits});
  if (!nil.torsion_free) {
    throw PreconditionError("nilpotency", "not T-torsion-free (eta = " + std::to_string(nil.eta) + ")");
  }
  clock.lap("nilpotency");

  Polynomial test_element(R);
  if (c) {
    if (c->is_zero() || !ideal_equal(ideal_colon(I, *c), I)) {
      throw PreconditionError("test element", "c is a zero divisor modulo I");
    }
    test_element = *c;
  } else {
    test_element = suggest_test_element(I, {options.seed, options.test_element_draws});
  }
  clock.lap("test element");

  Ideal start = ideal_sum(ideal_scale(J, test_element), I);
  Ideal L = star_closure(start, u, 1, options.limits);
  clock.lap("star closure");

  Ideal tau = Ideal::from_basis(ideal_colon(L, J).groebner_basis());
  clock.lap("colon");

  if (!tau.contains(test_element) || !tau.contains(I)) {
    throw InternalError("test-ideal: tau does not contain c and I");
  }
  if (!is_es_ideal(L, fp)) throw InternalError("test-ideal: u L is not contained in L^[p]");

  const bool f_rational = tau.is_unit();
  return TestIdealReport{u,     J,          test_element, !c.has_value(), L,           tau,
                         f_rational, nil, length,       options.seed,    std::move(timings)};
}

FInjectivityReport f_injectivity_report(const Ideal& I, InjectivityMode mode,
                                        const std::optional<Ideal>& canonical) {
  const Ring& R = I.ring();
  Polynomial u(R);
  if (mode == InjectivityMode::complete_intersection) {
    if (I.is_zero()) throw InputError("f-injectivity: the ideal has no generators");
    u = fedder_f_injective(I.generators()).u;
  } else {
    u = u_generator(I, canonical ? *canonical : Ideal::unit(R));
  }
  NilpotencyReport nil = nilpotency_analysis(FrobeniusPair(I, u));
  return FInjectivityReport{nil.torsion_free, nil.eta, nil.nil_ideal, u};
}

}  // namespace fsing
