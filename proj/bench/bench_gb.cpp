// Serial reference kernel vs the OpenMP kernel on the same inputs.

#include "fsing/frobroot.hpp"
#include "fsing/parser.hpp"
#include "fsing/testideal.hpp"

#include <benchmark/benchmark.h>

using namespace fsing;

namespace {

Ring minors_ring() { return Ring(2, {"x1", "x2", "x3", "x4", "x5"}); }

std::vector<Polynomial> parse_all(const Ring& R, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, R));
  return out;
}

Ideal minors_ideal(const Ring& R) {
  return Ideal(R, parse_all(R, {"x1*x4 + x2*x4", "x1*x3 + x2*x4", "x1^2 + x4*x5", "x2*x3 + x2*x4",
                                "x1*x2 + x4*x5", "x1*x2 + x3*x5"}));
}

// Katsura-n: u_m = sum_l x_|l| x_|m-l| - x_m and sum_l x_|l| = 1 (l in -n..n).
std::vector<Polynomial> katsura(const Ring& R, int n) {
  auto x = [&](int i) {
    i = i < 0 ? -i : i;
    return i > n ? Polynomial(R) : Polynomial::variable(R, static_cast<std::size_t>(i));
  };
  std::vector<Polynomial> out;
  for (int m = 0; m < n; ++m) {
    Polynomial f = Polynomial(R) - x(m);
    for (int l = -n; l <= n; ++l) f += x(l) * x(m - l);
    out.push_back(f);
  }
  Polynomial last = Polynomial::constant(R, R.characteristic() - 1);
  for (int l = -n; l <= n; ++l) last += x(l);
  out.push_back(last);
  return out;
}

// Cyclic-n: elementary cyclic sums of lengths 1..n-1 and x_0...x_{n-1} - 1.
std::vector<Polynomial> cyclic(const Ring& R, int n) {
  std::vector<Polynomial> out;
  for (int len = 1; len < n; ++len) {
    Polynomial f(R);
    for (int start = 0; start < n; ++start) {
      Polynomial t = Polynomial::constant(R, 1);
      for (int k = 0; k < len; ++k) t = t * Polynomial::variable(R, static_cast<std::size_t>((start + k) % n));
      f += t;
    }
    out.push_back(f);
  }
  Polynomial prod = Polynomial::constant(R, 1);
  for (int k = 0; k < n; ++k) prod = prod * Polynomial::variable(R, static_cast<std::size_t>(k));
  out.push_back(prod - Polynomial::constant(R, 1));
  return out;
}

std::vector<std::string> names(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

GbStrategy strategy(const benchmark::State& state) {
  return state.range(0) == 0 ? GbStrategy::serial : GbStrategy::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_FrobeniusPowerGB(benchmark::State& state) {
  Ring R = minors_ring();
  auto gens = frobenius_power_ideal(minors_ideal(R), 1).generators();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(R, gens, strategy(state)));
  label(state);
}

void BM_Katsura(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  Ring R(32003, names(n + 1));
  auto gens = katsura(R, n);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(R, gens, strategy(state)));
  label(state);
}

void BM_Cyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  Ring R(32003, names(n));
  auto gens = cyclic(R, n);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(R, gens, strategy(state)));
  label(state);
}

// The whole pipeline goes through the process-wide default kernel.
void BM_Pipeline(benchmark::State& state) {
  set_default_gb_strategy(strategy(state));
  Ring R = minors_ring();
  Ideal I = minors_ideal(R);
  Ideal J = ideal_sum(Ideal(R, parse_all(R, {"x1", "x4", "x5"})), I);
  for (auto _ : state) benchmark::DoNotOptimize(parameter_test_ideal(I, J));
  set_default_gb_strategy(GbStrategy::parallel);
  label(state);
}

}  // namespace

BENCHMARK(BM_FrobeniusPowerGB)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Katsura)->Args({0, 5})->Args({1, 5})->Args({0, 6})->Args({1, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cyclic)->Args({0, 5})->Args({1, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pipeline)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
