#include "fsing/ideal.hpp"

#include "fsing/errors.hpp"

#include <algorithm>
#include <list>
#include <mutex>

namespace fsing {

struct Ideal::Cache {
  std::mutex mutex;
  std::list<GBasis> bases;  // stable addresses; one per order
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring(), "Ideal");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::from_basis(const GBasis& G) {
  Ideal I(G.ring(), G.elements());
  I.cache_->bases.push_back(G);
  return I;
}

bool Ideal::is_unit() const {
  for (const auto& g : gens_) {
    if (g.is_unit()) return true;
  }
  return groebner_basis().is_unit();
}

const GBasis& Ideal::groebner_basis() const { return groebner_basis(ring_.order()); }

const GBasis& Ideal::groebner_basis(const MonomialOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  for (const auto& G : cache_->bases) {
    if (G.order() == order) return G;
  }
  Ring target = ring_.with_order(order);
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.in_ring(target));
  cache_->bases.push_back(buchberger(target, gens));
  return cache_->bases.back();
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "ideal membership");
  if (f.is_zero()) return true;
  return groebner_basis().normal_form(f).is_zero();
}

bool Ideal::contains(const Ideal& B) const {
  require_same_ring(ring_, B.ring(), "ideal containment");
  if (B.is_zero()) return true;
  const GBasis& G = groebner_basis();
  if (G.is_unit()) return true;
  for (const auto& r : G.normal_forms(B.generators())) {
    if (!r.is_zero()) return false;
  }
  return true;
}

GBasis buchberger(const Ideal& I) { return I.groebner_basis(); }

bool ideal_membership(const Polynomial& f, const Ideal& I) { return I.contains(f); }

namespace {

std::vector<Polynomial> dedupe(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

// Ring with one extra variable in front and an order eliminating it.
Ring elimination_ring(const Ring& R) {
  std::string t = "_t";
  while (R.variable_index(t)) t = "_" + t;
  std::vector<std::string> names{t};
  names.insert(names.end(), R.variables().begin(), R.variables().end());
  return Ring(R.characteristic(), std::move(names), MonomialOrder::elimination(1));
}

// Shifts every exponent vector one slot to the right (x_i -> x_{i+1}).
Polynomial lift_to(const Polynomial& f, const Ring& big) {
  const std::size_t n = f.ring().nvars();
  const std::size_t s = n + 2, bs = n + 3;
  detail::TermBuffer out;
  out.coeffs = f.buffer().coeffs;
  out.keys.resize(f.size() * bs);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::uint32_t* k = f.buffer().key(i, s);
    std::uint32_t* o = out.key(i, bs);
    o[0] = k[0];
    o[1] = k[1];
    o[2] = 0;
    std::copy(k + 2, k + s, o + 3);
  }
  // With t absent, elimination(1) compares like grevlex on the old variables.
  if (!(f.ring().order() == MonomialOrder::grevlex())) {
    detail::canonicalize(detail::layout_of(big), out);
  }
  return Polynomial::from_buffer(big, std::move(out));
}

// Inverse of lift_to for polynomials free of the first variable.
Polynomial drop_to(const Polynomial& f, const Ring& small) {
  const std::size_t n = small.nvars();
  const std::size_t s = n + 2, bs = n + 3;
  detail::TermBuffer out;
  out.coeffs = f.buffer().coeffs;
  out.keys.resize(f.size() * s);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::uint32_t* k = f.buffer().key(i, bs);
    if (k[2] != 0) throw InternalError("elimination left the auxiliary variable");
    std::uint32_t* o = out.key(i, s);
    o[0] = k[0];
    o[1] = k[1];
    std::copy(k + 3, k + bs, o + 2);
  }
  detail::canonicalize(detail::layout_of(small), out);
  return Polynomial::from_buffer(small, std::move(out));
}

}  // namespace

Ideal ideal_sum(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring(), "ideal_sum");
  std::vector<Polynomial> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return Ideal(A.ring(), dedupe(std::move(gens)));
}

Ideal ideal_product(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring(), "ideal_product");
  std::vector<Polynomial> gens;
  gens.reserve(A.generators().size() * B.generators().size());
  for (const auto& a : A.generators()) {
    for (const auto& b : B.generators()) gens.push_back(a * b);
  }
  return Ideal(A.ring(), dedupe(std::move(gens)));
}

Ideal ideal_scale(const Ideal& A, const Polynomial& f) {
  require_same_ring(A.ring(), f.ring(), "ideal_scale");
  std::vector<Polynomial> gens;
  gens.reserve(A.generators().size());
  for (const auto& a : A.generators()) gens.push_back(a * f);
  return Ideal(A.ring(), dedupe(std::move(gens)));
}

Ideal ideal_intersection(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring(), "ideal_intersection");
  const Ring& R = A.ring();
  if (A.is_zero() || B.is_zero()) return Ideal::zero(R);
  if (A.is_unit()) return Ideal::from_basis(B.groebner_basis());
  if (B.is_unit()) return Ideal::from_basis(A.groebner_basis());

  Ring big = elimination_ring(R);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& a : A.groebner_basis().elements()) gens.push_back(t * lift_to(a, big));
  for (const auto& b : B.groebner_basis().elements()) gens.push_back(one_minus_t * lift_to(b, big));
  GBasis G = buchberger(big, gens);

  std::vector<Polynomial> result;
  const std::size_t bs = R.nvars() + 3;
  for (const auto& g : G.elements()) {
    if (g.buffer().key(0, bs)[2] == 0) result.push_back(drop_to(g, R));
  }
  Ideal out(R, result);
  if (!A.contains(out) || !B.contains(out)) {
    throw InternalError("ideal_intersection: result not contained in both ideals");
  }
  // Elements free of t in a reduced elimination basis form the reduced
  // grevlex basis of the intersection.
  if (R.order() == MonomialOrder::grevlex()) return Ideal::from_basis(GBasis(R, std::move(result)));
  return out;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "divide_exact");
  if (g.is_zero()) throw InputError("division by the zero polynomial");
  const auto L = detail::layout_of(f.ring());
  std::vector<detail::TermBuffer> divisors{g.buffer()};
  auto div = detail::divide(L, f.buffer(), divisors);
  if (!div.remainder.empty()) throw InternalError("divide_exact: nonzero remainder");
  return Polynomial::from_buffer(f.ring(), std::move(div.quotients[0]));
}

Ideal ideal_colon(const Ideal& A, const Polynomial& f) {
  require_same_ring(A.ring(), f.ring(), "ideal_colon");
  const Ring& R = A.ring();
  if (f.is_zero() || A.contains(f)) return Ideal::unit(R);
  if (f.is_unit()) return A;
  Ideal inter = ideal_intersection(A, Ideal(R, {f}));
  std::vector<Polynomial> quotients;
  quotients.reserve(inter.generators().size());
  for (const auto& q : inter.generators()) quotients.push_back(divide_exact(q, f));
  return Ideal(R, std::move(quotients));
}

Ideal ideal_colon(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring(), "ideal_colon");
  const Ring& R = A.ring();
  if (B.is_zero() || A.contains(B)) return Ideal::unit(R);
  std::optional<Ideal> acc;
  for (const auto& b : B.generators()) {
    Ideal q = ideal_colon(A, b);
    if (q.is_unit()) continue;
    acc = acc ? ideal_intersection(*acc, q) : q;
  }
  return acc ? *acc : Ideal::unit(R);
}

Ideal frobenius_power_ideal(const Ideal& I, unsigned e) {
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(g.frobenius_power(e));
  return Ideal(I.ring(), std::move(gens));
}

bool ideal_equal(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring(), "ideal_equal");
  return A.groebner_basis().elements() == B.groebner_basis().elements();
}

bool ideal_contains(const Ideal& A, const Ideal& B) { return A.contains(B); }

namespace {

// Depth-first search for the largest set of variables such that no leading
// monomial is supported inside it; prunes branches that cannot beat `best`.
void search_independent(const std::vector<std::uint64_t>& supports, std::size_t nvars,
                        std::size_t next, std::uint64_t chosen, std::size_t size,
                        std::size_t& best) {
  if (size + (nvars - next) <= best) return;
  if (next == nvars) {
    best = size;
    return;
  }
  std::uint64_t with = chosen | (std::uint64_t{1} << next);
  bool ok = std::none_of(supports.begin(), supports.end(),
                         [&](std::uint64_t s) { return (s & ~with) == 0; });
  if (ok) search_independent(supports, nvars, next + 1, with, size + 1, best);
  search_independent(supports, nvars, next + 1, chosen, size, best);
}

}  // namespace

std::optional<std::size_t> krull_dimension(const Ideal& I) {
  const Ring& R = I.ring();
  if (R.nvars() > 64) throw InputError("krull_dimension supports at most 64 variables");
  const GBasis& G = I.groebner_basis();
  if (G.is_unit()) return std::nullopt;
  std::vector<std::uint64_t> supports;
  for (const auto& g : G.elements()) {
    auto t = g.term(0);
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] != 0) s |= std::uint64_t{1} << i;
    }
    supports.push_back(s);
  }
  std::size_t best = 0;
  search_independent(supports, R.nvars(), 0, 0, 0, best);
  return best;
}

}  // namespace fsing
