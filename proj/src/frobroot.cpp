#include "fsing/frobroot.hpp"

#include "fsing/errors.hpp"

#include <limits>
#include <map>
#include <string>

namespace fsing {

std::uint64_t nu(unsigned e, std::uint32_t p) {
  if (e == 0) throw InputError("nu: e must be positive");
  constexpr std::uint64_t limit = std::numeric_limits<std::int64_t>::max();
  std::uint64_t sum = 0, power = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (sum > limit - power) throw InputError("nu: value exceeds 63 bits");
    sum += power;
    if (i + 1 < e) {
      if (power > limit / p) throw InputError("nu: value exceeds 63 bits");
      power *= p;
    }
  }
  return sum;
}

namespace {

void append_unique(std::vector<Polynomial>& out, Polynomial f) {
  if (f.is_zero()) return;
  f = f.monic();
  for (const auto& g : out)
    if (g == f) return;
  out.push_back(std::move(f));
}

void append_root_parts(const Polynomial& g, std::uint64_t q, std::vector<Polynomial>& out) {
  const Ring& R = g.ring();
  const std::size_t n = R.nvars();
  std::map<std::vector<std::uint32_t>, std::vector<std::pair<std::int64_t, Monomial>>> buckets;
  std::vector<std::uint32_t> residue(n);
  for (std::size_t i = 0; i < g.size(); ++i) {
    TermView t = g.term(i);
    Monomial quotient(n);
    for (std::size_t v = 0; v < n; ++v) {
      residue[v] = static_cast<std::uint32_t>(t.exponents[v] % q);
      quotient[v] = static_cast<std::uint32_t>(t.exponents[v] / q);
    }
    buckets[residue].emplace_back(t.coefficient, std::move(quotient));
  }
  for (const auto& [r, terms] : buckets) append_unique(out, Polynomial::from_terms(R, terms));
}

Ideal root_of(const Ring& R, const std::vector<Polynomial>& gens, unsigned e) {
  const std::uint64_t q = frobenius_exponent(R.characteristic(), e);
  std::vector<Polynomial> parts;
  for (const auto& g : gens) {
    require_same_ring(R, g.ring(), "frobenius_root");
    append_root_parts(g, q, parts);
  }
  return Ideal(R, std::move(parts));
}

std::vector<Polynomial> scaled_basis(const Ideal& A, const Polynomial& u) {
  std::vector<Polynomial> out;
  for (const auto& g : A.groebner_basis().elements()) out.push_back(u * g);
  return out;
}

Ideal normalized(const Ideal& A) { return Ideal::from_basis(A.groebner_basis()); }

[[noreturn]] void cap_exceeded(const std::string& what, std::size_t cap) {
  throw InternalError(what + ": chain did not stabilize within " + std::to_string(cap) +
                      " iterations");
}

}  // namespace

Ideal frobenius_root(const Polynomial& g, unsigned e) { return root_of(g.ring(), {g}, e); }

Ideal frobenius_root(const Ideal& A, unsigned e) { return root_of(A.ring(), A.generators(), e); }

std::size_t ChainLimits::resolve(const Ring& R, unsigned e) const {
  if (max_iterations) return *max_iterations;
  return 10 * R.nvars() * frobenius_exponent(R.characteristic(), e);
}

Ideal star_closure(const Ideal& A, const Polynomial& u, unsigned e, ChainLimits limits) {
  require_same_ring(A.ring(), u.ring(), "star_closure");
  const std::size_t cap = limits.resolve(A.ring(), e);
  Ideal current = normalized(A);
  for (std::size_t i = 0;; ++i) {
    Ideal step = root_of(A.ring(), scaled_basis(current, u), e);
    if (current.contains(step)) return current;
    if (i == cap) cap_exceeded("star_closure", cap);
    current = normalized(ideal_sum(current, step));
  }
}

FrobeniusPair::FrobeniusPair(Ideal I, Polynomial u, unsigned e)
    : I_(std::move(I)), u_(std::move(u)), e_(e) {
  require_same_ring(I_.ring(), u_.ring(), "frobenius pair");
  if (e_ == 0) throw InputError("frobenius pair: e must be positive");
  Ideal Iq = frobenius_power_ideal(I_, e_);
  for (const auto& g : I_.generators()) {
    if (!Iq.contains(u_ * g)) {
      throw PreconditionError("frobenius pair", "u * I is not contained in I^[q]");
    }
  }
}

NilpotencyReport nilpotency_analysis(const FrobeniusPair& fp, const NilpotencyOptions& options) {
  const Ring& R = fp.ring();
  const Ideal& I = fp.ideal();
  const unsigned e = fp.e();
  const std::size_t cap = options.limits.resolve(R, e);

  // Level k uses q^k. Both formulas are driven by the recursions
  //   root(u^(nu_{k+1}), (k+1)e) = root(u * root(u^(nu_k), ke), e)
  //   root(I, (k+1)e)            = root(root(I, ke), e)
  // which avoid forming u^(nu_k).
  auto run = [&](ChainFormula formula) {
    std::vector<Ideal> chain;
    Ideal K = normalized(frobenius_root(fp.u(), e));
    Ideal rootI = normalized(frobenius_root(I, e));
    for (std::size_t k = 1;; ++k) {
      Ideal J = formula == ChainFormula::smallest_containing_I
                    ? ideal_sum(K, I)
                    : ideal_sum(ideal_sum(K, rootI), I);
      chain.push_back(normalized(J));
      std::size_t m = chain.size();
      if (m >= 2 && ideal_equal(chain[m - 1], chain[m - 2])) return chain;
      if (k > cap) cap_exceeded("nilpotency_analysis", cap);
      K = normalized(root_of(R, scaled_basis(K, fp.u()), e));
      if (formula == ChainFormula::root_of_sum) rootI = normalized(frobenius_root(rootI, e));
    }
  };

  std::vector<Ideal> chain = run(options.formula);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!ideal_contains(chain[i - 1], chain[i])) {
      throw InternalError("nilpotency_analysis: chain is not descending");
    }
  }
  const bool torsion_free = chain.front().is_unit();
  std::size_t eta = 0;
  if (!torsion_free) {
    while (!ideal_equal(chain[eta], chain[eta + 1])) ++eta;
    ++eta;
  }
  NilpotencyReport report{chain, eta, chain.back(), torsion_free, {}, std::nullopt};
  if (options.compare_formulas) {
    report.other_chain = run(options.formula == ChainFormula::smallest_containing_I
                                 ? ChainFormula::root_of_sum
                                 : ChainFormula::smallest_containing_I);
    const auto& a = report.chain;
    const auto& b = report.other_chain;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
      const Ideal& x = a[std::min(i, a.size() - 1)];
      const Ideal& y = b[std::min(i, b.size() - 1)];
      if (!ideal_equal(x, y)) {
        report.formulas_disagree_at = i + 1;
        break;
      }
    }
  }
  return report;
}

ColonChain stable_colon_chain(const FrobeniusPair& fp, ChainLimits limits) {
  const Ring& R = fp.ring();
  const std::size_t cap = limits.resolve(R, fp.e());
  // L_{k+1} = (L_k^[q] : u), since (A^[q] : b^q) = (A : b)^[q] by flatness of Frobenius.
  std::vector<Ideal> chain;
  Ideal L = fp.ideal();
  for (std::size_t k = 1;; ++k) {
    L = normalized(ideal_colon(frobenius_power_ideal(L, fp.e()), fp.u()));
    chain.push_back(L);
    std::size_t m = chain.size();
    if (m >= 2) {
      if (!ideal_contains(chain[m - 1], chain[m - 2])) {
        throw InternalError("stable_colon_chain: chain is not ascending");
      }
      if (ideal_equal(chain[m - 1], chain[m - 2])) break;
    }
    if (k > cap) cap_exceeded("stable_colon_chain", cap);
  }
  ColonChain out{chain, chain.back()};
  if (!ideal_contains(out.stable, fp.ideal())) {
    throw InternalError("stable_colon_chain: limit does not contain I");
  }
  if (!is_es_ideal(out.stable, fp)) {
    throw InternalError("stable_colon_chain: u L is not contained in L^[q]");
  }
  return out;
}

bool is_es_ideal(const Ideal& L, const FrobeniusPair& fp) {
  require_same_ring(L.ring(), fp.ring(), "is_es_ideal");
  if (!L.contains(fp.ideal())) return false;
  Ideal Lq = frobenius_power_ideal(L, fp.e());
  for (const auto& g : L.generators())
    if (!Lq.contains(fp.u() * g)) return false;
  return true;
}

FedderResult fedder_f_injective(const std::vector<Polynomial>& regular_sequence) {
  if (regular_sequence.empty()) throw InputError("fedder: empty sequence");
  const Ring& R = regular_sequence.front().ring();
  Polynomial product = Polynomial::constant(R, 1);
  for (const auto& f : regular_sequence) {
    require_same_ring(R, f.ring(), "fedder");
    product *= f;
  }
  FedderResult out{false, product.pow(R.characteristic() - 1)};
  // m^[p] is a monomial ideal: a term lies outside it iff every exponent is < p.
  const std::uint32_t p = R.characteristic();
  for (std::size_t i = 0; i < out.u.size() && !out.f_injective; ++i) {
    bool outside = true;
    for (auto a : out.u.term(i).exponents) outside = outside && a < p;
    out.f_injective = outside;
  }
  return out;
}

std::vector<EntryChain> twisted_matrix_chain(const PolyMatrix& G, unsigned e_max) {
  if (G.rows() != G.cols()) throw InputError("twisted_matrix_chain: matrix is not square");
  if (e_max == 0) throw InputError("twisted_matrix_chain: e_max must be positive");
  std::vector<EntryChain> out(G.rows() * G.cols());
  PolyMatrix Gk = G;
  for (unsigned k = 1; k <= e_max; ++k) {
    for (std::size_t i = 0; i < G.rows(); ++i)
      for (std::size_t j = 0; j < G.cols(); ++j) {
        EntryChain& c = out[i * G.cols() + j];
        c.chain.push_back(normalized(frobenius_root(Gk(i, j), k)));
        std::size_t m = c.chain.size();
        if (m >= 2 && ideal_equal(c.chain[m - 1], c.chain[m - 2])) c.stabilized = true;
      }
    if (k < e_max) Gk = G * Gk.frobenius_power(1);
  }
  return out;
}

}  // namespace fsing
