#include "fsing/canonical.hpp"

#include "fsing/detail/engine.hpp"
#include "fsing/parser.hpp"

#include <random>
#include <set>
#include <string>

namespace fsing {

namespace {

using detail::Layout;
using detail::TermBuffer;

// Vector with entries[i] in component offset + i.
TermBuffer pack(const Layout& L, const std::vector<Polynomial>& entries, std::uint32_t offset) {
  const std::size_t s = L.stride();
  TermBuffer out;
  std::vector<std::uint32_t> key(s);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const TermBuffer& b = entries[i].buffer();
    for (std::size_t t = 0; t < b.size(); ++t) {
      std::copy(b.key(t, s), b.key(t, s) + s, key.begin());
      key[0] = offset + static_cast<std::uint32_t>(i);
      out.push(b.coeffs[t], key.data(), s);
    }
  }
  return out;
}

// Components [first, first + count) of v as polynomials.
std::vector<Polynomial> unpack(const Ring& R, const TermBuffer& v, std::size_t first,
                               std::size_t count) {
  const std::size_t s = R.nvars() + 2;
  std::vector<TermBuffer> parts(count);
  for (std::size_t t = 0; t < v.size(); ++t) {
    const std::uint32_t* k = v.key(t, s);
    if (k[0] < first || k[0] >= first + count) continue;
    TermBuffer& part = parts[k[0] - first];
    part.push(v.coeffs[t], k, s);
    part.keys[part.keys.size() - s] = 0;
  }
  std::vector<Polynomial> out;
  out.reserve(count);
  for (auto& p : parts) out.push_back(Polynomial::from_buffer(R, std::move(p)));
  return out;
}

// Column operations that split off a constant entry (r, c) of `next`:
// every other column j becomes col_j - (next(r,j)/a) col_c, then row r and
// column c of `next` and column r of `prev` are removed.
bool prune_once(PolyMatrix& next, PolyMatrix* prev) {
  const PrimeField& F = next.ring().field();
  for (std::size_t r = 0; r < next.rows(); ++r)
    for (std::size_t c = 0; c < next.cols(); ++c) {
      if (!next(r, c).is_unit()) continue;
      std::uint32_t inv = F.inv(next(r, c).leading_coefficient());
      for (std::size_t j = 0; j < next.cols(); ++j) {
        if (j == c || next(r, j).is_zero()) continue;
        Polynomial factor = next(r, j).scaled(inv);
        for (std::size_t i = 0; i < next.rows(); ++i)
          if (!next(i, c).is_zero()) next(i, j) -= factor * next(i, c);
      }
      next = next.without_row(r).without_column(c);
      if (prev) *prev = prev->without_column(r);
      return true;
    }
  return false;
}

PolyMatrix drop_zero_columns(const PolyMatrix& M) {
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t c = 0; c < M.cols(); ++c) {
    auto col = M.column(c);
    bool zero = true;
    for (const auto& f : col) zero = zero && f.is_zero();
    if (!zero) cols.push_back(std::move(col));
  }
  return PolyMatrix::from_columns(M.ring(), M.rows(), cols);
}

void check_complex(const PolyMatrix& a, const PolyMatrix& b, const char* where) {
  if (a.cols() != b.rows() || !(a * b).is_zero()) {
    throw InternalError(std::string(where) + ": consecutive differentials do not compose to zero");
  }
}

Polynomial determinant(const std::vector<std::vector<const Polynomial*>>& m) {
  const std::size_t n = m.size();
  const Ring& R = m[0][0]->ring();
  if (n == 1) return *m[0][0];
  Polynomial det(R);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c]->is_zero()) continue;
    std::vector<std::vector<const Polynomial*>> sub(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) sub[r - 1].push_back(m[r][j]);
    Polynomial term = *m[0][c] * determinant(sub);
    if (c % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PolyMatrix syzygy_matrix(const PolyMatrix& M) {
  const Ring& R = M.ring();
  const std::size_t r = M.rows(), m = M.cols();
  if (m == 0) return PolyMatrix(R, 0, 0);
  Layout L = detail::layout_of(R);
  const std::size_t s = L.stride();

  std::vector<TermBuffer> graph;
  graph.reserve(m);
  std::vector<std::uint32_t> tag(s, 0);
  for (std::size_t j = 0; j < m; ++j) {
    TermBuffer v = pack(L, M.column(j), 0);
    tag[0] = static_cast<std::uint32_t>(r + j);
    v.push(1, tag.data(), s);
    graph.push_back(std::move(v));
  }
  auto G = detail::reduced_groebner_basis(L, std::move(graph), default_gb_strategy());

  // Position-over-term: a leading component >= r means the first r
  // components vanish, so the tail is a syzygy; these generate them all.
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& g : G) {
    if (g.key(0, s)[0] < r) continue;
    cols.push_back(unpack(R, g, r, m));
  }
  PolyMatrix S = PolyMatrix::from_columns(R, m, cols);
  if (!(M * S).is_zero()) throw InternalError("syzygy_matrix: column is not a syzygy");
  return S;
}

ResolutionTooLong::ResolutionTooLong(std::size_t max_length, std::vector<ResolutionStep> partial)
    : PreconditionError("free_resolution",
                        "resolution is longer than " + std::to_string(max_length)),
      partial_(std::move(partial)) {}

std::vector<ResolutionStep> free_resolution(const Ideal& I, std::size_t max_length) {
  const Ring& R = I.ring();
  if (I.is_unit()) throw InputError("free_resolution: the ideal must be proper");
  std::vector<ResolutionStep> steps;
  if (I.is_zero()) return steps;
  steps.push_back({PolyMatrix::from_rows(R, {I.generators()})});
  for (;;) {
    PolyMatrix next = syzygy_matrix(steps.back().differential);
    while (prune_once(next, &steps.back().differential)) {
    }
    next = drop_zero_columns(next);
    if (next.cols() == 0) break;
    if (steps.size() == max_length) throw ResolutionTooLong(max_length, std::move(steps));
    steps.push_back({std::move(next)});
  }
  for (std::size_t i = 1; i < steps.size(); ++i)
    check_complex(steps[i - 1].differential, steps[i].differential, "free_resolution");
  return steps;
}

std::size_t codimension(const Ideal& I) {
  auto dim = krull_dimension(I);
  if (!dim) throw InputError("codimension: the ideal must be proper");
  return I.ring().nvars() - *dim;
}

PolyMatrix prune_presentation(PolyMatrix P) {
  while (prune_once(P, nullptr)) {
  }
  return drop_zero_columns(P);
}

PolyMatrix ext_presentation(const Ideal& I, std::size_t delta) {
  const std::size_t codim = codimension(I);
  if (delta != codim) {
    throw PreconditionError("ext", "delta = " + std::to_string(delta) +
                                       " but the codimension is " + std::to_string(codim));
  }
  if (delta == 0) throw InputError("ext: delta must be positive");
  auto res = free_resolution(I, I.ring().nvars() + 1);
  if (res.size() < delta) throw InternalError("ext: resolution shorter than the codimension");
  PolyMatrix dT = res[delta - 1].differential.transpose();  // F_{delta-1}^* -> F_delta^*
  if (res.size() == delta) return prune_presentation(dT);

  // Ext = ker(d_{delta+1}^T) / im(d_delta^T): present the kernel by its
  // generators K and find the relations a with K a ∈ im(d_delta^T).
  PolyMatrix K = syzygy_matrix(res[delta].differential.transpose());
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t c = 0; c < K.cols(); ++c) cols.push_back(K.column(c));
  for (std::size_t c = 0; c < dT.cols(); ++c) cols.push_back(dT.column(c));
  PolyMatrix stacked = PolyMatrix::from_columns(I.ring(), K.rows(), cols);
  PolyMatrix rel = syzygy_matrix(stacked);
  PolyMatrix P(I.ring(), K.cols(), rel.cols());
  for (std::size_t i = 0; i < K.cols(); ++i)
    for (std::size_t j = 0; j < rel.cols(); ++j) P(i, j) = rel(i, j);
  return prune_presentation(std::move(P));
}

Polynomial u_generator(const Ideal& I, const Ideal& J, const UGeneratorOptions& options) {
  require_same_ring(I.ring(), J.ring(), "u_generator");
  const Ring& R = I.ring();
  if (!J.contains(I)) throw PreconditionError("u_generator", "I is not contained in J");
  Ideal Ip = frobenius_power_ideal(I, 1);
  Ideal Jp = frobenius_power_ideal(J, 1);
  Ideal In = Ideal::from_basis(I.groebner_basis());
  Ideal Jn = Ideal::from_basis(J.groebner_basis());
  Ideal M = ideal_intersection(ideal_colon(Ip, In), ideal_colon(Jp, Jn));
  const auto& Mgens = M.groebner_basis().elements();
  const GBasis& G = Ip.groebner_basis();

  auto generates = [&](const Polynomial& u) {
    if (u.is_zero()) return false;
    Ideal candidate = ideal_sum(Ideal(R, {u}), Ip);
    return candidate.contains(M);
  };

  std::optional<Polynomial> found;
  for (const auto& g : Mgens) {
    if (G.normal_form(g).is_zero()) continue;
    if (generates(g)) {
      found = g;
      break;
    }
  }
  if (!found) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint32_t> coeff(0, R.characteristic() - 1);
    for (std::size_t attempt = 0; attempt < options.random_attempts && !found; ++attempt) {
      Polynomial u(R);
      for (const auto& g : Mgens) u += g.scaled(coeff(rng));
      if (generates(u)) found = u;
    }
  }
  if (!found) {
    throw PreconditionError("u_generator",
                            "((I^[p] : I) ∩ (J^[p] : J)) / I^[p] has no single generator; "
                            "check J and that R/I is Cohen-Macaulay");
  }
  Polynomial u = G.normal_form(*found).monic();
  if (!Ip.contains(ideal_scale(I, u)) || !Jp.contains(ideal_scale(J, u))) {
    throw InternalError("u_generator: u does not map I into I^[p] and J into J^[p]");
  }
  return u;
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
  const Ring& R = f.ring();
  if (var >= R.nvars()) throw InputError("derivative: variable index out of range");
  std::vector<std::pair<std::int64_t, Monomial>> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto t = f.term(i);
    if (t.exponents[var] == 0) continue;
    Monomial m = f.monomial_at(i);
    std::uint64_t c = R.field().mul(t.coefficient, R.field().reduce(m[var]));
    m[var] -= 1;
    terms.emplace_back(static_cast<std::int64_t>(c), std::move(m));
  }
  return Polynomial::from_terms(R, terms);
}

Ideal jacobian_ideal(const Ideal& I, std::size_t k) {
  const Ring& R = I.ring();
  const auto& gens = I.generators();
  std::vector<std::vector<Polynomial>> jac(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t v = 0; v < R.nvars(); ++v) jac[i].push_back(derivative(gens[i], v));
  std::vector<Polynomial> minors = gens;
  if (k == 0) return Ideal::unit(R);
  for (const auto& rows : subsets(gens.size(), k))
    for (const auto& cols : subsets(R.nvars(), k)) {
      std::vector<std::vector<const Polynomial*>> m(k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) m[a].push_back(&jac[rows[a]][cols[b]]);
      Polynomial d = determinant(m);
      if (!d.is_zero()) minors.push_back(d.monic());
    }
  return Ideal(R, std::move(minors));
}

Polynomial suggest_test_element(const Ideal& I, const TestElementOptions& options) {
  const Ring& R = I.ring();
  const std::size_t k = codimension(I);
  Ideal jac = jacobian_ideal(Ideal::from_basis(I.groebner_basis()), k);
  const auto& gens = jac.groebner_basis().elements();
  Ideal In = Ideal::from_basis(I.groebner_basis());

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, R.characteristic() - 1);
  std::set<std::string> tried;
  for (std::size_t draw = 0; draw < options.max_draws; ++draw) {
    Polynomial c(R);
    for (const auto& g : gens) c += g.scaled(coeff(rng));
    if (c.is_zero()) continue;
    c = c.monic();
    if (In.contains(c) || !tried.insert(to_string(c)).second) continue;
    if (ideal_equal(ideal_colon(In, c), In)) return c;
  }
  throw PreconditionError("suggest_test_element",
                          "no nonzerodivisor found in " + std::to_string(options.max_draws) +
                              " draws; R/I may not be reduced, supply c explicitly");
}

}  // namespace fsing
