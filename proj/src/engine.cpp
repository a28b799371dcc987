#include "fsing/detail/engine.hpp"

#include "fsing/errors.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsing {

namespace {
std::atomic<GbStrategy> g_default_strategy{GbStrategy::parallel};
}

void set_default_gb_strategy(GbStrategy s) noexcept { g_default_strategy.store(s); }
GbStrategy default_gb_strategy() noexcept { return g_default_strategy.load(); }

namespace detail {

DivisorSet::DivisorSet(const Layout& L, std::span<const TermBuffer> polys)
    : nvars_(L.nvars), stride_(L.stride()) {
  polys_.reserve(polys.size());
  masks_.reserve(polys.size());
  for (const auto& p : polys) {
    if (p.empty()) continue;
    polys_.push_back(&p);
    masks_.push_back(divmask(p.key(0, stride_), nvars_));
  }
}

DivisorSet::DivisorSet(const Layout& L, std::vector<const TermBuffer*> polys)
    : nvars_(L.nvars), stride_(L.stride()) {
  for (const TermBuffer* p : polys) {
    if (p->empty()) continue;
    polys_.push_back(p);
    masks_.push_back(divmask(p->key(0, stride_), nvars_));
  }
}

std::size_t DivisorSet::find_divisor(const std::uint32_t* key, std::size_t skip) const noexcept {
  const std::uint64_t m = divmask(key, nvars_);
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (i == skip || (masks_[i] & ~m) != 0) continue;
    if (key_divides(polys_[i]->key(0, stride_), key, nvars_)) return i;
  }
  return polys_.size();
}

TermBuffer normal_form(const Layout& L, TermBuffer f, const DivisorSet& G, std::size_t skip) {
  const std::size_t s = L.stride();
  TermBuffer scratch;
  std::vector<std::uint32_t> m(s);
  std::size_t done = 0;  // f[0, done) is irreducible
  while (done < f.size()) {
    const std::uint32_t* k = f.key(done, s);
    std::size_t d = G.find_divisor(k, skip);
    if (d == G.size()) {
      ++done;
      continue;
    }
    const TermBuffer& g = G[d];
    key_quotient(k, g.key(0, s), L.nvars, m.data());
    std::uint32_t c = f.coeffs[done];
    if (g.coeffs[0] != 1) c = L.field.mul(c, L.field.inv(g.coeffs[0]));
    sub_mul_tail(L, f, done, c, m.data(), g, scratch);
  }
  return f;
}

std::vector<TermBuffer> normal_forms(const Layout& L, std::span<const TermBuffer> fs,
                                     const DivisorSet& G, GbStrategy strategy) {
  std::vector<TermBuffer> out(fs.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(fs.size());
  if (strategy == GbStrategy::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = normal_form(L, fs[i], G);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = normal_form(L, fs[i], G);
  }
  return out;
}

namespace {

struct Pair {
  std::size_t i, j;
  Key lcm;
  std::uint64_t sugar;
};

class Buchberger {
 public:
  Buchberger(const Layout& L, GbStrategy strategy)
      : L_(L), s_(L.stride()), strategy_(strategy) {}

  std::vector<TermBuffer> run(std::vector<TermBuffer> input) {
    for (const auto& f : input) {
      for (std::size_t t = 0; t < f.size() && !module_; ++t) {
        if (f.key(t, s_)[0] != 0) module_ = true;
      }
    }
    for (auto& f : input) {
      if (f.empty()) continue;
      std::uint64_t sugar = max_degree(f);
      TermBuffer r = reduce_against_active(std::move(f));
      if (!r.empty()) insert(std::move(r), sugar);
    }
    while (!pairs_.empty()) {
      if (strategy_ == GbStrategy::serial) {
        step_serial();
      } else {
        step_parallel();
      }
    }
    return finish();
  }

 private:
  std::uint64_t max_degree(const TermBuffer& f) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < f.size(); ++i) d = std::max<std::uint64_t>(d, f.key(i, s_)[1]);
    return d;
  }

  const std::uint32_t* lead(std::size_t i) const { return basis_[i].key(0, s_); }

  DivisorSet active_set() const {
    std::vector<const TermBuffer*> view;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (active_[i]) view.push_back(&basis_[i]);
    }
    return DivisorSet(L_, std::move(view));
  }

  TermBuffer reduce_against_active(TermBuffer f) {
    DivisorSet G = active_set();
    TermBuffer r = normal_form(L_, std::move(f), G);
    make_monic(L_, r);
    return r;
  }

  TermBuffer spoly(const Pair& p) const {
    std::vector<std::uint32_t> mi(s_), mj(s_);
    key_quotient(p.lcm.data(), lead(p.i), L_.nvars, mi.data());
    key_quotient(p.lcm.data(), lead(p.j), L_.nvars, mj.data());
    TermBuffer t, scratch;
    mul_term(L_, basis_[p.i], 1, mi.data(), t);
    sub_mul_tail(L_, t, 0, 1, mj.data(), basis_[p.j], scratch);
    return t;
  }

  std::size_t select_min() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar ? a.sugar < b.sugar
                             : L_.compare(a.lcm.data(), b.lcm.data()) < 0) {
        best = k;
      }
    }
    return best;
  }

  void step_serial() {
    std::size_t k = select_min();
    Pair p = std::move(pairs_[k]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
    TermBuffer r = reduce_against_active(spoly(p));
    if (!r.empty()) insert(std::move(r), std::max(p.sugar, max_degree(r)));
  }

  void step_parallel() {
    std::uint64_t min_sugar = pairs_[0].sugar;
    for (const auto& p : pairs_) min_sugar = std::min(min_sugar, p.sugar);
    std::vector<Pair> batch;
    std::vector<Pair> rest;
    for (auto& p : pairs_) (p.sugar == min_sugar ? batch : rest).push_back(std::move(p));
    pairs_ = std::move(rest);
    std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
      int c = L_.compare(a.lcm.data(), b.lcm.data());
      if (c != 0) return c < 0;
      return a.i != b.i ? a.i < b.i : a.j < b.j;
    });

    DivisorSet G = active_set();
    std::vector<TermBuffer> reduced(batch.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(batch.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t b = 0; b < n; ++b) {
      reduced[b] = normal_form(L_, spoly(batch[b]), G);
    }
    // Serial insertion in batch order; earlier insertions may reduce later results.
    for (std::size_t b = 0; b < batch.size(); ++b) {
      if (reduced[b].empty()) continue;
      TermBuffer r = reduce_against_active(std::move(reduced[b]));
      if (!r.empty()) insert(std::move(r), std::max(batch[b].sugar, max_degree(r)));
    }
  }

  // Gebauer-Moeller installation of a new basis element.
  void insert(TermBuffer h, std::uint64_t sugar) {
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    const std::uint32_t* lh = lead(hi);
    const std::size_t n = L_.nvars;

    struct Cand {
      std::size_t g;
      Key lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g] || lead(g)[0] != lh[0]) continue;
      Key l(s_);
      key_lcm(lh, lead(g), n, l.data());
      bool coprime = !module_ && keys_coprime(lh, lead(g), n);
      C.push_back({g, std::move(l), coprime});
    }

    // Chain criterion among the new pairs.
    std::vector<Cand> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      bool keep = C[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b) {
          if (key_divides(C[b].lcm.data(), C[a].lcm.data(), n)) keep = false;
        }
        for (std::size_t b = 0; b < D.size() && keep; ++b) {
          if (key_divides(D[b].lcm.data(), C[a].lcm.data(), n)) keep = false;
        }
      }
      if (keep) D.push_back(std::move(C[a]));
    }

    // Old pairs made redundant by h.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    Key tmp(s_);
    for (auto& p : pairs_) {
      bool drop = false;
      if (key_divides(lh, p.lcm.data(), n)) {
        key_lcm(lead(p.i), lh, n, tmp.data());
        bool eq_i = std::equal(tmp.begin(), tmp.end(), p.lcm.begin());
        key_lcm(lh, lead(p.j), n, tmp.data());
        bool eq_j = std::equal(tmp.begin(), tmp.end(), p.lcm.begin());
        drop = !eq_i && !eq_j;
      }
      if (!drop) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);

    for (auto& c : D) {
      if (c.coprime) continue;
      std::uint64_t dl = c.lcm[1];
      std::uint64_t sug = std::max(sugar_[c.g] + dl - lead(c.g)[1], sugar + dl - lh[1]);
      pairs_.push_back(Pair{c.g, hi, std::move(c.lcm), sug});
    }

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && key_divides(lh, lead(g), n)) active_[g] = false;
    }
  }

  std::vector<TermBuffer> finish() {
    std::vector<TermBuffer> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (active_[i]) minimal.push_back(std::move(basis_[i]));
    }
    DivisorSet G(L_, minimal);
    std::vector<TermBuffer> out(minimal.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(minimal.size());
    if (strategy_ == GbStrategy::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = tail_reduce(minimal, G, i);
    } else {
      for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = tail_reduce(minimal, G, i);
    }
    std::sort(out.begin(), out.end(), [&](const TermBuffer& a, const TermBuffer& b) {
      return L_.compare(a.key(0, s_), b.key(0, s_)) > 0;
    });
    return out;
  }

  TermBuffer tail_reduce(const std::vector<TermBuffer>& minimal, const DivisorSet& G,
                         std::ptrdiff_t i) const {
    // The leading term is not divisible by any other leading term, and no
    // smaller monomial is divisible by its own, so skipping i is exact.
    TermBuffer r = normal_form(L_, minimal[i], G, static_cast<std::size_t>(i));
    make_monic(L_, r);
    return r;
  }

  const Layout& L_;
  std::size_t s_;
  GbStrategy strategy_;
  bool module_ = false;
  std::deque<TermBuffer> basis_;  // stable addresses for DivisorSet views
  std::vector<std::uint64_t> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<TermBuffer> reduced_groebner_basis(const Layout& L, std::vector<TermBuffer> input,
                                               GbStrategy strategy) {
  Buchberger engine(L, strategy);
  return engine.run(std::move(input));
}

Division divide(const Layout& L, const TermBuffer& f, std::span<const TermBuffer> G) {
  const std::size_t s = L.stride();
  Division out;
  out.quotients.resize(G.size());
  TermBuffer work = f, scratch;
  std::vector<std::uint32_t> m(s);
  std::vector<std::uint64_t> masks(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) {
    masks[i] = G[i].empty() ? 0 : divmask(G[i].key(0, s), L.nvars);
  }
  std::size_t done = 0;
  while (done < work.size()) {
    const std::uint32_t* k = work.key(done, s);
    const std::uint64_t km = divmask(k, L.nvars);
    std::size_t d = G.size();
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (G[i].empty() || (masks[i] & ~km) != 0) continue;
      if (key_divides(G[i].key(0, s), k, L.nvars)) {
        d = i;
        break;
      }
    }
    if (d == G.size()) {
      ++done;
      continue;
    }
    key_quotient(k, G[d].key(0, s), L.nvars, m.data());
    std::uint32_t c = L.field.mul(work.coeffs[done], L.field.inv(G[d].coeffs[0]));
    out.quotients[d].push(c, m.data(), s);
    sub_mul_tail(L, work, done, c, m.data(), G[d], scratch);
  }
  out.remainder = std::move(work);
  return out;
}

}  // namespace detail
}  // namespace fsing
