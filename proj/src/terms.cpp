#include "fsing/detail/terms.hpp"

#include "fsing/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fsing::detail {

namespace {

constexpr std::uint64_t kMaxExp = std::numeric_limits<std::uint32_t>::max();

inline void check_exp(std::uint64_t v) {
  if (v > kMaxExp) throw InputError("exponent overflow (exceeds 32 bits)");
}

}  // namespace

void key_quotient(const std::uint32_t* b, const std::uint32_t* a, std::size_t nvars,
                  std::uint32_t* out) noexcept {
  out[0] = 0;
  for (std::size_t i = 1; i < nvars + 2; ++i) out[i] = b[i] - a[i];
}

void key_lcm(const std::uint32_t* a, const std::uint32_t* b, std::size_t nvars,
             std::uint32_t* out) {
  out[0] = a[0];
  std::uint64_t deg = 0;
  for (std::size_t i = 2; i < nvars + 2; ++i) {
    out[i] = std::max(a[i], b[i]);
    deg += out[i];
  }
  check_exp(deg);
  out[1] = static_cast<std::uint32_t>(deg);
}

bool keys_coprime(const std::uint32_t* a, const std::uint32_t* b, std::size_t nvars) noexcept {
  for (std::size_t i = 2; i < nvars + 2; ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

void canonicalize(const Layout& L, TermBuffer& t) {
  const std::size_t s = L.stride();
  const std::size_t n = t.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return L.compare(t.key(i, s), t.key(j, s)) > 0;
  });
  TermBuffer out;
  out.coeffs.reserve(n);
  out.keys.reserve(n * s);
  for (std::size_t k = 0; k < n;) {
    std::size_t i = idx[k];
    std::uint32_t c = t.coeffs[i] % L.field.characteristic();
    std::size_t k2 = k + 1;
    while (k2 < n && L.compare(t.key(idx[k2], s), t.key(i, s)) == 0) {
      c = L.field.add(c, t.coeffs[idx[k2]] % L.field.characteristic());
      ++k2;
    }
    if (c != 0) out.push(c, t.key(i, s), s);
    k = k2;
  }
  t = std::move(out);
}

namespace {

template <class CoeffB>
TermBuffer merge(const Layout& L, const TermBuffer& a, const TermBuffer& b, CoeffB map_b) {
  const std::size_t s = L.stride();
  TermBuffer out;
  out.coeffs.reserve(a.size() + b.size());
  out.keys.reserve((a.size() + b.size()) * s);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = L.compare(a.key(i, s), b.key(j, s));
    if (c > 0) {
      out.push(a.coeffs[i], a.key(i, s), s);
      ++i;
    } else if (c < 0) {
      out.push(map_b(b.coeffs[j]), b.key(j, s), s);
      ++j;
    } else {
      std::uint32_t v = L.field.add(a.coeffs[i], map_b(b.coeffs[j]));
      if (v != 0) out.push(v, a.key(i, s), s);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push(a.coeffs[i], a.key(i, s), s);
  for (; j < b.size(); ++j) out.push(map_b(b.coeffs[j]), b.key(j, s), s);
  return out;
}

}  // namespace

TermBuffer add(const Layout& L, const TermBuffer& a, const TermBuffer& b) {
  return merge(L, a, b, [](std::uint32_t c) { return c; });
}

TermBuffer sub(const Layout& L, const TermBuffer& a, const TermBuffer& b) {
  return merge(L, a, b, [&](std::uint32_t c) { return L.field.neg(c); });
}

TermBuffer scale(const Layout& L, const TermBuffer& a, std::uint32_t c) {
  c = L.field.reduce(c);
  if (c == 0) return {};
  TermBuffer out = a;
  for (auto& v : out.coeffs) v = L.field.mul(v, c);
  return out;
}

void make_monic(const Layout& L, TermBuffer& a) {
  if (a.empty() || a.coeffs[0] == 1) return;
  std::uint32_t inv = L.field.inv(a.coeffs[0]);
  for (auto& v : a.coeffs) v = L.field.mul(v, inv);
}

void mul_term(const Layout& L, const TermBuffer& g, std::uint32_t c, const std::uint32_t* m,
              TermBuffer& out) {
  const std::size_t s = L.stride();
  out.coeffs.resize(g.size());
  out.keys.resize(g.keys.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.coeffs[i] = L.field.mul(g.coeffs[i], c);
    const std::uint32_t* gk = g.key(i, s);
    std::uint32_t* ok = out.key(i, s);
    ok[0] = gk[0];
    for (std::size_t v = 1; v < s; ++v) {
      std::uint64_t e = static_cast<std::uint64_t>(gk[v]) + m[v];
      check_exp(e);
      ok[v] = static_cast<std::uint32_t>(e);
    }
  }
}

void sub_mul_tail(const Layout& L, TermBuffer& f, std::size_t from, std::uint32_t c,
                  const std::uint32_t* m, const TermBuffer& g, TermBuffer& scratch) {
  const std::size_t s = L.stride();
  const std::uint32_t negc = L.field.neg(c);
  scratch.coeffs.clear();
  scratch.keys.clear();
  scratch.coeffs.reserve(f.size() + g.size());
  scratch.keys.reserve((f.size() + g.size()) * s);
  scratch.coeffs.insert(scratch.coeffs.end(), f.coeffs.begin(), f.coeffs.begin() + from);
  scratch.keys.insert(scratch.keys.end(), f.keys.begin(), f.keys.begin() + from * s);

  std::uint32_t prod[256];
  std::vector<std::uint32_t> heap_prod;
  std::uint32_t* pk = prod;
  if (s > 256) {
    heap_prod.resize(s);
    pk = heap_prod.data();
  }
  auto product_key = [&](std::size_t j) {
    const std::uint32_t* gk = g.key(j, s);
    pk[0] = gk[0];
    for (std::size_t v = 1; v < s; ++v) {
      std::uint64_t e = static_cast<std::uint64_t>(gk[v]) + m[v];
      check_exp(e);
      pk[v] = static_cast<std::uint32_t>(e);
    }
  };

  std::size_t i = from, j = 0;
  if (j < g.size()) product_key(j);
  while (i < f.size() && j < g.size()) {
    int cmp = L.compare(f.key(i, s), pk);
    if (cmp > 0) {
      scratch.push(f.coeffs[i], f.key(i, s), s);
      ++i;
    } else if (cmp < 0) {
      scratch.push(L.field.mul(g.coeffs[j], negc), pk, s);
      if (++j < g.size()) product_key(j);
    } else {
      std::uint32_t v = L.field.add(f.coeffs[i], L.field.mul(g.coeffs[j], negc));
      if (v != 0) scratch.push(v, pk, s);
      ++i;
      if (++j < g.size()) product_key(j);
    }
  }
  for (; i < f.size(); ++i) scratch.push(f.coeffs[i], f.key(i, s), s);
  while (j < g.size()) {
    scratch.push(L.field.mul(g.coeffs[j], negc), pk, s);
    if (++j < g.size()) product_key(j);
  }
  std::swap(f, scratch);
}

TermBuffer multiply(const Layout& L, const TermBuffer& a, const TermBuffer& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t s = L.stride();
  if (a.size() == 1) {
    TermBuffer out;
    mul_term(L, b, a.coeffs[0], a.key(0, s), out);
    return out;
  }
  // Accumulate row products by pairwise merging; balanced to keep merges short.
  std::vector<TermBuffer> rows;
  rows.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    TermBuffer r;
    mul_term(L, b, a.coeffs[i], a.key(i, s), r);
    rows.push_back(std::move(r));
  }
  while (rows.size() > 1) {
    std::vector<TermBuffer> next;
    next.reserve((rows.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) next.push_back(add(L, rows[i], rows[i + 1]));
    if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  return std::move(rows.front());
}

}  // namespace fsing::detail
