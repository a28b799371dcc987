#include "fsing/ring.hpp"

#include "fsing/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace fsing {

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::elimination:
      return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (size() != o.size()) throw InputError("monomial length mismatch");
  Monomial r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(exps_[i]) + o.exps_[i];
    if (s > std::numeric_limits<std::uint32_t>::max()) {
      throw InputError("exponent overflow in monomial product");
    }
    r.exps_[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (size() != o.size()) throw InputError("monomial length mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  if (size() != o.size()) throw InputError("monomial length mismatch");
  Monomial r(size());
  for (std::size_t i = 0; i < size(); ++i) r.exps_[i] = std::max(exps_[i], o.exps_[i]);
  return r;
}

std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a,
                                       const Monomial& b) {
  if (a.size() != b.size()) throw InputError("compare_monomials: length mismatch");
  const std::size_t n = a.size();
  if (order.kind() == OrderKind::elimination && order.block() > n) {
    throw InputError("elimination block larger than variable count");
  }
  std::vector<std::uint32_t> pa(n + 1), pb(n + 1);
  std::uint64_t da = a.degree(), db = b.degree();
  if (da > std::numeric_limits<std::uint32_t>::max() ||
      db > std::numeric_limits<std::uint32_t>::max()) {
    throw InputError("compare_monomials: total degree exceeds 32 bits");
  }
  pa[0] = static_cast<std::uint32_t>(da);
  pb[0] = static_cast<std::uint32_t>(db);
  std::copy(a.exponents().begin(), a.exponents().end(), pa.begin() + 1);
  std::copy(b.exponents().begin(), b.exponents().end(), pb.begin() + 1);
  int c = detail::compare_packed(order, pa.data(), pb.data(), n);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Ring::Ring(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order)
    : data_(std::make_shared<const Data>(Data{PrimeField(p), std::move(variables), order})) {
  std::set<std::string> seen;
  for (const auto& name : data_->names) {
    if (name.empty()) throw InputError("empty variable name");
    if (!seen.insert(name).second) throw InputError("duplicate variable name `" + name + "`");
  }
  if (order.kind() == OrderKind::elimination && order.block() > data_->names.size()) {
    throw InputError("elimination block larger than variable count");
  }
}

std::optional<std::size_t> Ring::variable_index(const std::string& name) const {
  const auto& names = data_->names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

Ring Ring::with_order(const MonomialOrder& order) const {
  if (order == data_->order) return *this;
  return Ring(characteristic(), data_->names, order);
}

bool Ring::same_variables(const Ring& o) const noexcept {
  return data_ == o.data_ ||
         (characteristic() == o.characteristic() && data_->names == o.data_->names);
}

bool Ring::operator==(const Ring& o) const noexcept {
  return data_ == o.data_ || (same_variables(o) && data_->order == o.data_->order);
}

void require_same_ring(const Ring& a, const Ring& b, const char* operation) {
  if (!(a == b)) throw InputError(std::string(operation) + ": ring mismatch");
}

}  // namespace fsing
