#include "fsing/groebner.hpp"

#include "fsing/errors.hpp"

namespace fsing {

namespace {

std::vector<const detail::TermBuffer*> buffers_of(const std::vector<Polynomial>& polys) {
  std::vector<const detail::TermBuffer*> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(&p.buffer());
  return out;
}

}  // namespace

GBasis::Impl::Impl(Ring r, std::vector<Polynomial> e)
    : ring(std::move(r)),
      elements(std::move(e)),
      divisors(detail::layout_of(ring), buffers_of(elements)) {}

GBasis::GBasis(Ring ring, std::vector<Polynomial> elements) {
  for (const auto& g : elements) {
    require_same_ring(ring, g.ring(), "GBasis");
    if (g.is_zero()) throw InternalError("GBasis: zero element");
  }
  impl_ = std::make_shared<const Impl>(std::move(ring), std::move(elements));
}

bool GBasis::is_unit() const noexcept {
  return impl_->elements.size() == 1 && impl_->elements[0].is_unit();
}

Polynomial GBasis::normal_form(const Polynomial& f) const {
  require_same_ring(impl_->ring, f.ring(), "normal_form");
  return Polynomial::from_buffer(
      impl_->ring,
      detail::normal_form(detail::layout_of(impl_->ring), f.buffer(), impl_->divisors));
}

std::vector<Polynomial> GBasis::normal_forms(const std::vector<Polynomial>& fs,
                                             GbStrategy strategy) const {
  std::vector<detail::TermBuffer> in;
  in.reserve(fs.size());
  for (const auto& f : fs) {
    require_same_ring(impl_->ring, f.ring(), "normal_forms");
    in.push_back(f.buffer());
  }
  auto out = detail::normal_forms(detail::layout_of(impl_->ring), in, impl_->divisors, strategy);
  std::vector<Polynomial> result;
  result.reserve(out.size());
  for (auto& b : out) result.push_back(Polynomial::from_buffer(impl_->ring, std::move(b)));
  return result;
}

Polynomial normal_form(const Polynomial& f, const GBasis& G) { return G.normal_form(f); }

GBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens, GbStrategy strategy) {
  std::vector<detail::TermBuffer> in;
  in.reserve(gens.size());
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring(), "buchberger");
    in.push_back(g.buffer());
  }
  auto out = detail::reduced_groebner_basis(detail::layout_of(ring), std::move(in), strategy);
  std::vector<Polynomial> elements;
  elements.reserve(out.size());
  for (auto& b : out) elements.push_back(Polynomial::from_buffer(ring, std::move(b)));
  return GBasis(ring, std::move(elements));
}

}  // namespace fsing
