#ifndef FSING_RING_HPP
#define FSING_RING_HPP

#include "fsing/field.hpp"
#include "fsing/monomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fsing {

/// The ambient ring F_p[x_1, ..., x_n] together with its monomial order.
/// Cheap to copy: the data is shared and immutable.
class Ring {
 public:
  Ring(std::uint32_t p, std::vector<std::string> variables,
       MonomialOrder order = MonomialOrder::grevlex());

  std::uint32_t characteristic() const noexcept { return data_->field.characteristic(); }
  const PrimeField& field() const noexcept { return data_->field; }
  std::size_t nvars() const noexcept { return data_->names.size(); }
  const std::vector<std::string>& variables() const noexcept { return data_->names; }
  const std::string& variable(std::size_t i) const { return data_->names.at(i); }
  std::optional<std::size_t> variable_index(const std::string& name) const;
  const MonomialOrder& order() const noexcept { return data_->order; }

  Ring with_order(const MonomialOrder& order) const;

  /// Same characteristic and variable names; the order may differ.
  bool same_variables(const Ring& o) const noexcept;
  bool operator==(const Ring& o) const noexcept;

 private:
  struct Data {
    PrimeField field;
    std::vector<std::string> names;
    MonomialOrder order;
  };
  std::shared_ptr<const Data> data_;
};

// Throws InputError unless both rings are equal (including order).
void require_same_ring(const Ring& a, const Ring& b, const char* operation);

}  // namespace fsing

#endif  // FSING_RING_HPP
