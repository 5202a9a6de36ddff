#include "lpa/extended_nat.hpp"

#include <stdexcept>

namespace lpa {

std::uint64_t ExtendedNat::value() const {
  if (omega_) throw std::logic_error("ExtendedNat: omega has no integer value");
  return value_;
}

std::string ExtendedNat::to_string() const { return omega_ ? "omega" : std::to_string(value_); }

ExtendedNat ExtendedNat::parse(const std::string& text) {
  if (text == "omega") return omega();
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not an extended natural: '" + text + "'");
  return ExtendedNat(std::stoull(text));
}

}  // namespace lpa
