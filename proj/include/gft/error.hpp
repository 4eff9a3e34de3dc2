#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gft {

enum class Errc {
  domain,        // argument outside its admissible range
  gap_mismatch,  // two series with different gap index k
  index,         // coefficient index below k+1
  weights,       // convex weights negative or not summing to one
  non_member,    // input required to be a class member is not
  quadrature,    // singular integral estimate did not converge
  parse,         // malformed JSON or flag value
};

inline std::string_view to_string(Errc c) {
  switch (c) {
    case Errc::domain: return "domain";
    case Errc::gap_mismatch: return "gap_mismatch";
    case Errc::index: return "index";
    case Errc::weights: return "weights";
    case Errc::non_member: return "non_member";
    case Errc::quadrature: return "quadrature";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

/// Every validation failure in the library is reported with this type.
/// `field()` names the offending parameter when there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::string field = {})
      : std::runtime_error(std::move(message)), code_(code), field_(std::move(field)) {}

  Errc code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  Errc code_;
  std::string field_;
};

namespace detail {

inline void require(bool ok, Errc code, const char* message, const char* field = "") {
  if (!ok) throw Error(code, message, field);
}

}  // namespace detail
}  // namespace gft
