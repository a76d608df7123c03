#ifndef HUYGENS_ERRORS_HPP_
#define HUYGENS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace huygens {

// A parameter regime the closed forms (or a numerical route) cannot handle,
// e.g. the matter-era commutator requested at alpha != 3/2.
class UnsupportedError : public std::domain_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace huygens

#endif  // HUYGENS_ERRORS_HPP_
