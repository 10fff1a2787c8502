#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace morse {

enum class Errc {
  InvalidArgument,
  Format,
  Io,
  NotMorse,
  NotGeneric,
  NotRegular,
  BoundaryMismatch,
  SurfaceMismatch,
  Infeasible,
  NotSymplectic,
  NotInStabilizer,
  Unsupported,
};

std::string_view errc_name(Errc code);

// Single exception type for every domain failure; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace morse
