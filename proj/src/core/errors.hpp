#pragma once

#include <stdexcept>
#include <string>

namespace klz {

// Error categories; mirrored one-to-one by the C API status codes.
enum class Errc {
  argument,   // bad argument value (null handle, bad enum, ...)
  parse,      // malformed JSON / fraction string
  dimension,  // dimension mismatch
  domain,     // precondition violation (not homogeneous, zero polynomial, ...)
  numeric,    // floating-point procedure failed to converge
  limit,      // configured size limit exceeded
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace klz
