#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace klz {

// Tri-state verdict for semi-decidable properties. CertifiedNo always carries
// a witness that re-verifies exactly (or within the stated tolerance for
// floating-point checks); positive answers are only emitted where a finite
// check is provably complete.
enum class Status { CertifiedYes, CertifiedNo, Unknown };

std::string status_name(Status s);

struct Certificate {
  Status status = Status::Unknown;
  nlohmann::json witness;  // null when absent
  long samples_used = 0;
  std::uint64_t seed = 0;
  std::string note;

  bool yes() const { return status == Status::CertifiedYes; }
  bool no() const { return status == Status::CertifiedNo; }

  static Certificate certified_yes(std::uint64_t seed, long samples, std::string note = {}) {
    return {Status::CertifiedYes, nullptr, samples, seed, std::move(note)};
  }
  static Certificate certified_no(std::uint64_t seed, long samples, nlohmann::json witness,
                                  std::string note = {}) {
    return {Status::CertifiedNo, std::move(witness), samples, seed, std::move(note)};
  }
  static Certificate unknown(std::uint64_t seed, long samples, std::string note = {}) {
    return {Status::Unknown, nullptr, samples, seed, std::move(note)};
  }
};

inline std::string status_name(Status s) {
  switch (s) {
    case Status::CertifiedYes: return "CertifiedYes";
    case Status::CertifiedNo: return "CertifiedNo";
    default: return "Unknown";
  }
}

}  // namespace klz
