#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace matpow {

// Machine-readable outcome of one identity check.
struct IdentityReport {
  enum class Status { pass, fail, skipped_precondition };

  std::string id;
  nlohmann::json params;
  std::string lhs;
  std::string rhs;
  Status status = Status::pass;
  std::string note;
  std::uint64_t seed = 0;

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }

  static const char* status_name(Status s) {
    switch (s) {
      case Status::pass: return "pass";
      case Status::fail: return "fail";
      default: return "skipped-precondition";
    }
  }

  nlohmann::json to_json() const {
    return nlohmann::json{{"id", id},     {"params", params},
                          {"status", status_name(status)},
                          {"lhs", lhs},   {"rhs", rhs},
                          {"note", note}, {"seed", seed}};
  }
};

}  // namespace matpow
