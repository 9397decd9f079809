#pragma once

// Regression suite re-deriving every tabulated or counted claim from the
// library and comparing it with a stored reference value.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "isotriv/configs.hpp"
#include "isotriv/kodaira.hpp"

namespace isotriv::verify {

struct Check {
  /// Stable identifier such as "monodromy-table/IVstar".
  std::string id;
  /// Where the claim is made, in words.
  std::string location;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Check> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }

  /// {"checks": [...], "summary": {"total", "passed", "failed"}}
  nlohmann::json to_json() const;
  /// One "PASS id  computed" / "FAIL id  expected ..., computed ..." line per check.
  std::string to_text() const;
};

struct VerifyOptions {
  /// Table under test; tampering with a row must fail its check.
  const kodaira::FibreTable* table = &kodaira::standard_table();
  std::size_t word_length = configs::kDefaultRigidityWordLength;
  /// Run the four bounded rigidity searches (the slowest checks).
  bool rigidity = true;
};

VerificationReport verify_claims(const VerifyOptions& options = {});

}  // namespace isotriv::verify
