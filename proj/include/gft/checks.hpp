#ifndef GFT_CHECKS_HPP
#define GFT_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gft/quadrature.hpp"

namespace gft {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Inconclusive };

struct Measured {
  std::string name;
  double value;
};

struct Expected {
  std::string name;
  double value;
  std::string provenance;  // closed-form | analytic-oracle | identity | asymptotic-law
};

struct CheckReport {
  std::string check_id;
  CheckStatus status = CheckStatus::Inconclusive;
  std::vector<Measured> measured;
  std::vector<Expected> expected;
  std::vector<std::pair<std::string, std::string>> csv_tables;  // (name, csv text)
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
  std::string note;
};

struct CheckConfig {
  std::uint64_t seed = 12345;
  QuadratureConfig quad;
};

const std::vector<std::string>& check_ids();
bool is_check_id(const std::string& id);

// Throws std::invalid_argument on unknown id.
CheckReport run_check(const std::string& id, const CheckConfig& cfg = {});

std::vector<CheckReport> run_all(const CheckConfig& cfg = {});

}  // namespace gft

#endif
