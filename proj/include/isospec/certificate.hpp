/*
 * Copyright 2026 The isospec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ISOSPEC_CERTIFICATE_HPP
#define ISOSPEC_CERTIFICATE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isospec/group.hpp"
#include "isospec/verifiers.hpp"

namespace isospec {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitConfig = 2 };

struct Config {
  VerifierOptions options;
  /// Optional group description with the four 17x17 generators A, B, C, D.
  std::optional<std::string> generators_path;
  /// Verifier names to run; empty runs all of them.
  std::vector<std::string> only;
  std::string output;

  /// Throws ConfigError for counts below 1, an unsupported prime, or an
  /// unknown verifier name.
  void validate() const;

  friend bool operator==(const Config&, const Config&) = default;
};

struct Summary {
  std::uint64_t claimed_group_order = 0;
  std::uint64_t computed_group_order = 0;
  /// Orders allowed by the structure, with the exclusion each check supports.
  OrderSet claimed_omega;
  OrderSet claimed_mu;
  std::vector<std::string> omega_derivation;
  std::map<std::uint64_t, std::uint64_t> observed_orders;
  OrderSet reference_mu;
  bool mu_match = false;
  bool all_checks_passed = false;
  bool verdict = false;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Certificate {
  int schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  Config config;
  std::vector<CheckResult> checks;
  Summary summary;
  /// Wall-clock milliseconds per check, plus "total".
  std::map<std::string, std::uint64_t> timings_ms;

  /// Everything except timings.
  bool equal_modulo_timings(const Certificate& other) const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Construction from the config: the standard one, or one read back from the
/// generator file. Throws ConfigError when the file cannot be read or parsed.
Construction load_construction(const Config& config);

/// Runs the selected verifiers and assembles the certificate. Throws
/// ConfigError for configuration or enumeration-limit problems.
Certificate run_all(const Config& config);

int exit_code(const Certificate& cert);

std::string to_json(const Certificate& cert);
/// Throws CertificateError with line and column on malformed input.
Certificate from_json(const std::string& text);

void emit_certificate(const Certificate& cert, const std::string& path);
Certificate load_certificate(const std::string& path);

/// Short human-readable report: one line per check and the verdict.
std::string human_summary(const Certificate& cert);

}  // namespace isospec

#endif  // ISOSPEC_CERTIFICATE_HPP
