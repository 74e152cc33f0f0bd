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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "isospec/certificate.hpp"

using namespace isospec;

namespace {

Config small_config() {
  Config c;
  c.options.samples = 500;
  c.options.spectrum_samples = 4000;
  return c;
}

const Certificate& full_run() {
  static const Certificate cert = run_all(small_config());
  return cert;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("isospec_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("default run passes with the claimed order and spectrum") {
  const auto& cert = full_run();
  CHECK(cert.summary.verdict);
  CHECK(exit_code(cert) == kExitPass);
  CHECK(cert.summary.computed_group_order == 5648590729620ULL);
  CHECK(cert.summary.claimed_group_order == 5648590729620ULL);
  CHECK(cert.summary.claimed_omega == OrderSet{1, 2, 3, 4, 5, 6, 9, 12});
  CHECK(cert.summary.claimed_mu == OrderSet{5, 9, 12});
  CHECK(cert.summary.reference_mu == OrderSet{5, 9, 12});
  CHECK(cert.summary.mu_match);
  CHECK(cert.checks.size() == verifier_registry().size());
  for (const auto& [order, count] : cert.summary.observed_orders) CHECK(cert.summary.claimed_omega.contains(order));
  CHECK(cert.timings_ms.contains("total"));
}

TEST_CASE("json round trip is lossless") {
  const auto& cert = full_run();
  const auto text = to_json(cert);
  const auto back = from_json(text);
  CHECK(back == cert);
  CHECK(to_json(back) == text);

  const auto path = temp_path("roundtrip.json");
  emit_certificate(cert, path);
  CHECK(load_certificate(path) == cert);
  std::remove(path.c_str());
}

TEST_CASE("json field order is stable") {
  const auto text = to_json(full_run());
  CHECK(text.find("\"schema_version\"") < text.find("\"tool_version\""));
  CHECK(text.find("\"tool_version\"") < text.find("\"config\""));
  CHECK(text.find("\"config\"") < text.find("\"checks\""));
  CHECK(text.find("\"checks\"") < text.find("\"summary\""));
  CHECK(text.find("\"summary\"") < text.find("\"timings_ms\""));
}

TEST_CASE("malformed certificates report a location") {
  const auto text = to_json(full_run());
  try {
    from_json(text.substr(0, text.size() / 2));
    FAIL("expected CertificateError");
  } catch (const CertificateError& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  CHECK_THROWS_AS(from_json("{\"schema_version\": 1}"), CertificateError);
  CHECK_THROWS_AS(from_json("{\"schema_version\": 99}"), CertificateError);
  CHECK_THROWS_AS(load_certificate(temp_path("does_not_exist.json")), CertificateError);
}

TEST_CASE("same seed gives identical certificates modulo timings") {
  const auto again = run_all(small_config());
  CHECK(again.equal_modulo_timings(full_run()));
  auto other = small_config();
  other.options.seed = 7;
  CHECK_FALSE(run_all(other).equal_modulo_timings(full_run()));
}

TEST_CASE("subset runs") {
  auto c = small_config();
  c.only = {"construction", "group-order"};
  const auto cert = run_all(c);
  CHECK(cert.checks.size() == 2);
  CHECK(cert.summary.verdict);
  CHECK(cert.summary.computed_group_order == 5648590729620ULL);
  CHECK(cert.summary.claimed_omega.empty());
  CHECK(cert.summary.omega_derivation.empty());
}

TEST_CASE("config validation") {
  auto c = small_config();
  c.options.samples = 0;
  CHECK_THROWS_AS(run_all(c), ConfigError);
  c = small_config();
  c.options.prime = 4;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = small_config();
  c.only = {"no-such-check"};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = small_config();
  c.generators_path = temp_path("missing_generators.txt");
  CHECK_THROWS_AS(run_all(c), ConfigError);
}

TEST_CASE("enumeration limit is a configuration error") {
  auto c = small_config();
  c.options.limit = 1000;
  c.only = {"reference-spectrum"};
  CHECK_THROWS_AS(run_all(c), ConfigError);
}

TEST_CASE("generator file round trip passes") {
  const auto path = temp_path("generators_ok.txt");
  write_file(path, to_group_description(build_big_generators(standard_construction()).as_set()));
  auto c = small_config();
  c.generators_path = path;
  c.only = {"construction", "c-group", "group-order"};
  CHECK(run_all(c).summary.verdict);
  std::remove(path.c_str());
}

TEST_CASE("corrupted generator file fails with a named check") {
  auto gens = build_big_generators(standard_construction());
  // Same change in every diagonal copy of b: shape is fine, F is not.
  for (std::size_t blk = 0; blk < 4; ++blk) gens.B.set(1 + 4 * blk, 1 + 4 * blk, 2);
  const auto path = temp_path("generators_bad.txt");
  write_file(path, to_group_description(gens.as_set()));
  auto c = small_config();
  c.generators_path = path;
  const auto cert = run_all(c);
  CHECK_FALSE(cert.summary.verdict);
  CHECK(exit_code(cert) == kExitFail);
  bool construction_failed = false;
  for (const auto& check : cert.checks) {
    if (check.name == "construction") construction_failed = !check.passed && check.counterexample.has_value();
  }
  CHECK(construction_failed);

  // A change in a single copy breaks the block shape.
  gens = build_big_generators(standard_construction());
  gens.B.set(5, 5, 2);
  write_file(path, to_group_description(gens.as_set()));
  const auto shape = run_all(c);
  CHECK_FALSE(shape.summary.verdict);
  REQUIRE(shape.checks.size() == 1);
  CHECK(shape.checks[0].name == "construction");
  CHECK(shape.checks[0].counterexample->find("generator file") != std::string::npos);

  write_file(path, "17 3\n1 2 3\n");
  CHECK_THROWS_AS(run_all(c), ConfigError);
  std::remove(path.c_str());
}

TEST_CASE("human summary") {
  const auto text = human_summary(full_run());
  CHECK(text.find("PASS construction") != std::string::npos);
  CHECK(text.find("verdict: pass") != std::string::npos);
}
