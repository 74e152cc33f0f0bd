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

#include "isospec/certificate.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "json.hpp"

namespace isospec {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kClaimedGroupOrder = 5648590729620ULL;

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

const CheckResult* find_check(const std::vector<CheckResult>& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool check_passed(const std::vector<CheckResult>& checks, const std::string& name) {
  const auto* c = find_check(checks, name);
  return c != nullptr && c->passed;
}

std::string join(const OrderSet& s) {
  std::string out = "{";
  for (auto n : s) out += (out.size() > 1 ? "," : "") + std::to_string(n);
  return out + "}";
}

std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point since) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - since).count());
}

CheckResult shape_failure(const std::string& why) {
  CheckResult r;
  r.name = "construction";
  r.passed = false;
  r.exhaustive = true;
  r.counterexample = "generator file: " + why;
  return r;
}

// Orders allowed by G = P x| F: |gP| * 3^k with k bounded by the exponent of
// P, minus the products the exclusion checks rule out.
void derive_claimed_omega(const Construction& k, const std::vector<CheckResult>& checks, Summary& s) {
  OrderSet f_omega;
  try {
    const auto f = close(GeneratorSet{{k.fp.a, k.fp.b}, "F"}, 1000);
    f_omega = spectrum_exhaustive(f).omega;
  } catch (const std::exception& e) {
    s.omega_derivation.push_back(std::string("omega(F) unavailable: ") + e.what());
    return;
  }
  s.omega_derivation.push_back("omega(F) = " + join(f_omega));

  const bool exponent_nine = check_passed(checks, "exponent-order9");
  s.omega_derivation.push_back(exponent_nine ? "exponent of P is 9 (exponent-order9 passed)"
                                             : "exponent of P not established (exponent-order9 did not pass)");
  OrderSet candidates;
  for (auto f : f_omega) {
    for (std::uint64_t t : {1, 3, 9}) candidates.insert(f * t);
  }
  s.omega_derivation.push_back("candidates = omega(F) * {1,3,9} = " + join(candidates));

  auto exclude = [&](const std::string& check, std::initializer_list<std::uint64_t> orders) {
    if (check_passed(checks, check)) {
      OrderSet removed;
      for (auto n : orders) {
        if (candidates.erase(n) > 0) removed.insert(n);
      }
      s.omega_derivation.push_back(fmt::format("{} passed: exclude {}", check, join(removed)));
    } else {
      s.omega_derivation.push_back(fmt::format("{} did not pass: nothing excluded", check));
    }
  };
  exclude("fixed-point-free", {15, 45});
  exclude("psi-order18", {18, 36});
  s.claimed_omega = candidates;
  s.claimed_mu = mu_of(candidates);
}

Json check_to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["exhaustive"] = c.exhaustive;
  j["informational"] = c.informational;
  j["samples_used"] = c.samples_used;
  j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
  j["metrics"] = Json::object();
  for (const auto& [k, v] : c.metrics) j["metrics"][k] = v;
  j["witnesses"] = c.witnesses;
  j["counterexample"] = c.counterexample ? Json(*c.counterexample) : Json(nullptr);
  j["notes"] = c.notes;
  return j;
}

CheckResult check_from_json(const Json& j) {
  CheckResult c;
  c.name = j.at("name").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.exhaustive = j.at("exhaustive").get<bool>();
  c.informational = j.at("informational").get<bool>();
  c.samples_used = j.at("samples_used").get<std::uint64_t>();
  if (!j.at("seed").is_null()) c.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("metrics").items()) c.metrics[k] = v.get<std::uint64_t>();
  c.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  if (!j.at("counterexample").is_null()) c.counterexample = j.at("counterexample").get<std::string>();
  c.notes = j.at("notes").get<std::vector<std::string>>();
  return c;
}

Json orders_json(const OrderSet& s) { return Json(std::vector<std::uint64_t>(s.begin(), s.end())); }

OrderSet orders_from(const Json& j) {
  const auto v = j.get<std::vector<std::uint64_t>>();
  return OrderSet(v.begin(), v.end());
}

}  // namespace

void Config::validate() const {
  const auto& o = options;
  if (!is_prime(o.prime) || o.prime > kMaxPrime) throw ConfigError(fmt::format("--prime {} is not a prime <= {}", o.prime, kMaxPrime));
  if (o.samples < 1) throw ConfigError("--samples must be at least 1");
  if (o.spectrum_samples < 1) throw ConfigError("--spectrum-samples must be at least 1");
  if (o.word_length < 1) throw ConfigError("--word-length must be at least 1");
  if (o.limit < 1) throw ConfigError("--limit must be at least 1");
  if (o.workers < 1) throw ConfigError("--workers must be at least 1");
  if (o.order_bound < 1) throw ConfigError("order bound must be at least 1");
  for (const auto& name : only) {
    if (find_verifier(name) == nullptr) throw ConfigError("unknown verifier '" + name + "'");
  }
}

bool Certificate::equal_modulo_timings(const Certificate& other) const {
  return schema_version == other.schema_version && tool_version == other.tool_version && config == other.config &&
         checks == other.checks && summary == other.summary;
}

Construction load_construction(const Config& config) {
  if (!config.generators_path) return standard_construction(config.options.prime);
  std::ifstream in(*config.generators_path);
  if (!in) throw ConfigError("cannot open generator file " + *config.generators_path);
  GeneratorSet gens;
  try {
    gens = read_group_description(in, "G");
  } catch (const FormatError& e) {
    throw ConfigError(std::string("generator file: ") + e.what());
  }
  if (gens.generators.size() != 4) {
    throw ConfigError(fmt::format("generator file: {} generators, expected A, B, C, D", gens.generators.size()));
  }
  const auto& g = gens.generators;
  return construction_from_generators(BigGenerators{g[0], g[1], g[2], g[3]});
}

Certificate run_all(const Config& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  Certificate cert;
  cert.config = config;
  cert.summary.claimed_group_order = kClaimedGroupOrder;

  std::optional<Construction> k;
  try {
    k = load_construction(config);
  } catch (const ShapeError& e) {
    cert.checks.push_back(shape_failure(e.what()));
  } catch (const FieldError& e) {
    cert.checks.push_back(shape_failure(e.what()));
  }

  if (k) {
    const auto context_start = std::chrono::steady_clock::now();
    const VerificationContext ctx(*k, config.options);
    cert.timings_ms["context"] = elapsed_ms(context_start);
    for (const auto& entry : verifier_registry()) {
      if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), entry.name) == config.only.end()) {
        continue;
      }
      const auto check_start = std::chrono::steady_clock::now();
      try {
        cert.checks.push_back(entry.run(ctx));
      } catch (const EnumerationLimitExceeded& e) {
        throw ConfigError(fmt::format("{}: {}", entry.name, e.what()));
      }
      cert.timings_ms[entry.name] = elapsed_ms(check_start);
    }
  }

  auto& s = cert.summary;
  s.all_checks_passed = std::all_of(cert.checks.begin(), cert.checks.end(),
                                    [](const CheckResult& c) { return c.passed || c.informational; });
  if (const auto* order = find_check(cert.checks, "group-order"); order && order->metrics.contains("g_order")) {
    s.computed_group_order = order->metrics.at("g_order");
  }
  if (const auto* sampled = find_check(cert.checks, "sampled-spectrum")) {
    const std::string prefix = "sampled_order_";
    for (const auto& [key, count] : sampled->metrics) {
      if (key.rfind(prefix, 0) == 0) s.observed_orders[std::stoull(key.substr(prefix.size()))] = count;
    }
  }
  if (k && config.only.empty()) derive_claimed_omega(*k, cert.checks, s);
  if (find_check(cert.checks, "reference-spectrum") != nullptr) {
    s.reference_mu = reference_spectrum(symplectic_generators(), config.options.limit).spectrum.mu;
  }

  bool observed_inside = !s.claimed_omega.empty();
  for (const auto& [order, count] : s.observed_orders) observed_inside = observed_inside && s.claimed_omega.contains(order);
  s.mu_match = !s.reference_mu.empty() && s.claimed_mu == s.reference_mu && observed_inside;

  if (config.only.empty()) {
    s.verdict = s.all_checks_passed && s.mu_match && s.computed_group_order == s.claimed_group_order;
  } else {
    s.verdict = s.all_checks_passed;
  }
  cert.timings_ms["total"] = elapsed_ms(start);
  return cert;
}

int exit_code(const Certificate& cert) { return cert.summary.verdict ? kExitPass : kExitFail; }

std::string to_json(const Certificate& cert) {
  Json j;
  j["schema_version"] = cert.schema_version;
  j["tool_version"] = cert.tool_version;

  const auto& o = cert.config.options;
  Json config;
  config["prime"] = o.prime;
  config["seed"] = o.seed;
  config["samples"] = o.samples;
  config["spectrum_samples"] = o.spectrum_samples;
  config["word_length"] = o.word_length;
  config["limit"] = o.limit;
  config["workers"] = o.workers;
  config["order_bound"] = o.order_bound;
  config["generators"] = cert.config.generators_path ? Json(*cert.config.generators_path) : Json(nullptr);
  config["only"] = cert.config.only;
  config["output"] = cert.config.output;
  j["config"] = config;

  j["checks"] = Json::array();
  for (const auto& c : cert.checks) j["checks"].push_back(check_to_json(c));

  const auto& s = cert.summary;
  Json summary;
  summary["claimed_group_order"] = s.claimed_group_order;
  summary["computed_group_order"] = s.computed_group_order;
  summary["claimed_omega"] = orders_json(s.claimed_omega);
  summary["claimed_mu"] = orders_json(s.claimed_mu);
  summary["omega_derivation"] = s.omega_derivation;
  summary["observed_orders"] = Json::object();
  for (const auto& [order, count] : s.observed_orders) summary["observed_orders"][std::to_string(order)] = count;
  summary["reference_mu"] = orders_json(s.reference_mu);
  summary["mu_match"] = s.mu_match;
  summary["all_checks_passed"] = s.all_checks_passed;
  summary["verdict"] = s.verdict ? "pass" : "fail";
  j["summary"] = summary;

  j["timings_ms"] = Json::object();
  for (const auto& [name, ms] : cert.timings_ms) j["timings_ms"][name] = ms;
  return j.dump(2) + "\n";
}

Certificate from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset to line/column.
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
    const std::size_t last_nl = text.rfind('\n', offset == 0 ? 0 : offset - 1);
    const std::size_t column = last_nl == std::string::npos ? offset + 1 : offset - last_nl;
    throw CertificateError(fmt::format("certificate parse error at line {}, column {}: {}", line, column, e.what()));
  }
  try {
    Certificate cert;
    cert.schema_version = j.at("schema_version").get<int>();
    if (cert.schema_version != kSchemaVersion) {
      throw CertificateError(fmt::format("unsupported certificate schema version {}", cert.schema_version));
    }
    cert.tool_version = j.at("tool_version").get<std::string>();
    const auto& c = j.at("config");
    auto& o = cert.config.options;
    o.prime = c.at("prime").get<unsigned>();
    o.seed = c.at("seed").get<std::uint64_t>();
    o.samples = c.at("samples").get<std::size_t>();
    o.spectrum_samples = c.at("spectrum_samples").get<std::size_t>();
    o.word_length = c.at("word_length").get<std::size_t>();
    o.limit = c.at("limit").get<std::size_t>();
    o.workers = c.at("workers").get<unsigned>();
    o.order_bound = c.at("order_bound").get<std::uint64_t>();
    if (!c.at("generators").is_null()) cert.config.generators_path = c.at("generators").get<std::string>();
    cert.config.only = c.at("only").get<std::vector<std::string>>();
    cert.config.output = c.at("output").get<std::string>();

    for (const auto& check : j.at("checks")) cert.checks.push_back(check_from_json(check));

    const auto& s = j.at("summary");
    auto& out = cert.summary;
    out.claimed_group_order = s.at("claimed_group_order").get<std::uint64_t>();
    out.computed_group_order = s.at("computed_group_order").get<std::uint64_t>();
    out.claimed_omega = orders_from(s.at("claimed_omega"));
    out.claimed_mu = orders_from(s.at("claimed_mu"));
    out.omega_derivation = s.at("omega_derivation").get<std::vector<std::string>>();
    for (const auto& [order, count] : s.at("observed_orders").items()) {
      out.observed_orders[std::stoull(order)] = count.get<std::uint64_t>();
    }
    out.reference_mu = orders_from(s.at("reference_mu"));
    out.mu_match = s.at("mu_match").get<bool>();
    out.all_checks_passed = s.at("all_checks_passed").get<bool>();
    const auto verdict = s.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail") throw CertificateError("summary.verdict must be \"pass\" or \"fail\"");
    out.verdict = verdict == "pass";

    for (const auto& [name, ms] : j.at("timings_ms").items()) cert.timings_ms[name] = ms.get<std::uint64_t>();
    return cert;
  } catch (const Json::exception& e) {
    throw CertificateError(std::string("certificate structure: ") + e.what());
  }
}

void emit_certificate(const Certificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write certificate to " + path);
  out << to_json(cert);
  if (!out) throw ConfigError("error while writing " + path);
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CertificateError("cannot open certificate " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

std::string human_summary(const Certificate& cert) {
  std::string out;
  for (const auto& c : cert.checks) {
    const char* status = c.passed ? "PASS" : (c.informational ? "INFO" : "FAIL");
    out += fmt::format("{:<5}{:<24}{}\n", status, c.name, c.exhaustive ? "exhaustive" : fmt::format("{} samples", c.samples_used));
    if (!c.passed && c.counterexample) out += "     " + *c.counterexample + "\n";
  }
  const auto& s = cert.summary;
  if (s.computed_group_order != 0) {
    out += fmt::format("|G| claimed {} computed {}\n", s.claimed_group_order, s.computed_group_order);
  }
  if (!s.claimed_omega.empty()) out += fmt::format("claimed omega {} mu {}\n", join(s.claimed_omega), join(s.claimed_mu));
  if (!s.reference_mu.empty()) out += fmt::format("reference mu(S4(3)) {}\n", join(s.reference_mu));
  if (!s.observed_orders.empty()) {
    std::string hist;
    for (const auto& [order, count] : s.observed_orders) hist += fmt::format(" {}:{}", order, count);
    out += "sampled orders" + hist + "\n";
  }
  out += fmt::format("verdict: {}\n", s.verdict ? "pass" : "fail");
  return out;
}

}  // namespace isospec
