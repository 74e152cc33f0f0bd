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

// isospec: verify the 17x17 group over F_3 and its spectrum.
//
//   isospec construct [--print NAME] [--symmetric]
//   isospec verify [--only NAME]...
//   isospec spectrum --group {s43|frobenius|vf|cgroup}
//   isospec sample --group {G|s43|frobenius|vf} --n N
//   isospec certify -o FILE
//
// Exit codes: 0 pass, 1 verification failure, 2 configuration error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "isospec/certificate.hpp"
#include "isospec/construction.hpp"
#include "isospec/field.hpp"
#include "isospec/group.hpp"
#include "isospec/pgroup.hpp"
#include "isospec/verifiers.hpp"

namespace {

using namespace isospec;

GeneratorSet named_group(const std::string& name, const Construction& k, std::size_t limit) {
  if (name == "G") return build_big_generators(k).as_set();
  if (name == "s43") return symplectic_generators();
  if (name == "frobenius") return GeneratorSet{{k.fp.a, k.fp.b}, "F"};
  if (name == "vf") return affine_generators(k);
  if (name == "cgroup") {
    GeneratorSet gens{{}, "<C>^F"};
    const auto big = build_big_generators(k);
    for (const auto& g : enumerate_frobenius(k.fp, limit)) gens.generators.push_back(conjugate(big.C, block_diagonal(g)));
    return gens;
  }
  throw ConfigError("unknown group '" + name + "'");
}

int print_construction(const Construction& k, const std::string& what, bool symmetric) {
  const auto big = build_big_generators(k);
  auto show = [symmetric](const Matrix& m) { return symmetric ? to_symmetric_text(m) : to_text(m); };
  if (what == "all") {
    std::cout << to_group_description(big.as_set());
    return kExitPass;
  }
  if (what == "a") std::cout << show(k.fp.a);
  else if (what == "b") std::cout << show(k.fp.b);
  else if (what == "A") std::cout << show(big.A);
  else if (what == "B") std::cout << show(big.B);
  else if (what == "C") std::cout << show(big.C);
  else if (what == "D") std::cout << show(big.D);
  else if (what == "c1" || what == "c2" || what == "c3" || what == "c4") std::cout << show(k.c[static_cast<std::size_t>(what[1] - '1')]);
  else if (what == "d") std::cout << to_text(k.d) << "\n";
  else throw ConfigError("unknown object '" + what + "'");
  return kExitPass;
}

int run(int argc, char** argv) {
  CLI::App app{"Verification toolkit for a solvable 17x17 matrix group over F_3 isospectral to S4(3)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);

  Config config;
  auto& o = config.options;
  std::string generators;
  app.add_option("--seed", o.seed, "Master seed")->envname("ISOSPEC_SEED")->capture_default_str();
  app.add_option("--samples", o.samples, "Samples for lemma checks")->envname("ISOSPEC_SAMPLES")->capture_default_str();
  app.add_option("--spectrum-samples", o.spectrum_samples, "Random elements for the sampled spectrum of G")
      ->envname("ISOSPEC_SPECTRUM_SAMPLES")
      ->capture_default_str();
  app.add_option("--word-length", o.word_length, "Generator word length of each random element")
      ->envname("ISOSPEC_WORD_LENGTH")
      ->capture_default_str();
  app.add_option("--limit", o.limit, "Enumeration limit")->envname("ISOSPEC_LIMIT")->capture_default_str();
  app.add_option("--workers", o.workers, "Worker threads for sampling")->envname("ISOSPEC_WORKERS")->capture_default_str();
  app.add_option("--prime", o.prime, "Field characteristic")->envname("ISOSPEC_PRIME")->capture_default_str();
  app.add_option("-o,--output", config.output, "Certificate output path")->envname("ISOSPEC_OUTPUT");
  app.add_option("--generators", generators, "Group description file with A, B, C, D")->envname("ISOSPEC_GENERATORS");

  auto* construct = app.add_subcommand("construct", "Print the construction");
  std::string print = "all";
  bool symmetric = false;
  construct->add_option("--print", print, "a, b, A, B, C, D, c1..c4, d or all")->capture_default_str();
  construct->add_flag("--symmetric", symmetric, "Print p-1 as -1");

  auto* verify = app.add_subcommand("verify", "Run verifiers and print a summary");
  verify->add_option("--only", config.only, "Run only the named verifier (repeatable)");
  auto* list = app.add_subcommand("list", "List verifier names");

  auto* spectrum = app.add_subcommand("spectrum", "Exhaustive spectrum of a small group");
  std::string spectrum_group;
  spectrum->add_option("--group", spectrum_group, "Group")
      ->required()
      ->check(CLI::IsMember({"s43", "frobenius", "vf", "cgroup"}));

  auto* sample = app.add_subcommand("sample", "Sampled element orders");
  std::string sample_group = "G";
  std::size_t sample_n = 1000;
  sample->add_option("--group", sample_group, "Group")
      ->check(CLI::IsMember({"G", "s43", "frobenius", "vf", "cgroup"}))
      ->capture_default_str();
  sample->add_option("--n", sample_n, "Number of samples")->check(CLI::PositiveNumber)->capture_default_str();

  auto* certify = app.add_subcommand("certify", "Run everything and write the certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }
  if (!generators.empty()) config.generators_path = generators;

  try {
    if (*list) {
      for (const auto& e : verifier_registry()) std::cout << e.name << "\n";
      return kExitPass;
    }
    if (*construct) return print_construction(load_construction(config), print, symmetric);

    if (*spectrum) {
      config.validate();
      if (spectrum_group == "s43") {
        const auto ref = reference_spectrum(symplectic_generators(), o.limit);
        std::cout << fmt::format("Sp(4,3): {} elements, center {}\n", ref.enumeration_size, ref.center.size());
        std::cout << format_spectrum(ref.spectrum);
        return kExitPass;
      }
      const auto gens = named_group(spectrum_group, load_construction(config), o.limit);
      const auto group = close(gens, o.limit);
      std::cout << fmt::format("{}: {} elements\n", gens.label, group.order());
      std::cout << format_spectrum(spectrum_exhaustive(group, o.order_bound));
      return kExitPass;
    }

    if (*sample) {
      config.validate();
      const auto gens = named_group(sample_group, load_construction(config), o.limit);
      const auto s = spectrum_sampled(gens, sample_n, o.word_length, o.seed, o.workers, o.order_bound);
      std::cout << fmt::format("{}: {} samples, word length {}, seed {}\n", gens.label, sample_n, o.word_length, o.seed);
      for (const auto& [order, count] : s.histogram()) std::cout << fmt::format("{:>4} {}\n", order, count);
      return kExitPass;
    }

    if (*certify && config.output.empty()) throw ConfigError("certify requires -o FILE");
    const Certificate cert = run_all(config);
    if (!config.output.empty()) emit_certificate(cert, config.output);
    std::cout << human_summary(cert);
    if (!config.output.empty()) std::cout << "certificate: " << config.output << "\n";
    return exit_code(cert);
  } catch (const ConfigError& e) {
    std::cerr << "isospec: configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const EnumerationLimitExceeded& e) {
    std::cerr << "isospec: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ShapeError& e) {
    std::cerr << "isospec: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "isospec: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
