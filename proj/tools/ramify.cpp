// Copyright 2026 The ramify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ramify: classify ramification of nonabelian degree-p^3 extensions of F_q((t)).

#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "job.hpp"

using ramify::cli::Command;
using ramify::cli::JobSpec;
using ramify::cli::OutputFormat;

namespace {

void add_field_options(CLI::App* sub, JobSpec& spec) {
  sub->add_option("-p,--prime", spec.field.p, "Characteristic p")->check(CLI::Range(2, 13))->capture_default_str();
  sub->add_option("-f,--degree", spec.field.f, "q = p^f")->check(CLI::Range(1, 20))->capture_default_str();
  sub->add_option("--modulus", spec.field.modulus,
                  "Monic modulus of F_q over F_p, low coefficient first (default: first irreducible)")
      ->delimiter(',');
}

void add_common_options(CLI::App* sub, JobSpec& spec) {
  add_field_options(sub, spec);
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"table", OutputFormat::Table}};
  sub->add_option("--output", spec.output, "json, csv or table")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--precision", spec.precision, "Precision of inputs without O(t^N) (env RAMIFY_PRECISION)")
      ->check(CLI::Range(0, 1 << 20))
      ->capture_default_str();
  sub->add_option("--max-retries", spec.max_precision_retries, "Precision doublings after InsufficientPrecision")
      ->check(CLI::Range(0, 20))
      ->capture_default_str();
  sub->add_option("--window", spec.window, "Oracle window (lowest level), 0 for automatic")
      ->check(CLI::NonNegativeNumber);
}

void add_random_options(CLI::App* sub, JobSpec& spec) {
  sub->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
  sub->add_option("--threads", spec.threads, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramification breaks of nonabelian degree-p^3 extensions of F_q((t))", "ramify"};
  app.require_subcommand(1);
  JobSpec spec;
  spec.precision = ramify::cli::default_precision();

  auto* classify = app.add_subcommand("classify", "Classify one extension given kappa1, kappa2, kappa3");
  add_common_options(classify, spec);
  classify->add_option("--group", spec.group, "q8, d8, heis or mod")->required();
  classify->add_option("--beta1,--kappa1", spec.beta1, "First generator")->required();
  classify->add_option("--beta2,--kappa2", spec.beta2, "Second generator")->required();
  classify->add_option("--kappa3", spec.kappa3, "Third generator")->capture_default_str();
  classify->add_option("--choice", spec.choice, "Sigma1pSigma2 or Sigma1Full")->capture_default_str();
  classify->add_flag("--closed-form-ladder", spec.closed_form_ladder, "Feed the ladder closed-form df values");

  auto* reduce = app.add_subcommand("reduce", "Reduce an Artin-Schreier generator modulo wp(K)");
  add_common_options(reduce, spec);
  reduce->add_option("--kappa", spec.kappa, "Generator")->required();

  auto* decompose = app.add_subcommand("decompose", "Decompose beta2 over beta1 and check both df values");
  add_common_options(decompose, spec);
  decompose->add_option("--beta1", spec.beta1, "First generator")->required();
  decompose->add_option("--beta2", spec.beta2, "Second generator")->required();

  auto* sweep = app.add_subcommand("sweep", "Classify random instances over a (u1, u2) grid");
  add_common_options(sweep, spec);
  add_random_options(sweep, spec);
  sweep->add_option("--umin", spec.umin, "Least break")->capture_default_str();
  sweep->add_option("--umax", spec.umax, "Largest break")->capture_default_str();
  sweep->add_option("--groups", spec.groups, "Groups to sweep (default: all for p)")->delimiter(',');
  sweep->add_option("--per-cell", spec.per_cell, "Random instances per grid cell")->capture_default_str();
  bool no_kappa3 = false;
  sweep->add_flag("--no-kappa3", no_kappa3, "Use kappa3 = 0 throughout");

  auto* selftest = app.add_subcommand("selftest", "Compare closed forms with the elimination oracle");
  add_common_options(selftest, spec);
  add_random_options(selftest, spec);
  selftest->add_option("--trials", spec.trials, "Random instances")->capture_default_str();
  selftest->add_option("--umax", spec.umax, "Largest break")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ramify::cli::kExitUsage;
  }
  spec.random_kappa3 = !no_kappa3;
  if (*classify) spec.command = Command::Classify;
  if (*reduce) spec.command = Command::Reduce;
  if (*decompose) spec.command = Command::Decompose;
  if (*sweep) spec.command = Command::Sweep;
  if (*selftest) spec.command = Command::Selftest;
  return ramify::cli::run(spec, std::cout, std::cerr);
}
