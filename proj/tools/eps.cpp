// Copyright 2026 The EPS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// eps: operator entry point for the sidechain simulator.

#include <iostream>

#include <CLI11.hpp>

#include "eps/conformance/selfcheck.hpp"
#include "eps/mgmt/contracts.hpp"
#include "eps/pinning/pinning.hpp"
#include "eps/scenario/runner.hpp"

namespace {

using eps::scenario::kExitAssertion;
using eps::scenario::kExitOk;
using eps::scenario::kExitParse;

int cmd_run(const std::string& script, std::uint64_t seed, const std::string& out) {
  eps::scenario::RunOptions opts;
  opts.out_dir = out;
  opts.seed = seed;
  auto result = eps::scenario::run_scenario_file(script, opts);
  if (result.exit_code != kExitOk) {
    std::cerr << "eps run: " << result.message << "\n";
    return result.exit_code;
  }
  std::cout << "ok mgmt-root=" << result.mgmt_root.hex() << " deliveries=" << result.trace.size() << "\n";
  return kExitOk;
}

int cmd_era_resolve(const std::string& fixture_path, const std::string& domain, const std::vector<std::string>& names) {
  auto fixture = eps::scenario::load_era_fixture(fixture_path);
  auto parsed = eps::era::DomainName::parse(domain);
  auto result = eps::era::resolve(fixture.net.trusted_roots(), parsed, names, fixture.net.mgmt().state());
  std::cout << eps::scenario::format_resolution(fixture, result, names);
  return kExitOk;
}

int cmd_pin_verify(const std::string& snapshot, const std::string& sidechain, const std::string& secret,
                   std::size_t count) {
  auto state = eps::mgmt::read_snapshot_file(snapshot);
  const eps::pinning::PinningContract* contract = nullptr;
  for (const auto& [id, c] : state.contracts()) {
    if ((contract = dynamic_cast<const eps::pinning::PinningContract*>(c.get())) != nullptr) break;
  }
  if (contract == nullptr) eps::fail(eps::ErrorCode::malformed_snapshot, "snapshot holds no pinning contract");
  auto id = eps::Digest256::from_hex(sidechain);
  auto secret_bytes = eps::from_hex(secret);
  try {
    for (const auto& p : eps::pinning::pin_chain_verify(*contract, id, secret_bytes, count)) {
      std::cout << "index=" << p.index << " mapkey=" << p.map_key.hex() << " pin=" << p.pin.hex()
                << " status=" << eps::pinning::to_string(p.status) << "\n";
    }
  } catch (const eps::ChainBrokenError& e) {
    std::cout << "chain-broken index=" << e.index() << "\n";
    return kExitAssertion;
  }
  return kExitOk;
}

int cmd_report(const std::string& out) {
  std::filesystem::path dir(out);
  auto checks = eps::conformance::run_selfchecks(dir / "selfcheck");
  auto report = eps::conformance::emit_conformance_report(eps::conformance::default_registry(), checks.results);
  eps::conformance::write_report(report, dir);
  std::cout << report.text();
  for (const auto& f : checks.failures) std::cerr << "self-check failed: " << f << "\n";
  return checks.failures.empty() ? kExitOk : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ethereum private sidechains simulator"};
  app.require_subcommand(1);

  std::string script, out = ".", fixture, snapshot, sidechain, secret, domain;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<std::string> names;

  auto* run = app.add_subcommand("run", "Run a scenario script");
  run->add_option("--script", script, "Scenario script")->required();
  run->add_option("--seed", seed, "RNG seed (default 0)");
  run->add_option("--out", out, "Output directory");

  auto* resolve = app.add_subcommand("era-resolve", "Resolve OrgInfo names for a domain");
  resolve->add_option("--fixture", fixture, "ERA fixture (declaration-only script)")->required();
  resolve->add_option("domain", domain, "Domain to resolve")->required();
  resolve->add_option("names", names, "OrgInfo names")->required();

  auto* verify = app.add_subcommand("pin-verify", "Walk a sidechain's pin chain in a snapshot");
  verify->add_option("--snapshot", snapshot, "Management snapshot (.epsl)")->required();
  verify->add_option("--sidechain", sidechain, "Sidechain id, hex32")->required();
  verify->add_option("--secret", secret, "Sidechain secret, hex")->required();
  verify->add_option("--count", count, "Expected number of pins")->required();

  auto* report = app.add_subcommand("report", "Run the self-checks and write the conformance report");
  report->add_option("--out", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*run) return cmd_run(script, seed, out);
    if (*resolve) return cmd_era_resolve(fixture, domain, names);
    if (*verify) return cmd_pin_verify(snapshot, sidechain, secret, count);
    return cmd_report(out);
  } catch (const eps::Error& e) {
    std::cerr << "eps: " << e.what() << "\n";
    switch (e.code()) {
      case eps::ErrorCode::parse_error:
      case eps::ErrorCode::invalid_domain:
      case eps::ErrorCode::malformed_input:
      case eps::ErrorCode::configuration:
        return kExitParse;
      default:
        return kExitAssertion;
    }
  }
}
