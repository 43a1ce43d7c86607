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


#include "eps/scenario/runner.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "eps/conformance/selfcheck.hpp"
#include "eps/io.hpp"
#include "eps/mgmt/contracts.hpp"

namespace eps::scenario {
namespace {

using sidechain::NodeMode;
using sidechain::SidechainTx;
using sidechain::TxOp;

const std::set<std::string, std::less<>> kDeclarations = {"org",     "node",   "era-root", "era-delegate",
                                                          "era-list", "orginfo", "policy",   "trust"};

std::string line_prefix(const Statement& s) { return "line " + std::to_string(s.line) + ": "; }

std::vector<std::pair<std::string, std::string>> pairs_from(const std::vector<std::string>& args, std::size_t from) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = from; i < args.size(); ++i) {
    auto eq = args[i].find('=');
    out.emplace_back(args[i].substr(0, eq), args[i].substr(eq + 1));
  }
  return out;
}

std::pair<std::string, std::string> split_ref(std::string_view ref) {
  auto slash = ref.find('/');
  return {std::string(ref.substr(0, slash)), std::string(ref.substr(slash + 1))};
}

class Executor {
 public:
  Executor(netsim::SimNetwork& net, std::filesystem::path out_dir) : net_(net), out_dir_(std::move(out_dir)) {}

  void run(const Statement& s) {
    if (!s.expect) {
      exec(s);
      return;
    }
    try {
      exec(s);
    } catch (const Error& e) {
      if (e.code() == *s.expect) return;
      fail(ErrorCode::assertion_failed, "expected " + std::string(to_string(*s.expect)) + ", got " + e.what());
    }
    fail(ErrorCode::assertion_failed, "expected " + std::string(to_string(*s.expect)) + ", statement succeeded");
  }

  const std::map<std::string, Digest256>& aliases() const { return aliases_; }
  const std::map<ContractId, std::string>& labels() const { return labels_; }

 private:
  void exec(const Statement& s) {
    const auto& a = s.args;
    const auto& v = s.verb;
    if (v == "org") {
      net_.add_org(a[0]);
    } else if (v == "node") {
      net_.add_node(a[0], a[1], a.size() == 3 ? NodeMode::ciphertext_only : NodeMode::plaintext);
    } else if (v == "era-root") {
      auto id = net_.deploy_root_era(a[0]);
      labels_[id] = "root:" + a[0];
      auto roots = net_.trusted_roots();
      roots.push_back(id);
      net_.set_trusted_roots(roots);
    } else if (v == "era-delegate") {
      labels_[net_.ensure_delegate_era(a[0])] = "delegate:" + a[0];
    } else if (v == "era-list") {
      era_list(a);
    } else if (v == "orginfo") {
      net_.orginfo_put(a[0], a[1], as_bytes(a[2]));
    } else if (v == "policy") {
      std::string rest;
      for (std::size_t i = 1; i < a.size(); ++i) rest += a[i] + " ";
      net_.node(a[0]).policy().set(a[1], sidechain::split_list(rest.substr(a[1].size())));
    } else if (v == "trust") {
      std::vector<ContractId> roots;
      for (const auto& label : a) roots.push_back(net_.root_era(label));
      net_.set_trusted_roots(roots);
    } else if (v == "establish") {
      std::vector<std::string> domains(a.begin() + 1, a.end() - 2);
      auto id = net_.find_or_establish(a[0], domains);
      if (!s.expect) aliases_[a.back()] = id;
    } else if (v == "deploy") {
      SidechainTx tx;
      tx.sender = org_of(a[1]);
      tx.op = TxOp::deploy;
      tx.contract = a[2];
      tx.pairs = pairs_from(a, 3);
      net_.submit(a[1], tx.sender.hex(), alias(a[0]), tx);
    } else if (v == "tx") {
      SidechainTx tx;
      tx.sender = a[2].starts_with("@") ? net_.org(a[2].substr(1)).address : Address::from_hex(a[2]);
      tx.contract = a[4];
      if (a[3] == "put") {
        tx.op = TxOp::put;
        tx.key = a[5];
        tx.value = a[6];
      } else if (a[3] == "guarded-put") {
        tx.op = TxOp::guarded_put;
        tx.key = a[5];
        tx.expected = a[6];
        tx.value = a[7];
      } else {
        tx.op = TxOp::deploy;
        tx.pairs = pairs_from(a, 5);
      }
      net_.submit(a[1], tx.sender.hex(), alias(a[0]), tx);
    } else if (v == "cross-read") {
      auto colon = a[4].find(':');
      auto [contract, key] = split_ref(std::string_view(a[4]).substr(0, colon));
      auto [dest_contract, dest_key] =
          colon == std::string::npos ? std::pair{contract, key} : split_ref(std::string_view(a[4]).substr(colon + 1));
      net_.cross_chain_read(a[1], org_of(a[1]), alias(a[0]), alias(a[2]), std::stoull(a[3]), contract, key,
                            std::stoull(a[5]), dest_contract, dest_key);
    } else if (v == "pin") {
      net_.guardian_pin_cycle(a[1], alias(a[0]), std::stoull(a[3]));
    } else if (v == "corrupt-pin") {
      net_.corrupt_next_pin(alias(a[0]));
    } else if (v == "contest") {
      bind(a, 3, net_.contest(a[0], alias(a[1]), std::stoull(a[2])), s);
    } else if (v == "propose") {
      bind(a, 4, net_.propose_add_org(a[0], alias(a[1]), a[3]), s);
    } else if (v == "vote") {
      net_.vote(a[0], proposal(a[1]), a[2] == "yes");
    } else if (v == "finalize") {
      net_.finalize(a[0], proposal(a[1]));
    } else if (v == "unmask") {
      net_.unmask(a[0], alias(a[1]));
    } else if (v == "add-node") {
      net_.add_node_flow(net_.node(a[1]).org(), a[1], alias(a[0]));
    } else if (v == "offline" || v == "online") {
      net_.set_online(a[0], v == "online");
    } else if (v == "produce-blocks") {
      auto n = std::stoull(a[1]);
      for (std::uint64_t i = 0; i < n; ++i) {
        if (a[0] == "mgmt") {
          net_.mgmt().produce_block();
        } else {
          net_.produce_block(alias(a[0]));
        }
      }
    } else if (v == "assert-root") {
      auto actual = a[0] == "mgmt" ? net_.mgmt().state().root() : net_.meta(alias(a[0])).roots.back();
      if (actual.hex() != a[1]) {
        fail(ErrorCode::assertion_failed, a[0] + " root is " + actual.hex() + ", expected " + a[1]);
      }
    } else if (v == "assert-state") {
      assert_state(a);
    } else if (v == "assert-pins") {
      auto sc = alias(a[0]);
      auto n = std::stoull(a[1]);
      pinning::pin_chain_verify(net_.pinning(), sc, net_.meta(sc).secret, n);
      bool more = true;
      try {
        pinning::pin_chain_verify(net_.pinning(), sc, net_.meta(sc).secret, n + 1);
      } catch (const ChainBrokenError&) {
        more = false;
      }
      if (more) fail(ErrorCode::assertion_failed, a[0] + " has more than " + a[1] + " pins");
    } else if (v == "archive") {
      net_.node(a[1]).archive(a[1], alias(a[0]), out_dir_ / a[2]);
    } else if (v == "restore") {
      net_.node(a[1]).restore(a[1], alias(a[0]), out_dir_ / a[2]);
    }
  }

  void era_list(const std::vector<std::string>& a) {
    ContractId era_id;
    Address caller;
    if (auto root = root_id(a[0])) {
      era_id = *root;
      caller = netsim::registrar_address(a[0]);
    } else {
      era_id = net_.ensure_delegate_era(a[0]);
      caller = net_.org(a[0]).address;
    }
    if (a[2] == "orginfo") {
      net_.era_list(era_id, caller, a[1], std::nullopt, net_.ensure_orginfo(a.size() == 4 ? a[3] : a[1]));
    } else {
      net_.era_list(era_id, caller, a[1], net_.ensure_delegate_era(a[3]), std::nullopt);
    }
  }

  std::optional<ContractId> root_id(const std::string& label) const {
    auto it = std::find_if(labels_.begin(), labels_.end(), [&](const auto& kv) { return kv.second == "root:" + label; });
    if (it == labels_.end()) return std::nullopt;
    return it->first;
  }

  void assert_state(const std::vector<std::string>& a) {
    auto sc = alias(a[0]);
    const auto& m = net_.meta(sc);
    std::size_t checked = 0;
    for (const auto& id : m.members) {
      const auto& n = net_.node(id);
      if (!net_.online(id) || n.mode() != NodeMode::plaintext || !n.member(sc) || n.runtime(sc).archived) continue;
      auto state = n.state_at(sc, n.runtime(sc).head);
      auto value = state ? state->get(a[1], a[2]) : std::nullopt;
      if (value != a[3]) {
        fail(ErrorCode::assertion_failed, id + " has " + a[1] + "/" + a[2] + " = '" + value.value_or("<unset>") +
                                              "', expected '" + a[3] + "'");
      }
      ++checked;
    }
    if (checked == 0) fail(ErrorCode::assertion_failed, "no reachable plaintext member of " + a[0]);
  }

  void bind(const std::vector<std::string>& a, std::size_t at, std::uint64_t id, const Statement& s) {
    if (a.size() == at + 2 && !s.expect) proposals_[a[at + 1]] = id;
  }

  Digest256 alias(const std::string& name) const {
    auto it = aliases_.find(name);
    if (it == aliases_.end()) fail(ErrorCode::unknown_sidechain, "sidechain " + name + " was never established");
    return it->second;
  }

  std::uint64_t proposal(const std::string& name) const {
    auto it = proposals_.find(name);
    if (it != proposals_.end()) return it->second;
    if (!name.empty() && std::isdigit(static_cast<unsigned char>(name[0]))) return std::stoull(name);
    fail(ErrorCode::unknown_proposal, "proposal " + name + " was never opened");
  }

  Address org_of(const std::string& node) const { return net_.org(net_.node(node).org()).address; }

  netsim::SimNetwork& net_;
  std::filesystem::path out_dir_;
  std::map<std::string, Digest256> aliases_;
  std::map<std::string, std::uint64_t> proposals_;
  std::map<ContractId, std::string> labels_;
};

void write_outputs(const netsim::SimNetwork& net, const Executor& ex, const std::filesystem::path& dir) {
  std::string trace;
  for (const auto& line : net.trace()) trace += line + "\n";
  write_text(dir / "trace.log", trace);

  std::string roots = "mgmt block=" + std::to_string(net.mgmt().head().number) +
                      " root=" + net.mgmt().state().root().hex() + "\n";
  std::string secrets;
  for (const auto& [name, id] : ex.aliases()) {
    const auto& m = net.meta(id);
    roots += name + " " + id.hex() + " head=" + std::to_string(m.head()) + " root=" + m.roots.back().hex() + "\n";
    secrets += name + " " + id.hex() + " " + to_hex(m.secret) + "\n";
  }
  write_text(dir / "roots.txt", roots);
  write_text(dir / "sidechains.txt", secrets);
  mgmt::write_snapshot_file(dir / "mgmt.epsl", net.mgmt().state());
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::parse_error || code == ErrorCode::invalid_domain ? kExitParse : kExitAssertion;
}

}  // namespace

RunResult run_scenario(const ScenarioScript& script, const RunOptions& options) {
  netsim::NetworkConfig config;
  config.seed = options.seed;
  netsim::SimNetwork net(config);
  Executor ex(net, options.out_dir);
  RunResult result;
  for (const auto& s : script.statements) {
    try {
      ex.run(s);
    } catch (const Error& e) {
      result.exit_code = exit_code_for(e.code());
      result.message = line_prefix(s) + e.what();
      break;
    }
  }
  result.mgmt_root = net.mgmt().state().root();
  result.trace = net.trace();
  write_outputs(net, ex, options.out_dir);
  if (options.write_report) {
    auto checks = conformance::run_selfchecks(options.out_dir / "selfcheck");
    conformance::write_report(
        conformance::emit_conformance_report(conformance::default_registry(), checks.results), options.out_dir);
    if (result.exit_code == kExitOk && !checks.failures.empty()) {
      result.exit_code = kExitAssertion;
      result.message = "self-check failed: " + checks.failures.front();
    }
  }
  return result;
}

RunResult run_scenario_file(const std::filesystem::path& path, const RunOptions& options) {
  try {
    return run_scenario(ScenarioScript::load(path), options);
  } catch (const Error& e) {
    RunResult r;
    r.exit_code = exit_code_for(e.code());
    r.message = e.what();
    return r;
  }
}

EraFixture load_era_fixture(const std::filesystem::path& path) {
  auto script = ScenarioScript::load(path);
  EraFixture fx{netsim::SimNetwork{}, {}};
  Executor ex(fx.net, path.parent_path());
  for (const auto& s : script.statements) {
    if (!kDeclarations.contains(s.verb) || s.expect) {
      fail(ErrorCode::parse_error, line_prefix(s) + "'" + s.verb + "' is not allowed in an ERA fixture");
    }
    try {
      ex.run(s);
    } catch (const Error& e) {
      fail(e.code(), line_prefix(s) + e.what());
    }
  }
  fx.labels = ex.labels();
  return fx;
}

std::string format_resolution(const EraFixture& fixture, const era::ResolvedBootstrap& result,
                              const std::vector<std::string>& names) {
  auto label = [&](const ContractId& id) {
    auto it = fixture.labels.find(id);
    return it == fixture.labels.end() ? id.hex() : it->second;
  };
  std::string out;
  if (!result.found()) return result.domain.text() + ": NOT FOUND\n";
  for (const auto& name : names) {
    auto hits = result.lookup(name);
    if (hits.empty()) {
      out += name + ": NOT FOUND\n";
      continue;
    }
    for (const auto* h : hits) {
      std::string via;
      for (const auto& d : h->provenance.delegates) via += (via.empty() ? "" : ">") + label(d);
      out += name + "=" + eps::to_string(h->value) + " root=" + label(h->provenance.root) +
             " via=" + (via.empty() ? "-" : via) + " matched=" + h->provenance.matched_domain +
             " orginfo=" + h->provenance.org_info.hex() + "\n";
    }
  }
  return out;
}

}  // namespace eps::scenario
