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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Limits and trial counts are fixed below.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "eps/conformance/selfcheck.hpp"
#include "eps/crypto/keccak.hpp"
#include "eps/crypto/masking.hpp"
#include "eps/crypto/prng.hpp"
#include "eps/era/resolver.hpp"
#include "eps/io.hpp"
#include "eps/netsim/fixture.hpp"
#include "eps/scenario/runner.hpp"
#include "eps/sidechain/persist.hpp"
#include "reference_keccak.hpp"

namespace {

using namespace eps;
using eps::testing::ReferenceKeccak;

constexpr std::size_t kMapKeyTrials = 1000;
constexpr double kMapKeySeconds = 5.0;
constexpr std::size_t kPrngSteps = 1000;
constexpr unsigned kToyBits = 6;  // per field; 2^6 * 2^6 = 2^12 pairs
constexpr std::size_t kBitFlips = 256;
constexpr std::size_t kCrossKeyTrials = 32;
constexpr double kScenarioSeconds = 30.0;
constexpr std::uint64_t kScenarioSeed = 7;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Digest256 oracle(const Bytes& data) {
  auto d = ReferenceKeccak::hash(data);
  return Digest256::from_view(ByteView(d.data(), d.size()));
}

Bytes cat(std::initializer_list<ByteView> parts) {
  Bytes out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Digest256 random_digest(std::mt19937_64& rng) {
  Digest256 d;
  for (auto& b : d.bytes) b = static_cast<std::uint8_t>(rng());
  return d;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

// ---- 1 ----
Outcome map_key_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < kMapKeyTrials; ++i) {
    auto id = random_digest(rng), prev = random_digest(rng), value = random_digest(rng);
    // 96-byte layout: sidechainId ++ previousPin ++ prngValue.
    auto expected = oracle(cat({id.view(), prev.view(), value.view()}));
    if (pinning::compute_map_key(id, prev, value) != expected) ++mismatches;
  }
  double s = seconds_since(t0);
  return {mismatches == 0 && s < kMapKeySeconds, std::to_string(kMapKeyTrials - mismatches) + "/" +
                                                     std::to_string(kMapKeyTrials) + " match, " + fmt_seconds(s) +
                                                     " (limit " + fmt_seconds(kMapKeySeconds) + ")"};
}

// ---- 2 ----
Outcome prng_chain() {
  const std::string secret = "acceptance sidechain secret";
  auto expected = oracle(cat({as_bytes(secret), as_bytes("EPS-PIN-PRNG-V1")}));
  auto state = prng_seed(as_bytes(secret));
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < kPrngSteps; ++i) {
    auto [value, next] = prng_next(state);
    if (value != expected || next.counter != i + 1) ++mismatches;
    expected = oracle(expected.to_vector());
    state = next;
  }
  return {mismatches == 0, std::to_string(kPrngSteps - mismatches) + "/" + std::to_string(kPrngSteps) + " match"};
}

// ---- 3 ----
Outcome masking_soundness() {
  const std::size_t n = std::size_t{1} << kToyBits;
  auto address = [](std::size_t v) {
    Address a;
    for (std::size_t i = 0; i < a.bytes.size(); ++i) a.bytes[i] = static_cast<std::uint8_t>(0xa0 + i);
    a.bytes[19] = static_cast<std::uint8_t>(v);
    return a;
  };
  auto salt = [](std::size_t v) {
    Digest256 s;
    for (std::size_t i = 0; i < s.bytes.size(); ++i) s.bytes[i] = static_cast<std::uint8_t>(0x50 + i);
    s.bytes[31] = static_cast<std::uint8_t>(v);
    return s;
  };
  std::vector<Address> addrs;
  std::vector<Digest256> salts;
  for (std::size_t i = 0; i < n; ++i) {
    addrs.push_back(address(i));
    salts.push_back(salt(i));
  }
  std::vector<Digest256> masks;
  std::size_t bad_commit = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t s = 0; s < n; ++s) {
      auto m = mask_participant(addrs[a], salts[s]);
      if (m != oracle(cat({addrs[a].view(), salts[s].view()}))) ++bad_commit;
      masks.push_back(m);
    }
  }
  std::size_t false_accepts = 0, false_rejects = 0;
  for (std::size_t committed = 0; committed < masks.size(); ++committed) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t s = 0; s < n; ++s) {
        bool ok = verify_unmask(addrs[a], salts[s], masks[committed]);
        bool want = a * n + s == committed;
        if (ok && !want) ++false_accepts;
        if (!ok && want) ++false_rejects;
      }
    }
  }
  return {bad_commit == 0 && false_accepts == 0 && false_rejects == 0,
          std::to_string(masks.size()) + " masks x " + std::to_string(masks.size()) + " candidates: " +
              std::to_string(false_accepts) + " false accepts, " + std::to_string(false_rejects) +
              " false rejects, " + std::to_string(bad_commit) + " oracle mismatches"};
}

// ---- shared network fixture ----
std::vector<netsim::FixtureOrg> orgs(std::initializer_list<const char*> names) {
  std::vector<netsim::FixtureOrg> out;
  for (const char* n : names) out.push_back({std::string(n) + ".example", {{std::string(n) + "1", sidechain::NodeMode::plaintext}}});
  return out;
}

std::size_t recovered(const pinning::PinningContract& c, const Digest256& id, ByteView secret, std::size_t upto) {
  try {
    return pinning::pin_chain_verify(c, id, secret, upto).size();
  } catch (const ChainBrokenError& e) {
    return e.index();
  }
}

// ---- 4 ----
Outcome pin_shielding() {
  auto net = netsim::make_fixture(orgs({"a", "b", "c"}));
  std::vector<Digest256> ids{net.find_or_establish("a1", {"b.example"}), net.find_or_establish("b1", {"c.example"}),
                             net.find_or_establish("c1", {"a.example"})};
  net.guardian_pin_cycle("a1", ids[0], 1);
  net.guardian_pin_cycle("b1", ids[1], 1);
  net.guardian_pin_cycle("c1", ids[2], 1);
  const std::size_t want[] = {5, 3, 1};
  for (std::size_t round = 0; round < 5; ++round) {
    for (std::size_t s = 0; s < 3; ++s) {
      if (round < want[s]) net.produce_block(ids[s]);
    }
  }
  const auto& contract = net.pinning();

  std::size_t leaks = 0, entries = 0;
  for (const auto& [key, value] : contract.encode()) {
    if (to_string(key).rfind("pin/", 0) != 0) continue;
    ++entries;
    for (const auto& id : ids) {
      if (std::search(value.begin(), value.end(), id.bytes.begin(), id.bytes.end()) != value.end()) ++leaks;
      if (std::search(key.begin(), key.end(), id.bytes.begin(), id.bytes.end()) != key.end()) ++leaks;
    }
  }
  bool counts_ok = true;
  std::string counts;
  for (std::size_t s = 0; s < 3; ++s) {
    auto got = recovered(contract, ids[s], net.meta(ids[s]).secret, 10);
    counts += (s ? "/" : "") + std::to_string(got);
    counts_ok = counts_ok && got == want[s];
  }
  std::size_t wrong = 0;
  for (const auto& id : ids) wrong += recovered(contract, id, as_bytes("wrong secret"), 10);
  return {entries == 9 && leaks == 0 && counts_ok && wrong == 0,
          std::to_string(entries) + " pin entries, " + std::to_string(leaks) + " id occurrences; recovered " + counts +
              " (want 5/3/1); wrong secret recovered " + std::to_string(wrong)};
}

// ---- 5 ----
Outcome contest_vote() {
  auto specs = orgs({"a", "b", "c", "d"});
  auto net = netsim::make_fixture(specs);
  net.node("d1").policy().set("participation.masked", {"true"});
  auto sc = net.find_or_establish("a1", {"b.example", "c.example", "d.example"});
  std::vector<std::string> notes;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
  };
  auto raises = [](ErrorCode code, const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code() == code;
    }
    return false;
  };
  check(net.pinning().sidechain(sc)->unmasked.size() == 3, "three unmasked");

  net.guardian_pin_cycle("a1", sc, 1);
  for (int b = 0; b < 3; ++b) net.produce_block(sc);
  net.corrupt_next_pin(sc);
  net.produce_block(sc);
  const auto& secret = net.meta(sc).secret;
  auto chain = pinning::pin_chain_verify(net.pinning(), sc, secret, 4);
  check(chain[3].pin != keccak256(net.meta(sc).block_sealed[3]), "index 3 corrupt");

  auto proposal = net.contest("b1", sc, 3);
  check(net.pinning().pin(chain[3].map_key)->status == pinning::PinStatus::contested, "contested");
  net.vote("a1", proposal, true);
  net.vote("b1", proposal, true);
  check(raises(ErrorCode::not_unmasked, [&] { net.vote("d1", proposal, true); }), "masked vote rejected");
  for (std::uint64_t i = 0; i <= pinning::VotingConfig{}.period_blocks; ++i) net.mgmt().produce_block();
  check(net.finalize("c1", proposal), "2 of 3 approve");
  check(net.pinning().pin(chain[3].map_key)->status == pinning::PinStatus::voted_invalid, "voted invalid");

  net.produce_block(sc);
  bool repaired = false;
  try {
    auto full = pinning::pin_chain_verify(net.pinning(), sc, secret, 5);
    repaired = full[4].previous_pin == full[2].pin && full[4].pin == keccak256(net.meta(sc).block_sealed[4]);
  } catch (const Error&) {
  }
  check(repaired, "re-chained from index 2");

  // The masked participant: vote fails until unmask with the right salt.
  auto next = net.propose("a1", sc, pinning::ProposalKind::change_voting_config,
                          pinning::VotingConfig{5, 2, 3}.encode());
  check(raises(ErrorCode::not_unmasked, [&] { net.vote("d1", next, true); }), "masked vote on a new proposal");
  auto d = net.org("d.example").address;
  check(raises(ErrorCode::no_matching_mask,
               [&] {
                 net.mgmt_call(d, net.pinning_contract(), "unmask",
                               pinning::encode_unmask_args(sc, keccak256(std::string_view("guess"))));
               }),
        "wrong salt rejected");
  net.unmask("d1", sc);
  check(!raises(ErrorCode::not_unmasked, [&] { net.vote("d1", next, true); }), "vote after unmask");

  std::string detail = notes.empty() ? "contested -> voted-invalid (2/3), masked vote gated by unmask, chain repaired"
                                     : "failed: ";
  for (const auto& n : notes) detail += n + "; ";
  return {notes.empty(), detail};
}

// ---- 6 ----
Outcome aead_protection(const std::filesystem::path& work) {
  std::mt19937_64 rng(77);
  sidechain::SidechainState state;
  state.contracts["house"] = {{"price-aud", "650000"}, {"status", "settled"}};
  state.contracts["registry"] = {{"lot-42", "a.example"}};
  state.block_number = 12;
  auto root_key = random_digest(rng).to_vector();
  auto id = random_digest(rng);
  auto key = derive_sidechain_key(root_key, id);
  auto path = work / "state.epss";
  sidechain::persist_state(state, key, path);
  auto original = read_file(path);

  std::size_t accepted = 0;
  for (std::size_t i = 0; i < kBitFlips; ++i) {
    auto bytes = original;
    auto bit = rng() % (bytes.size() * 8);
    bytes[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    write_file(path, bytes);
    try {
      sidechain::load_state(key, path);
      ++accepted;
    } catch (const Error&) {
    }
  }
  write_file(path, original);
  bool round_trip = sidechain::load_state(key, path).root() == state.root();

  std::size_t authenticated = 0;
  for (std::size_t i = 0; i < kCrossKeyTrials; ++i) {
    auto rk = random_digest(rng).to_vector();
    auto a = random_digest(rng), b = random_digest(rng);
    auto sealed = sidechain::seal_state(state, derive_sidechain_key(rk, a));
    try {
      sidechain::open_state(sealed, derive_sidechain_key(rk, b));
      ++authenticated;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::tamper_detected) ++authenticated;
    }
  }
  return {accepted == 0 && round_trip && authenticated == 0,
          std::to_string(kBitFlips - accepted) + "/" + std::to_string(kBitFlips) + " flips rejected; round trip " +
              (round_trip ? "exact" : "WRONG") + "; cross-key " + std::to_string(kCrossKeyTrials - authenticated) +
              "/" + std::to_string(kCrossKeyTrials) + " rejected"};
}

// ---- 7 ----
Outcome era_resolution() {
  netsim::SimNetwork net;
  auto r1 = net.deploy_root_era("r1");
  auto r2 = net.deploy_root_era("r2");
  net.add_org("sc.example.com");
  net.add_org("bank.co.uk");
  auto delegate = net.ensure_delegate_era("sc.example.com");
  auto sc_info = net.ensure_orginfo("sc.example.com");
  auto bank_info = net.ensure_orginfo("bank.co.uk");
  net.orginfo_put("sc.example.com", era::kEnodeName, as_bytes("enode://sc@10.0.0.1:30303"));
  net.orginfo_put("bank.co.uk", era::kEnodeName, as_bytes("enode://bank@10.0.0.2:30303"));
  net.era_list(r1, netsim::registrar_address("r1"), "sc.example.com", delegate, std::nullopt);
  net.era_list(r2, netsim::registrar_address("r2"), "sc.example.com", delegate, std::nullopt);
  net.era_list(delegate, net.org("sc.example.com").address, "sc.example.com", std::nullopt, sc_info);
  net.era_list(r1, netsim::registrar_address("r1"), "bank.co.uk", std::nullopt, bank_info);
  const auto& state = net.mgmt().state();
  std::vector<std::string> notes;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
  };

  // Registry keys against the oracle: record under keccak(domain), value
  // under keccak(name).
  Bytes sc_key = oracle(to_bytes("sc.example.com")).to_vector();
  check(!state.read_contract(r1, "getRecord", std::vector<Bytes>{sc_key}).empty(), "record at oracle domain hash");
  Bytes enode_key = oracle(to_bytes("org.ethereum.enode")).to_vector();
  auto raw = state.read_contract(bank_info, "get", std::vector<Bytes>{enode_key});
  check(!raw.empty() && raw[0] == 1, "OrgInfo value at oracle name key");

  const std::vector<std::string> names{"org.ethereum.enode"};
  auto sc = era::resolve({r1, r2}, era::DomainName::parse("sc.example.com"), names, state);
  auto hits = sc.lookup("org.ethereum.enode");
  check(hits.size() == 2, "sc.example.com in both roots");
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const auto& p = hits[i]->provenance;
    check(p.root == (i == 0 ? r1 : r2) && p.delegates == std::vector<ContractId>{delegate} && p.org_info == sc_info &&
              p.matched_domain == "sc.example.com" && to_string(hits[i]->value) == "enode://sc@10.0.0.1:30303",
          "sc.example.com provenance via root " + std::to_string(i + 1));
  }
  auto bank = era::resolve({r1, r2}, era::DomainName::parse("bank.co.uk"), names, state);
  auto bh = bank.lookup("org.ethereum.enode");
  check(bh.size() == 1 && bh[0]->provenance.root == r1 && bh[0]->provenance.delegates.empty() &&
            bh[0]->provenance.org_info == bank_info && to_string(bh[0]->value) == "enode://bank@10.0.0.2:30303",
        "bank.co.uk provenance");
  auto deep = era::resolve({r1, r2}, era::DomainName::parse("aa.bb.sc.example.com"), names, state);
  check(deep.lookup("org.ethereum.enode").size() == 2 && deep.sources[0].matched_domain == "sc.example.com",
        "aa.bb.sc.example.com via parent");
  auto none = era::resolve({r1, r2}, era::DomainName::parse("unlisted.example.net"), names, state);
  check(!none.found() && none.lookup("org.ethereum.enode").empty(), "unlisted NOT FOUND");

  std::string detail = notes.empty() ? "two-root provenance, delegate walk, parent fallback, NOT FOUND" : "failed: ";
  for (const auto& n : notes) detail += n + "; ";
  return {notes.empty(), detail};
}

std::string slurp(const std::filesystem::path& p) { return to_string(read_file(p)); }

std::string golden_mgmt_root(const std::filesystem::path& golden) {
  std::istringstream in(slurp(golden / "house_purchase.roots.txt"));
  std::string first;
  std::getline(in, first);
  auto pos = first.find("root=");
  return pos == std::string::npos ? "" : first.substr(pos + 5);
}

// ---- 8 ----
Outcome end_to_end(const std::filesystem::path& script, const std::filesystem::path& golden,
                   const std::filesystem::path& work) {
  scenario::RunOptions opts;
  opts.seed = kScenarioSeed;
  opts.write_report = false;
  auto t0 = std::chrono::steady_clock::now();
  opts.out_dir = work / "e2e-a";
  auto a = scenario::run_scenario_file(script, opts);
  double s = seconds_since(t0);
  opts.out_dir = work / "e2e-b";
  auto b = scenario::run_scenario_file(script, opts);
  auto want = golden_mgmt_root(golden);
  bool ok = a.exit_code == 0 && b.exit_code == 0 && a.mgmt_root.hex() == want && a.mgmt_root == b.mgmt_root &&
            a.trace == b.trace && s < kScenarioSeconds;
  std::string detail = a.exit_code != 0 ? "run failed: " + a.message
                                        : "mgmt root " + a.mgmt_root.hex().substr(0, 16) + "... " +
                                              (a.mgmt_root.hex() == want ? "matches golden" : "DIFFERS from golden") +
                                              "; second run " + (a.mgmt_root == b.mgmt_root && a.trace == b.trace
                                                                     ? "identical"
                                                                     : "DIFFERENT") +
                                              "; " + fmt_seconds(s) + " (limit " + fmt_seconds(kScenarioSeconds) + ")";
  return {ok, detail};
}

// ---- 9 ----
Outcome determinism(const std::filesystem::path& script, const std::filesystem::path& work) {
  scenario::RunOptions opts;
  opts.seed = kScenarioSeed;
  for (const char* run : {"det-a", "det-b"}) {
    opts.out_dir = work / run;
    auto r = scenario::run_scenario_file(script, opts);
    if (r.exit_code != 0) return {false, std::string(run) + " failed: " + r.message};
  }
  std::size_t differ = 0;
  std::string names;
  for (const char* f : {"trace.log", "report.txt", "report.json", "roots.txt"}) {
    if (slurp(work / "det-a" / f) != slurp(work / "det-b" / f)) {
      ++differ;
      names += std::string(" ") + f;
    }
  }
  return {differ == 0, differ == 0 ? "trace.log, roots.txt, report.txt, report.json byte-identical across two runs"
                                   : "differs:" + names};
}

// ---- 10 ----
Outcome conformance_report(const std::filesystem::path& work) {
  // Transcribed independently of the catalogue.
  const std::set<std::string> bc = {
      "BC-1a-ApiCallPermissioning",         "BC-1b-EthereumAccountWhitelist",
      "BC1c-TransactionTypePermissioning",  "BC-1d-PrivateStateAuthenticatedEncryption",
      "BC-2a-OrganisationallyAwareConsensus", "BC-3a-DiscoverableBootstrapInfo",
      "BC-4a-ArchitecturalDecentralisation", "BC-4b-PoliticalDecentralisation",
      "BC-5a-OffchainOrgToOrg",             "BC-5b-OffchainAll",
      "BC-5c-OffchianAntiSpam",             "BC-5d-Whisper"};
  const std::set<std::string> sc = {
      "SC-1a-EstablishmentNodesWhitelist",   "SC-1b-EstablishmentNodesBlacklist",
      "SC-2a-EstablishmentApiWhitelist",     "SC-2b-EstablishmentApiBlacklist",
      "SC-3a-SidechainFindOrEstablishmentApi", "SC-3b-SidechainIdentifier",
      "SC-4a-Pinning",                       "SC-4b-PinningParticipantShielding",
      "SC-4c-PinningTransactionRateShielding", "SC-4d-PinningContesting",
      "SC-4e-PinningCipherTextObservers",    "SC-4f-PinningConfiguration",
      "SC-4g-MultipleSidechains",            "SC-5a-DataAccessDifferentParticipants",
      "SC-6a-SidechainArchive"};
  const std::vector<std::string> must_pass = {
      "SC-4a-Pinning", "SC-4b-PinningParticipantShielding", "SC-4c-PinningTransactionRateShielding",
      "SC-4d-PinningContesting", "SC-4e-PinningCipherTextObservers", "SC-4f-PinningConfiguration",
      "SC-4g-MultipleSidechains", "SC-1a-EstablishmentNodesWhitelist", "SC-1b-EstablishmentNodesBlacklist",
      "SC-2a-EstablishmentApiWhitelist", "SC-2b-EstablishmentApiBlacklist", "SC-3a-SidechainFindOrEstablishmentApi",
      "SC-3b-SidechainIdentifier", "SC-6a-SidechainArchive", "BC-1a-ApiCallPermissioning",
      "BC-1b-EthereumAccountWhitelist", "BC1c-TransactionTypePermissioning",
      "BC-1d-PrivateStateAuthenticatedEncryption", "BC-3a-DiscoverableBootstrapInfo"};
  const std::vector<std::string> must_be_na = {"BC-2a-OrganisationallyAwareConsensus", "BC-5a-OffchainOrgToOrg",
                                               "BC-5b-OffchainAll", "BC-5c-OffchianAntiSpam", "BC-5d-Whisper"};

  auto registry = conformance::default_registry();
  std::set<std::string> got_bc, got_sc;
  for (const auto& e : registry) {
    if (e.id.starts_with("BC")) got_bc.insert(e.id);
    if (e.id.starts_with("SC")) got_sc.insert(e.id);
  }
  std::vector<std::string> notes;
  if (got_bc != bc) notes.push_back("BC set differs");
  if (got_sc != sc) notes.push_back("SC set differs");

  auto checks = conformance::run_selfchecks(work / "selfcheck");
  auto report = conformance::emit_conformance_report(registry, checks.results);
  for (const auto& id : must_pass) {
    const auto* row = report.row(id);
    if (row == nullptr || row->mark_text() != "✓") notes.push_back(id + " not ✓");
  }
  for (const auto& id : must_be_na) {
    const auto* row = report.row(id);
    if (row == nullptr || row->mark_text() != "N/A" || row->entry.status != conformance::Status::out_of_scope ||
        row->entry.rationale.empty()) {
      notes.push_back(id + " not N/A with rationale");
    }
  }
  auto missing = registry;
  std::erase_if(missing, [](const auto& e) { return e.id == "SC-6a-SidechainArchive"; });
  bool raised = false;
  try {
    conformance::emit_conformance_report(missing, checks.results);
  } catch (const Error& e) {
    raised = e.code() == ErrorCode::missing_requirement;
  }
  if (!raised) notes.push_back("missing SC-6a not reported");
  for (const auto& f : checks.failures) notes.push_back(f);

  std::string detail = "catalogue holds " + std::to_string(got_bc.size()) + " BC + " + std::to_string(got_sc.size()) +
                       " SC ids (every id the requirement list defines); " + std::to_string(must_pass.size()) +
                       " rows ✓, " + std::to_string(must_be_na.size()) + " rows N/A";
  if (!notes.empty()) {
    detail = "failed: ";
    for (const auto& n : notes) detail += n + "; ";
  }
  return {notes.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::string script, golden, work = "acceptance-work";
  app.add_option("--scenario", script)->required();
  app.add_option("--golden", golden)->required();
  app.add_option("--work", work);
  CLI11_PARSE(app, argc, argv);
  std::filesystem::remove_all(work);
  std::filesystem::create_directories(work);

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"map-key oracle equivalence", map_key_oracle},
      {"PRNG chain", prng_chain},
      {"masking soundness", masking_soundness},
      {"pin shielding", pin_shielding},
      {"contest/vote flow", contest_vote},
      {"AEAD state protection", [&] { return aead_protection(work); }},
      {"ERA resolution", era_resolution},
      {"end-to-end house purchase", [&] { return end_to_end(script, golden, work); }},
      {"determinism", [&] { return determinism(script, work); }},
      {"conformance report", [&] { return conformance_report(work); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << (i + 1) << "] " << criteria[i].name << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
