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


#include "eps/conformance/selfcheck.hpp"

#include <algorithm>

#include "eps/crypto/keccak.hpp"
#include "eps/mgmt/contracts.hpp"
#include "eps/netsim/fixture.hpp"
#include "eps/sidechain/persist.hpp"

namespace eps::conformance {
namespace {

using netsim::FixtureOrg;
using netsim::SimNetwork;
using sidechain::NodeMode;
using sidechain::SidechainTx;
using sidechain::TxOp;
using sidechain::TxType;

void expect(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::assertion_failed, what);
}

template <typename F>
void expect_error(ErrorCode code, F&& f, const std::string& what) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() == code) return;
    fail(ErrorCode::assertion_failed,
         what + ": expected " + std::string(to_string(code)) + ", got " + std::string(to_string(e.code())));
  }
  fail(ErrorCode::assertion_failed, what + ": expected " + std::string(to_string(code)) + ", got success");
}

bool contains(ByteView haystack, ByteView needle) {
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

SidechainTx deploy_tx(const Address& sender, std::string contract,
                      std::vector<std::pair<std::string, std::string>> pairs = {}) {
  SidechainTx tx;
  tx.sender = sender;
  tx.op = TxOp::deploy;
  tx.contract = std::move(contract);
  tx.pairs = std::move(pairs);
  return tx;
}

SidechainTx put_tx(const Address& sender, std::string contract, std::string key, std::string value) {
  SidechainTx tx;
  tx.sender = sender;
  tx.op = TxOp::put;
  tx.contract = std::move(contract);
  tx.key = std::move(key);
  tx.value = std::move(value);
  return tx;
}

Address account(std::string_view label) { return Address::from_view(keccak256(label).view().subspan(12)); }

std::vector<FixtureOrg> orgs(std::initializer_list<std::pair<const char*, NodeMode>> list) {
  std::vector<FixtureOrg> out;
  for (const auto& [domain, mode] : list) {
    std::string d(domain);
    out.push_back({d + ".example", {{d + "1", mode}}});
  }
  return out;
}

std::vector<FixtureOrg> trio() {
  return orgs({{"a", NodeMode::plaintext}, {"b", NodeMode::plaintext}, {"c", NodeMode::plaintext}});
}

Address addr(const SimNetwork& net, std::string_view org) { return net.org(std::string(org) + ".example").address; }

void produce(SimNetwork& net, const Digest256& sc, int n) {
  for (int i = 0; i < n; ++i) net.produce_block(sc);
}

void mgmt_blocks(SimNetwork& net, int n) {
  for (int i = 0; i < n; ++i) net.mgmt().produce_block();
}

// ---- permissioning ----

void api_call_permissioning(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  auto sc = net.find_or_establish("a1", {"b.example"});
  expect_error(ErrorCode::permission_denied, [&] { net.submit("a1", "mallory", sc, deploy_tx(addr(net, "a"), "c")); },
               "unknown participant submits");
  net.node("a1").policy().set("api.viewer", {"view"});
  auto before = net.node("a1").audit_count();
  expect(!net.node("a1").read("viewer", sc, "c", "k").has_value(), "viewer reads empty state");
  expect(net.node("a1").audit_count() == before + 1, "one audit per API call");
  expect_error(ErrorCode::permission_denied, [&] { net.submit("a1", "viewer", sc, deploy_tx(addr(net, "a"), "c")); },
               "view-only participant deploys");
}

void account_whitelist(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  auto sc = net.find_or_establish("a1", {"b.example"});
  auto stranger = account("stranger");
  expect_error(ErrorCode::permission_denied, [&] { net.submit("a1", "a1", sc, put_tx(stranger, "c", "k", "v")); },
               "unlisted account");
  auto& policy = net.node("a1").policy();
  policy.account_whitelist.insert(stranger);
  policy.tx_permissions[stranger] = {TxType::update};
  net.submit("a1", "a1", sc, put_tx(stranger, "c", "k", "v"));
}

void tx_type_permissioning(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  auto sc = net.find_or_establish("a1", {"b.example"});
  auto updater = account("updater");
  net.node("a1").policy().set("accounts.whitelist", {updater.hex()});
  net.node("a1").policy().set("tx." + updater.hex(), {"update"});
  expect_error(ErrorCode::permission_denied, [&] { net.submit("a1", "a1", sc, deploy_tx(updater, "c")); },
               "update-only account deploys");
  net.submit("a1", "a1", sc, put_tx(updater, "c", "k", "v"));
}

// ---- encrypted state ----

sidechain::SidechainState sample_state() {
  sidechain::SidechainState s;
  s.contracts["ledger"] = {{"alice", "10"}, {"bob", "32"}};
  s.contracts["deed"] = {{"owner", "b.example"}};
  s.block_number = 3;
  return s;
}

void aead_tamper_rejection(const std::filesystem::path&) {
  auto root_key = keccak256(std::string_view("selfcheck-root")).to_vector();
  auto id = keccak256(std::string_view("selfcheck-sidechain"));
  auto key = derive_sidechain_key(root_key, id);
  auto state = sample_state();
  auto sealed = sidechain::seal_state(state, key);
  expect(sidechain::open_state(sealed, key).root() == state.root(), "round trip keeps the root");
  const std::size_t bits = sealed.size() * 8;
  for (std::size_t i = 0; i < 64; ++i) {
    auto bad = sealed;
    auto bit = (i * 7919 + 13) % bits;
    bad[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    bool rejected = false;
    try {
      sidechain::open_state(bad, key);
    } catch (const Error&) {
      rejected = true;
    }
    expect(rejected, "bit " + std::to_string(bit) + " flip accepted");
  }
}

void cross_sidechain_key(const std::filesystem::path&) {
  auto root_key = keccak256(std::string_view("selfcheck-root")).to_vector();
  auto state = sample_state();
  for (int i = 0; i < 32; ++i) {
    auto a = keccak256("sc-" + std::to_string(i));
    auto b = keccak256("sc-" + std::to_string(i + 1));
    auto sealed = sidechain::seal_state(state, derive_sidechain_key(root_key, a));
    expect_error(ErrorCode::tamper_detected, [&] { sidechain::open_state(sealed, derive_sidechain_key(root_key, b)); },
                 "foreign sidechain key");
  }
}

// ---- bootstrap discovery ----

void multi_root_resolution(const std::filesystem::path&) {
  SimNetwork net;
  auto r1 = net.deploy_root_era("r1");
  auto r2 = net.deploy_root_era("r2");
  net.add_org("sc.example.com");
  net.add_org("bank.co.uk");
  auto delegate = net.ensure_delegate_era("sc.example.com");
  auto sc_info = net.ensure_orginfo("sc.example.com");
  net.orginfo_put("sc.example.com", era::kEnodeName, as_bytes("enode-sc"));
  net.orginfo_put("bank.co.uk", era::kEnodeName, as_bytes("enode-bank"));
  net.era_list(r1, netsim::registrar_address("r1"), "sc.example.com", delegate, std::nullopt);
  net.era_list(r2, netsim::registrar_address("r2"), "sc.example.com", delegate, std::nullopt);
  net.era_list(delegate, net.org("sc.example.com").address, "sc.example.com", std::nullopt, sc_info);
  net.era_list(r1, netsim::registrar_address("r1"), "bank.co.uk", std::nullopt, net.ensure_orginfo("bank.co.uk"));

  const std::vector<std::string> names{std::string(era::kEnodeName)};
  const auto& state = net.mgmt().state();
  auto sc = era::resolve({r1, r2}, era::DomainName::parse("sc.example.com"), names, state);
  auto hits = sc.lookup(era::kEnodeName);
  expect(hits.size() == 2, "sc.example.com found through both roots");
  expect(hits[0]->provenance.root == r1 && hits[1]->provenance.root == r2, "roots in trust order");
  for (const auto* h : hits) {
    expect(eps::to_string(h->value) == "enode-sc", "sc.example.com enode");
    expect(h->provenance.delegates == std::vector<ContractId>{delegate}, "delegate in provenance");
  }
  auto bank = era::resolve({r1, r2}, era::DomainName::parse("bank.co.uk"), names, state);
  expect(bank.lookup(era::kEnodeName).size() == 1, "bank.co.uk listed in one root");
  expect(bank.lookup(era::kEnodeName)[0]->provenance.delegates.empty(), "bank.co.uk has no delegate");
  auto deep = era::resolve({r1, r2}, era::DomainName::parse("aa.bb.sc.example.com"), names, state);
  expect(deep.found() && deep.sources[0].matched_domain == "sc.example.com", "parent fallback");
  auto none = era::resolve({r1, r2}, era::DomainName::parse("nowhere.example.org"), names, state);
  expect(!none.found(), "unlisted domain not found");
}

// ---- establishment ----

void org_whitelist(const std::filesystem::path&) {
  netsim::FixtureOptions opts;
  opts.mutual_trust = false;
  auto net = netsim::make_fixture(trio(), opts);
  expect_error(ErrorCode::establishment_rejected, [&] { net.find_or_establish("a1", {"b.example"}); },
               "empty whitelist admits nobody");
  net.node("b1").policy().set("establish.orgs.whitelist", {"a.example"});
  net.node("b1").policy().set("establish.api.whitelist", {"a1"});
  auto sc = net.find_or_establish("a1", {"b.example"});
  expect(net.node("b1").member(sc), "whitelisted initiator admitted");
}

void org_blacklist(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  net.node("b1").policy().set("establish.orgs.blacklist", {"a.example"});
  expect_error(ErrorCode::establishment_rejected, [&] { net.find_or_establish("a1", {"b.example"}); },
               "blacklist wins over whitelist");
  expect(net.node("c1").runtimes().empty(), "no stray runtime");
  net.find_or_establish("a1", {"c.example"});
}

void api_whitelist(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  net.node("a1").policy().establish_api_whitelist.erase("a1");
  expect_error(ErrorCode::initiator_not_authorized, [&] { net.find_or_establish("a1", {"b.example"}); },
               "initiator missing from its own api whitelist");
  net.node("a1").policy().establish_api_whitelist.insert("a1");
  net.node("b1").policy().establish_api_whitelist.erase("a1");
  expect_error(ErrorCode::establishment_rejected, [&] { net.find_or_establish("a1", {"b.example"}); },
               "initiator missing from the receiver's api whitelist");
}

void api_blacklist(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  net.node("a1").policy().set("establish.api.blacklist", {"a1"});
  expect_error(ErrorCode::initiator_not_authorized, [&] { net.find_or_establish("a1", {"b.example"}); },
               "blacklisted initiator");
}

void find_or_establish(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  auto sc = net.find_or_establish("a1", {"b.example"});
  auto head = net.mgmt().head().number;
  expect(net.find_or_establish("a1", {"b.example"}) == sc, "second call finds the first sidechain");
  expect(net.mgmt().head().number == head, "one registration only");
  expect(net.pinning().sidechain(sc) != nullptr, "registered on the management chain");
  expect_error(ErrorCode::unresolved_domain, [&] { net.find_or_establish("a1", {"zz.example"}); },
               "unlisted domain");
}

void sidechain_identifier(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  auto ab = net.find_or_establish("a1", {"b.example"});
  auto ac = net.find_or_establish("a1", {"c.example"});
  expect(ab != ac, "distinct ids");
  net.submit("a1", "a1", ab, deploy_tx(addr(net, "a"), "c", {{"k", "ab"}}));
  net.submit("a1", "a1", ac, deploy_tx(addr(net, "a"), "c", {{"k", "ac"}}));
  net.produce_block(ab);
  net.produce_block(ac);
  expect(net.node("b1").read("b1", ab, "c", "k") == std::optional<std::string>("ab"), "routed to ab");
  expect(net.node("c1").read("c1", ac, "c", "k") == std::optional<std::string>("ac"), "routed to ac");
  expect_error(ErrorCode::unknown_sidechain, [&] { net.node("c1").read("c1", ab, "c", "k"); }, "non-member read");
}

// ---- pinning ----

void chain_verify(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  auto sc = net.find_or_establish("a1", {"b.example", "c.example"});
  net.guardian_pin_cycle("a1", sc, 1);
  produce(net, sc, 5);
  const auto& secret = net.meta(sc).secret;
  auto chain = pinning::pin_chain_verify(net.pinning(), sc, secret, 5);
  expect(chain.size() == 5, "five pins");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    expect(chain[i].pin == keccak256(net.meta(sc).block_sealed[i]), "pin commits to block state");
  }
  try {
    pinning::pin_chain_verify(net.pinning(), sc, secret, 6);
    expect(false, "sixth pin located");
  } catch (const ChainBrokenError& e) {
    expect(e.index() == 5, "chain ends at index 5");
  }
}

void participant_shielding(const std::filesystem::path&) {
  auto specs = trio();
  auto net = netsim::make_fixture(specs);
  net.node("c1").policy().set("participation.masked", {"true"});
  auto sc = net.find_or_establish("a1", {"b.example", "c.example"});
  net.guardian_pin_cycle("a1", sc, 1);
  produce(net, sc, 3);
  const auto* rec = net.pinning().sidechain(sc);
  expect(rec->masked.size() == 1 && rec->unmasked.size() == 2, "c registered masked");
  // c's address is public through its ERA listing; what must not exist is
  // any link from the pinning contract or its transactions to c.
  auto c = addr(net, "c");
  for (const auto& [key, value] : net.pinning().encode()) {
    expect(!contains(key, c.view()) && !contains(value, c.view()), "masked address absent from pinning state");
  }
  for (const auto& block : net.mgmt().blocks()) {
    for (const auto& tx : block.txs) {
      expect(!(tx.target == net.pinning_contract() && tx.sender == c), "masked participant sent a pinning tx");
    }
  }
  for (const auto& [key, entry] : net.pinning().pins()) {
    expect(!contains(entry.encode(), sc.view()), "pin entry names its sidechain");
  }
}

void rate_shielding(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  std::vector<Digest256> scs{net.find_or_establish("a1", {"b.example"}), net.find_or_establish("a1", {"c.example"}),
                             net.find_or_establish("b1", {"c.example"})};
  net.guardian_pin_cycle("a1", scs[0], 1);
  net.guardian_pin_cycle("a1", scs[1], 1);
  net.guardian_pin_cycle("b1", scs[2], 1);
  const std::size_t want[] = {5, 3, 1};
  for (std::size_t round = 0; round < 5; ++round) {
    for (std::size_t s = 0; s < 3; ++s) {
      if (round < want[s]) net.produce_block(scs[s]);
    }
  }
  expect(net.pinning().pins().size() == 9, "nine pins in one map");
  for (std::size_t s = 0; s < 3; ++s) {
    auto chain = pinning::pin_chain_verify(net.pinning(), scs[s], net.meta(scs[s]).secret, want[s]);
    expect(chain.size() == want[s], "per-sidechain pin count");
  }
  try {
    pinning::pin_chain_verify(net.pinning(), scs[0], as_bytes("not the secret"), 1);
    expect(false, "wrong secret located a pin");
  } catch (const ChainBrokenError& e) {
    expect(e.index() == 0, "wrong secret recovers nothing");
  }
}

void contest_vote(const std::filesystem::path&) {
  auto specs = trio();
  specs.push_back({"d.example", {{"d1", NodeMode::plaintext}}});
  auto net = netsim::make_fixture(specs);
  net.node("d1").policy().set("participation.masked", {"true"});
  auto sc = net.find_or_establish("a1", {"b.example", "c.example", "d.example"});
  net.guardian_pin_cycle("a1", sc, 1);
  produce(net, sc, 3);
  net.corrupt_next_pin(sc);
  produce(net, sc, 1);

  const auto& secret = net.meta(sc).secret;
  auto chain = pinning::pin_chain_verify(net.pinning(), sc, secret, 4);
  expect(chain[3].pin != keccak256(net.node("b1").runtime(sc).sealed.at(4)), "pin 3 is corrupt");
  auto proposal = net.contest("b1", sc, 3);
  expect(net.pinning().pin(chain[3].map_key)->status == pinning::PinStatus::contested, "entry contested");

  net.vote("a1", proposal, true);
  net.vote("b1", proposal, true);
  expect_error(ErrorCode::not_unmasked, [&] { net.vote("d1", proposal, true); }, "masked participant votes");
  net.unmask("d1", sc);
  net.vote("d1", proposal, true);
  mgmt_blocks(net, static_cast<int>(pinning::VotingConfig{}.period_blocks) + 1);
  expect(net.finalize("b1", proposal), "contest upheld");
  expect(net.pinning().pin(chain[3].map_key)->status == pinning::PinStatus::voted_invalid, "entry voted invalid");

  produce(net, sc, 1);
  auto repaired = pinning::pin_chain_verify(net.pinning(), sc, secret, 5);
  expect(repaired[4].previous_pin == repaired[2].pin, "re-chained from index 2");
}

void ciphertext_guardian(const std::filesystem::path&) {
  auto net = netsim::make_fixture(
      orgs({{"a", NodeMode::plaintext}, {"b", NodeMode::plaintext}, {"q", NodeMode::ciphertext_only}}));
  auto sc = net.find_or_establish("a1", {"b.example", "q.example"});
  net.guardian_pin_cycle("q1", sc, 1);
  net.submit("a1", "a1", sc, deploy_tx(addr(net, "a"), "deed", {{"owner", "confidential-owner"}}));
  produce(net, sc, 3);
  auto chain = pinning::pin_chain_verify(net.pinning(), sc, net.node("a1").runtime(sc).secret.value(), 3);
  for (std::size_t i = 0; i < 3; ++i) {
    expect(chain[i].pin == keccak256(net.node("a1").runtime(sc).sealed.at(i + 1)), "member recomputes pin");
  }
  expect(!contains(net.node("q1").storage_dump(), as_bytes("confidential-owner")), "guardian holds plaintext");
  expect_error(ErrorCode::permission_denied, [&] { net.node("q1").read("q1", sc, "deed", "owner"); },
               "ciphertext-only read");
}

void configuration(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  auto every2 = net.find_or_establish("a1", {"b.example"});
  auto every10 = net.find_or_establish("a1", {"c.example"});
  net.guardian_pin_cycle("a1", every2, 2);
  net.guardian_pin_cycle("a1", every10, 10);
  produce(net, every2, 5);
  produce(net, every10, 9);
  expect(net.node("a1").runtime(every2).pinning->posted.size() == 2, "every 2 over 5 blocks");
  expect(net.node("a1").runtime(every10).pinning->posted.empty(), "every 10 over 9 blocks");
  expect_error(ErrorCode::invalid_voting_config, [] { pinning::VotingConfig{0, 1, 2}.validate(); }, "zero period");
  expect_error(ErrorCode::invalid_voting_config, [] { pinning::VotingConfig{5, 3, 2}.validate(); }, "num > den");
}

void multiple_sidechains(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  auto ab = net.find_or_establish("a1", {"b.example"});
  auto ac = net.find_or_establish("a1", {"c.example"});
  net.guardian_pin_cycle("a1", ab, 1);
  net.guardian_pin_cycle("a1", ac, 1);
  net.submit("a1", "a1", ab, deploy_tx(addr(net, "a"), "c", {{"k", "one"}}));
  net.submit("a1", "a1", ac, deploy_tx(addr(net, "a"), "c", {{"k", "two"}}));
  produce(net, ab, 2);
  produce(net, ac, 2);
  expect(net.node("a1").read("a1", ab, "c", "k") == std::optional<std::string>("one"), "state of ab");
  expect(net.node("a1").read("a1", ac, "c", "k") == std::optional<std::string>("two"), "state of ac");
  expect(pinning::pin_chain_verify(net.pinning(), ab, net.meta(ab).secret, 2).size() == 2, "ab pins");
  expect(pinning::pin_chain_verify(net.pinning(), ac, net.meta(ac).secret, 2).size() == 2, "ac pins");
}

// ---- cross-chain reads and archiving ----

void anchored_read(const std::filesystem::path&) {
  auto net = netsim::make_fixture(trio());
  auto oracle = net.find_or_establish("b1", {"a.example"});
  auto purchase = net.find_or_establish("a1", {"c.example"});
  auto a = addr(net, "a");
  net.submit("b1", "b1", oracle, deploy_tx(addr(net, "b"), "fx", {{"aud-usd", "0.70"}}));
  net.produce_block(oracle);
  net.submit("a1", "a1", purchase, deploy_tx(a, "house"));
  net.produce_block(purchase);

  auto seen = net.cross_chain_read("a1", a, purchase, oracle, 1, "fx", "aud-usd", 5, "house", "rate");
  expect(seen == "0.70", "anchored value");
  net.submit("b1", "b1", oracle, put_tx(addr(net, "b"), "fx", "aud-usd", "0.75"));
  net.produce_block(oracle);
  net.produce_block(purchase);
  for (const char* id : {"a1", "c1"}) {
    expect(net.node(id).read(id, purchase, "house", "rate") == std::optional<std::string>("0.70"),
           std::string(id) + " agrees on the anchored read");
  }
  produce(net, oracle, 10);
  expect_error(ErrorCode::stale_block_reference,
               [&] { net.cross_chain_read("a1", a, purchase, oracle, 1, "fx", "aud-usd", 5, "house", "rate"); },
               "outside the recency window");
  expect_error(ErrorCode::unauthorized_reader,
               [&] {
                 net.cross_chain_read("a1", account("stranger"), purchase, oracle, 12, "fx", "aud-usd", 5, "house",
                                      "rate");
               },
               "reader not admitted by the target");
}

void archive_round_trip(const std::filesystem::path& work_dir) {
  auto net = netsim::make_fixture(trio());
  auto sc = net.find_or_establish("a1", {"b.example"});
  net.submit("a1", "a1", sc, deploy_tx(addr(net, "a"), "c", {{"k", "v"}}));
  auto path = work_dir / "archive-round-trip.epss";
  expect_error(ErrorCode::pending_transactions, [&] { net.node("b1").archive("b1", sc, path); }, "pending txs");
  net.produce_block(sc);
  auto root = net.meta(sc).roots.back();
  net.node("b1").archive("b1", sc, path);
  expect_error(ErrorCode::sidechain_archived, [&] { net.node("b1").read("b1", sc, "c", "k"); }, "archived read");
  net.node("b1").restore("b1", sc, path);
  expect(net.node("b1").state_at(sc, 1)->root() == root, "restored root");
  expect(net.node("b1").read("b1", sc, "c", "k") == std::optional<std::string>("v"), "restored value");
}

}  // namespace

const std::vector<SelfCheck>& selfchecks() {
  static const std::vector<SelfCheck> checks = {
      {"policy.api-call-permissioning", api_call_permissioning},
      {"policy.account-whitelist", account_whitelist},
      {"policy.tx-type-permissioning", tx_type_permissioning},
      {"state.aead-tamper-rejection", aead_tamper_rejection},
      {"state.cross-sidechain-key", cross_sidechain_key},
      {"era.multi-root-resolution", multi_root_resolution},
      {"establish.org-whitelist", org_whitelist},
      {"establish.org-blacklist", org_blacklist},
      {"establish.api-whitelist", api_whitelist},
      {"establish.api-blacklist", api_blacklist},
      {"establish.find-or-establish", find_or_establish},
      {"establish.sidechain-identifier", sidechain_identifier},
      {"pinning.chain-verify", chain_verify},
      {"pinning.participant-shielding", participant_shielding},
      {"pinning.rate-shielding", rate_shielding},
      {"pinning.contest-vote", contest_vote},
      {"pinning.ciphertext-guardian", ciphertext_guardian},
      {"pinning.configuration", configuration},
      {"pinning.multiple-sidechains", multiple_sidechains},
      {"crossread.anchored-read", anchored_read},
      {"archive.round-trip", archive_round_trip},
  };
  return checks;
}

SelfCheckOutcome run_selfchecks(const std::filesystem::path& work_dir) {
  std::filesystem::create_directories(work_dir);
  SelfCheckOutcome out;
  for (const auto& check : selfchecks()) {
    try {
      check.run(work_dir);
      out.results[check.id] = true;
    } catch (const std::exception& e) {
      out.results[check.id] = false;
      out.failures.push_back(check.id + ": " + e.what());
    }
  }
  return out;
}

}  // namespace eps::conformance
