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


#include "eps/conformance/catalogue.hpp"

#include <map>
#include <set>

#include "eps/error.hpp"

namespace eps::conformance {

std::string_view to_string(Level l) {
  switch (l) {
    case Level::must: return "MUST";
    case Level::must_not: return "MUST NOT";
    case Level::should: return "SHOULD";
    case Level::should_not: return "SHOULD NOT";
    case Level::may: return "MAY";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::covered: return "covered-by-tests";
    case Status::out_of_scope: return "out-of-scope";
    case Status::partial: return "partial";
  }
  return "?";
}

std::string_view family(std::string_view id) {
  if (id.starts_with("EE")) return "EE";
  if (id.starts_with("BC")) return "BC";
  if (id.starts_with("SC")) return "SC";
  fail(ErrorCode::missing_requirement, "unknown requirement family: " + std::string(id));
}

const std::vector<CatalogueId>& catalogue_ids() {
  static const std::vector<CatalogueId> ids = {
      {"EE-4.1a-DApp", Level::may},
      {"EE-4.3a-Tools", Level::must},
      {"EE-4.3b-FormalVerification", Level::should},
      {"EE-5.1.1a-StaticStartUp", Level::must},
      {"EE-5.1.1b-DisableDiscovery", Level::must},
      {"EE-5.1.1c-WhitelistNodes", Level::must},
      {"EE-5.1.1d-BlacklistNodes", Level::may},
      {"EE-5.1.1e-WhitelistViaAPI", Level::must},
      {"EE-5.1.1f-BlacklistViaAPI", Level::must},
      {"EE-5.1.1g-CertifyNodes", Level::must},
      {"EE-5.1.1h-Organization", Level::should},
      {"EE-5.1.2a-WhitelistParticipants", Level::must},
      {"EE-5.1.2b-BlacklistParticipants", Level::may},
      {"EE-5.1.2c-WhitelistParticipantsViaAPI", Level::must},
      {"EE-5.1.2d-BlacklistParticipantsViaAPI", Level::must},
      {"EE-5.1.2e-CertifyParticipants", Level::must},
      {"EE-5.1.2f-GroupsRoles", Level::must},
      {"EE-5.1.3a-SmartContractPermissioning", Level::should},
      {"EE-5.1.3b-RuntimeConfigUpdate", Level::should},
      {"EE-5.1.3c-ConfigOptions", Level::may},
      {"EE-5.1.3d-LocalKeyManagement", Level::may},
      {"EE-5.1.3e-SecureExternalKeyGenStore", Level::may},
      {"EE-5.1.3f-HardwareSecurityModules", Level::may},
      {"EE-5.2.1a-IntegrationLibraries", Level::may},
      {"EE-5.2.2a-EntDeployment", Level::should},
      {"EE-5.2.2b-EntFaultReporting", Level::should},
      {"EE-5.2.2c-EntPerformanceManage", Level::may},
      {"EE-5.2.2d-EntSecurity", Level::should},
      {"EE-5.2.2e-EntHistoricalAnalysis", Level::may},
      {"EE-5.2.2f-EntManagementSystems", Level::may},
      {"EE-5.3.1a-JsonRpcPublicEth", Level::must},
      {"EE-5.3.1b-JsonRpcTransactionAsyncExt", Level::must},
      {"EE-5.3.1c-JsonRpcUnimplemented", Level::must},
      {"EE-5.3.2a-InterChainInteraction", Level::may},
      {"EE-5.3.3a-Oracles", Level::should},
      {"EE-6.1.1a-OnChainSecurity", Level::should},
      {"EE-6.1.2a-PrivTransMethods", Level::must},
      {"EE-6.1.2b-RestrictedPayloadMaskingStored", Level::must},
      {"EE-6.1.2c-RestrictedPayloadMaskingTransit", Level::must},
      {"EE-6.1.2d-RestrictedMetadataMaskingStored", Level::may},
      {"EE-6.1.2e-RestrictedMetadataMaskingTransit", Level::may},
      {"EE-6.1.2f-RestrictedPayloadRelayStore", Level::must_not},
      {"EE-6.1.2g-RestrictedMetadataRelayStore", Level::should_not},
      {"EE-6.1.2h-RestrictedDefaultSecure", Level::must},
      {"EE-6.1.2i-UnrestrictedRecipientMasking", Level::should},
      {"EE-6.1.2j-UnrestrictedSenderMasking", Level::should},
      {"EE-6.1.2k-UnrestrictedPayloadMaskingStored", Level::should},
      {"EE-6.1.2l-UnrestrictedPayloadMaskingTransit", Level::must},
      {"EE-6.1.2m-UnrestrictedMetadataMaskingStored", Level::may},
      {"EE-6.1.2n-UnrestrictedMetadataMaskingTransit", Level::may},
      {"EE-6.1.2o-UnrestrictedPayloadRelayStore", Level::may},
      {"EE-6.1.2p-UnrestrictedMetadataRelayStore", Level::may},
      {"EE-6.1.2q-UnrestrictedTransactions", Level::must},
      {"EE-6.1.2r-PrivateTransactionAddParticipants", Level::should},
      {"EE-6.1.2s-PrivateTransactionConsensus", Level::should},
      {"EE-6.1.3a-OffchainTrustedExecution", Level::should},
      {"EE-6.2.1a-ImprovedOnchainProcessing", Level::should},
      {"EE-6.2.2a-OffchainProcessing", Level::should},
      {"EE-6.2.3a-ArchivePrivateState", Level::should},
      {"EE-6.2.3b-ComputePowerSizeParticipants", Level::should},
      {"EE-6.2.3c-RecentBlockAccessTime", Level::should},
      {"EE-6.2.3d-NewGenesisBlock", Level::should},
      {"EE-7.1a-StoragePubEth", Level::should},
      {"EE-7.1b-StorageForOptionalOffchain", Level::may},
      {"EE-7.1c-SeparateStoragePerNetwork", Level::must},
      {"EE-7.1d-DataAccessSameParticipants", Level::should},
      {"EE-7.1e-DataAccessDifferentParticipants", Level::must_not},
      {"EE-7.1f-FileDecentralizedStorage", Level::should},
      {"EE-7.2a-EvmOpCodes", Level::must},
      {"EE-7.2b-EvmExtendedOpCodes", Level::may},
      {"EE-7.2c-PublicStateSync", Level::should},
      {"EE-7.2d-PrecompiledContracts", Level::may},
      {"EE-7.2e-TEE", Level::should},
      {"EE-7.2f-TEEConfigurableEncryption", Level::should},
      {"EE-7.2.1a-Finality", Level::should},
      {"EE-7.3a-MainNetConsensus", Level::should},
      {"EE-7.3b-MultipleConsensusAlgorithms", Level::must},
      {"EE-7.3c-PrivateConsensusAlg", Level::should},
      {"EE-7.3d-MainNetConsensusAlg", Level::should},
      {"EE-7.3e-SidechainConsensusAlg", Level::may},
      {"EE-7.3f-ConsensusAlgDocumented", Level::must},
      {"EE-7.3g-ConsensusAlgModularConf", Level::should},
      {"EE-7.3h-ConsensusInOutOfBand", Level::may},
      {"EE-7.3i-ConsensusIBFT", Level::should},
      {"EE-7.3j-ConsensusOther", Level::may},
      {"EE-7.3k-ConsensusConfig", Level::must},
      {"EE-8.1a-Enode", Level::must},
      {"EE-8.1b-DevP2P", Level::should},
      {"EE-8.1c-Eth62Eth63", Level::should},
      {"EE-8.1d-NewProtocols", Level::may},
      {"EE-8.1e-RelayNodes", Level::should},
      {"EE-9a-AntiSpam", Level::should},
      {"EE-10a-PublicEthCompatibility", Level::should},
      {"EE-10b-ExtendedApisSuperset", Level::may},
      {"EE-11a-FastSync", Level::should},
      {"EE-11b-BackupRestore", Level::should},

      {"BC-1a-ApiCallPermissioning", Level::should},
      {"BC-1b-EthereumAccountWhitelist", Level::should},
      {"BC1c-TransactionTypePermissioning", Level::should},
      {"BC-1d-PrivateStateAuthenticatedEncryption", Level::must},
      {"BC-2a-OrganisationallyAwareConsensus", Level::should},
      {"BC-3a-DiscoverableBootstrapInfo", Level::should},
      {"BC-4a-ArchitecturalDecentralisation", Level::should},
      {"BC-4b-PoliticalDecentralisation", Level::should},
      {"BC-5a-OffchainOrgToOrg", Level::should},
      {"BC-5b-OffchainAll", Level::should},
      {"BC-5c-OffchianAntiSpam", Level::must},
      {"BC-5d-Whisper", Level::should},

      {"SC-1a-EstablishmentNodesWhitelist", Level::must},
      {"SC-1b-EstablishmentNodesBlacklist", Level::may},
      {"SC-2a-EstablishmentApiWhitelist", Level::must},
      {"SC-2b-EstablishmentApiBlacklist", Level::may},
      {"SC-3a-SidechainFindOrEstablishmentApi", Level::must},
      {"SC-3b-SidechainIdentifier", Level::must},
      {"SC-4a-Pinning", Level::must},
      {"SC-4b-PinningParticipantShielding", Level::should},
      {"SC-4c-PinningTransactionRateShielding", Level::should},
      {"SC-4d-PinningContesting", Level::must},
      {"SC-4e-PinningCipherTextObservers", Level::may},
      {"SC-4f-PinningConfiguration", Level::should},
      {"SC-4g-MultipleSidechains", Level::must},
      {"SC-5a-DataAccessDifferentParticipants", Level::should},
      {"SC-6a-SidechainArchive", Level::may},
  };
  return ids;
}

namespace {

struct Claim {
  Status status;
  std::vector<std::string> tests;
  std::string rationale;
};

const std::map<std::string_view, Claim>& claims() {
  static const std::string kNoTransport =
      "needs real devP2P / Whisper off-chain messaging; the simulator has an in-process queue only";
  static const std::map<std::string_view, Claim> c = {
      {"BC-1a-ApiCallPermissioning", {Status::covered, {"policy.api-call-permissioning"}, ""}},
      {"BC-1b-EthereumAccountWhitelist", {Status::covered, {"policy.account-whitelist"}, ""}},
      {"BC1c-TransactionTypePermissioning", {Status::covered, {"policy.tx-type-permissioning"}, ""}},
      {"BC-1d-PrivateStateAuthenticatedEncryption",
       {Status::covered, {"state.aead-tamper-rejection", "state.cross-sidechain-key"}, ""}},
      {"BC-2a-OrganisationallyAwareConsensus",
       {Status::out_of_scope, {},
        "organisation-aware consensus is not implemented; sidechain blocks use a round-robin proposer acknowledged by every reachable member"}},
      {"BC-3a-DiscoverableBootstrapInfo", {Status::covered, {"era.multi-root-resolution"}, ""}},
      {"BC-4a-ArchitecturalDecentralisation",
       {Status::out_of_scope, {}, "property of a real deployment; one simulator process cannot exhibit it"}},
      {"BC-4b-PoliticalDecentralisation",
       {Status::out_of_scope, {}, "concerns governance of deployed networks rather than client behaviour"}},
      {"BC-5a-OffchainOrgToOrg", {Status::out_of_scope, {}, kNoTransport}},
      {"BC-5b-OffchainAll", {Status::out_of_scope, {}, kNoTransport}},
      {"BC-5c-OffchianAntiSpam", {Status::out_of_scope, {}, kNoTransport}},
      {"BC-5d-Whisper", {Status::out_of_scope, {}, kNoTransport}},

      {"SC-1a-EstablishmentNodesWhitelist", {Status::covered, {"establish.org-whitelist"}, ""}},
      {"SC-1b-EstablishmentNodesBlacklist", {Status::covered, {"establish.org-blacklist"}, ""}},
      {"SC-2a-EstablishmentApiWhitelist", {Status::covered, {"establish.api-whitelist"}, ""}},
      {"SC-2b-EstablishmentApiBlacklist", {Status::covered, {"establish.api-blacklist"}, ""}},
      {"SC-3a-SidechainFindOrEstablishmentApi", {Status::covered, {"establish.find-or-establish"}, ""}},
      {"SC-3b-SidechainIdentifier", {Status::covered, {"establish.sidechain-identifier"}, ""}},
      {"SC-4a-Pinning", {Status::covered, {"pinning.chain-verify"}, ""}},
      {"SC-4b-PinningParticipantShielding", {Status::covered, {"pinning.participant-shielding"}, ""}},
      {"SC-4c-PinningTransactionRateShielding", {Status::covered, {"pinning.rate-shielding"}, ""}},
      {"SC-4d-PinningContesting", {Status::covered, {"pinning.contest-vote"}, ""}},
      {"SC-4e-PinningCipherTextObservers", {Status::covered, {"pinning.ciphertext-guardian"}, ""}},
      {"SC-4f-PinningConfiguration", {Status::covered, {"pinning.configuration"}, ""}},
      {"SC-4g-MultipleSidechains", {Status::covered, {"pinning.multiple-sidechains"}, ""}},
      {"SC-5a-DataAccessDifferentParticipants",
       {Status::partial, {"crossread.anchored-read"},
        "block-anchored reads of another sidechain only; inter-sidechain writes are not implemented"}},
      {"SC-6a-SidechainArchive", {Status::covered, {"archive.round-trip"}, ""}},

      {"EE-7.1c-SeparateStoragePerNetwork",
       {Status::partial, {"state.cross-sidechain-key"},
        "per-sidechain keys and state files; there is no storage engine to separate"}},
      {"EE-6.2.3a-ArchivePrivateState",
       {Status::partial, {"archive.round-trip"}, "whole-sidechain archive only, no per-contract archiving"}},
      {"EE-5.1.3f-HardwareSecurityModules", {Status::out_of_scope, {}, "no HSM integration; keys live in memory"}},
      {"EE-5.3.1a-JsonRpcPublicEth", {Status::out_of_scope, {}, "no JSON-RPC surface; the API is a C++ library"}},
      {"EE-5.3.1b-JsonRpcTransactionAsyncExt",
       {Status::out_of_scope, {}, "no JSON-RPC surface; the API is a C++ library"}},
      {"EE-5.3.1c-JsonRpcUnimplemented", {Status::out_of_scope, {}, "no JSON-RPC surface; the API is a C++ library"}},
      {"EE-7.2a-EvmOpCodes", {Status::out_of_scope, {}, "contracts are key-value stores, not EVM bytecode"}},
      {"EE-7.3i-ConsensusIBFT", {Status::out_of_scope, {}, "consensus is a simplified deterministic ordering"}},
      {"EE-8.1a-Enode", {Status::out_of_scope, {}, "enode values are opaque node ids in the simulator"}},
      {"EE-8.1b-DevP2P", {Status::out_of_scope, {}, kNoTransport}},
      {"EE-11a-FastSync", {Status::out_of_scope, {}, "catch-up replays blocks; no fast sync"}},
  };
  return c;
}

}  // namespace

Registry default_registry() {
  Registry out;
  out.reserve(catalogue_ids().size());
  for (const auto& c : catalogue_ids()) {
    RequirementEntry e;
    e.id = std::string(c.id);
    e.level = c.level;
    auto it = claims().find(c.id);
    if (it != claims().end()) {
      e.status = it->second.status;
      e.test_ids = it->second.tests;
      e.rationale = it->second.rationale;
    } else {
      e.rationale = "enterprise client capability not modelled by this simulator";
    }
    out.push_back(std::move(e));
  }
  return out;
}

void validate_registry(const Registry& registry) {
  std::map<std::string, int> seen;
  for (const auto& e : registry) ++seen[e.id];
  for (const auto& c : catalogue_ids()) {
    auto it = seen.find(std::string(c.id));
    if (it == seen.end()) fail(ErrorCode::missing_requirement, "no registry entry for " + std::string(c.id));
    if (it->second != 1) fail(ErrorCode::missing_requirement, std::string(c.id) + " listed more than once");
  }
  for (const auto& e : registry) {
    if (e.status != Status::covered && e.rationale.empty()) {
      fail(ErrorCode::configuration, e.id + " is " + std::string(to_string(e.status)) + " without a rationale");
    }
    if (e.status != Status::out_of_scope && e.test_ids.empty()) {
      fail(ErrorCode::configuration, e.id + " claims coverage but names no tests");
    }
  }
}

}  // namespace eps::conformance
