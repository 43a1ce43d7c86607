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


#include "eps/netsim/fixture.hpp"

namespace eps::netsim {

SimNetwork make_fixture(const std::vector<FixtureOrg>& orgs, const FixtureOptions& options) {
  NetworkConfig config;
  config.seed = options.seed;
  config.voting = options.voting;
  SimNetwork net(config);
  auto root = net.deploy_root_era("root");
  net.set_trusted_roots({root});

  for (const auto& o : orgs) {
    net.add_org(o.domain);
    std::string enode;
    for (const auto& n : o.nodes) {
      net.add_node(o.domain, n.id, n.mode);
      enode += (enode.empty() ? "" : ",") + n.id;
    }
    net.orginfo_put(o.domain, era::kEnodeName, as_bytes(enode));
    net.era_list(root, registrar_address("root"), o.domain, std::nullopt, net.ensure_orginfo(o.domain));
  }

  if (options.mutual_trust) {
    for (const auto& o : orgs) {
      for (const auto& n : o.nodes) {
        auto& policy = net.node(n.id).policy();
        for (const auto& other : orgs) {
          policy.establish_whitelist.insert(other.domain);
          policy.account_whitelist.insert(net.org(other.domain).address);
          for (const auto& peer : other.nodes) policy.establish_api_whitelist.insert(peer.id);
        }
      }
    }
  }
  return net;
}

}  // namespace eps::netsim
