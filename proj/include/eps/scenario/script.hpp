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


#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eps/error.hpp"

namespace eps::scenario {

/// One script line, tokenized. `expect` is set for lines written as
/// `expect-error <code> <statement>`.
struct Statement {
  std::size_t line = 0;
  std::string verb;
  std::vector<std::string> args;
  std::optional<ErrorCode> expect;
  std::string text;
};

/// Line-oriented scenario. Declarations:
///
///   org <domain>
///   node <org> <nodeId> [ciphertext-only]
///   era-root <label>                     (also trusted, in declaration order)
///   era-delegate <org>                   (org operates its own delegate ERA)
///   era-list <era> <domain> orginfo [<org>]
///   era-list <era> <domain> delegate <org>
///   orginfo <org> <name> <value>
///   policy <node> <key> <value-list>
///   trust <label>...
///
/// `<era>` is a root label or an org that declared a delegate ERA. Actions:
///
///   establish <node> <domain>+ -> <alias>
///   deploy <alias> <node> <contract> [key=value]...
///   tx <alias> <node> <sender> put <contract> <key> <value>
///   tx <alias> <node> <sender> guarded-put <contract> <key> <expected> <value>
///   tx <alias> <node> <sender> deploy <contract> [key=value]...
///   cross-read <alias> <node> <target-alias> <block> <contract>/<key>[:<contract>/<key>] <window>
///   pin <alias> <guardianNode> every <n>
///   corrupt-pin <alias>
///   contest <node> <alias> <pin-index> [-> <name>]
///   propose <node> <alias> add-org <domain> [-> <name>]
///   vote <node> <proposal> <yes|no>
///   finalize <node> <proposal>
///   unmask <node> <alias>
///   add-node <alias> <node>
///   offline <node> / online <node>
///   produce-blocks <alias|mgmt> <n>
///   assert-root <alias|mgmt> <hex32>
///   assert-state <alias> <contract> <key> <value>
///   assert-pins <alias> <count>
///   archive <alias> <node> <path> / restore <alias> <node> <path>
///
/// `<sender>` is a lowercase hex20 address or `@<org>` for that org's
/// address. `<proposal>` is a name bound with `->` or a numeric id. '#'
/// starts a comment.
struct ScenarioScript {
  std::vector<Statement> statements;

  /// Throws parse-error (or invalid-domain) naming the line, including for
  /// references to entities not declared on an earlier line.
  static ScenarioScript parse(std::string_view text);
  static ScenarioScript load(const std::filesystem::path& path);
};

}  // namespace eps::scenario
