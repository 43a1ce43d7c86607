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


#include "eps/scenario/script.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "eps/era/domain.hpp"
#include "eps/io.hpp"

namespace eps::scenario {
namespace {

[[noreturn]] void bad(const Statement& s, const std::string& msg) {
  fail(ErrorCode::parse_error, "line " + std::to_string(s.line) + ": " + msg);
}

bool is_uint(std::string_view t) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  return !t.empty() && ec == std::errc() && p == t.data() + t.size();
}

bool is_lower_hex(std::string_view t, std::size_t len) {
  if (t.size() != len) return false;
  for (char c : t) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    auto start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

class Checker {
 public:
  void check(Statement& s, bool bind) {
    const auto& a = s.args;
    const auto& v = s.verb;
    if (v == "org") {
      arity(s, 1, 1);
      auto d = domain(s, a[0]);
      if (!orgs_.insert(d).second) bad(s, "organisation " + d + " declared twice");
    } else if (v == "node") {
      arity(s, 2, 3);
      need(s, orgs_, a[0], "organisation");
      if (a.size() == 3 && a[2] != "ciphertext-only") bad(s, "expected 'ciphertext-only', got '" + a[2] + "'");
      if (!nodes_.insert(a[1]).second) bad(s, "node " + a[1] + " declared twice");
    } else if (v == "era-root") {
      arity(s, 1, 1);
      if (!roots_.insert(a[0]).second) bad(s, "root ERA " + a[0] + " declared twice");
    } else if (v == "era-delegate") {
      arity(s, 1, 1);
      need(s, orgs_, a[0], "organisation");
      delegates_.insert(a[0]);
    } else if (v == "era-list") {
      arity(s, 3, 4);
      if (!roots_.contains(a[0]) && !delegates_.contains(a[0])) bad(s, "unknown ERA '" + a[0] + "'");
      domain(s, a[1]);
      if (a[2] == "orginfo") {
        need(s, orgs_, a.size() == 4 ? a[3] : a[1], "organisation");
      } else if (a[2] == "delegate") {
        if (a.size() != 4) bad(s, "era-list ... delegate needs the delegate's organisation");
        need(s, delegates_, a[3], "delegate ERA");
      } else {
        bad(s, "expected 'orginfo' or 'delegate', got '" + a[2] + "'");
      }
    } else if (v == "orginfo") {
      arity(s, 3, 3);
      need(s, orgs_, a[0], "organisation");
    } else if (v == "policy") {
      arity(s, 2, SIZE_MAX);
      need(s, nodes_, a[0], "node");
    } else if (v == "trust") {
      arity(s, 1, SIZE_MAX);
      for (const auto& r : a) need(s, roots_, r, "root ERA");
    } else if (v == "establish") {
      arity(s, 4, SIZE_MAX);
      need(s, nodes_, a[0], "node");
      if (a[a.size() - 2] != "->") bad(s, "establish must end with '-> <alias>'");
      for (std::size_t i = 1; i + 2 < a.size(); ++i) domain(s, a[i]);
      if (bind && !aliases_.insert(a.back()).second) bad(s, "alias " + a.back() + " declared twice");
    } else if (v == "deploy") {
      arity(s, 3, SIZE_MAX);
      alias_node(s, a[0], a[1]);
      pairs(s, 3);
    } else if (v == "tx") {
      arity(s, 5, SIZE_MAX);
      alias_node(s, a[0], a[1]);
      sender(s, a[2]);
      if (a[3] == "put") {
        arity(s, 7, 7);
      } else if (a[3] == "guarded-put") {
        arity(s, 8, 8);
      } else if (a[3] == "deploy") {
        pairs(s, 5);
      } else {
        bad(s, "unknown tx op '" + a[3] + "'");
      }
    } else if (v == "cross-read") {
      arity(s, 6, 6);
      alias_node(s, a[0], a[1]);
      need(s, aliases_, a[2], "sidechain alias");
      number(s, a[3]);
      query(s, a[4]);
      number(s, a[5]);
    } else if (v == "pin") {
      arity(s, 4, 4);
      alias_node(s, a[0], a[1]);
      if (a[2] != "every") bad(s, "expected 'every'");
      if (number(s, a[3]) == 0) bad(s, "pin interval must be at least 1");
    } else if (v == "corrupt-pin") {
      arity(s, 1, 1);
      need(s, aliases_, a[0], "sidechain alias");
    } else if (v == "contest") {
      arity(s, 3, 5);
      alias_node(s, a[1], a[0]);
      number(s, a[2]);
      binding(s, 3, bind);
    } else if (v == "propose") {
      arity(s, 4, 6);
      alias_node(s, a[1], a[0]);
      if (a[2] != "add-org") bad(s, "unknown proposal kind '" + a[2] + "'");
      need(s, orgs_, a[3], "organisation");
      binding(s, 4, bind);
    } else if (v == "vote") {
      arity(s, 3, 3);
      need(s, nodes_, a[0], "node");
      proposal(s, a[1]);
      if (a[2] != "yes" && a[2] != "no") bad(s, "vote must be yes or no");
    } else if (v == "finalize") {
      arity(s, 2, 2);
      need(s, nodes_, a[0], "node");
      proposal(s, a[1]);
    } else if (v == "unmask" || v == "add-node") {
      arity(s, 2, 2);
      if (v == "unmask") {
        alias_node(s, a[1], a[0]);
      } else {
        alias_node(s, a[0], a[1]);
      }
    } else if (v == "offline" || v == "online") {
      arity(s, 1, 1);
      need(s, nodes_, a[0], "node");
    } else if (v == "produce-blocks") {
      arity(s, 2, 2);
      chain(s, a[0]);
      number(s, a[1]);
    } else if (v == "assert-root") {
      arity(s, 2, 2);
      chain(s, a[0]);
      if (!is_lower_hex(a[1], 64)) bad(s, "expected a lowercase 32-byte hex root");
    } else if (v == "assert-state") {
      arity(s, 4, 4);
      need(s, aliases_, a[0], "sidechain alias");
    } else if (v == "assert-pins") {
      arity(s, 2, 2);
      need(s, aliases_, a[0], "sidechain alias");
      number(s, a[1]);
    } else if (v == "archive" || v == "restore") {
      arity(s, 3, 3);
      alias_node(s, a[0], a[1]);
    } else {
      bad(s, "unknown statement '" + v + "'");
    }
  }

 private:
  static void arity(const Statement& s, std::size_t lo, std::size_t hi) {
    if (s.args.size() < lo || s.args.size() > hi) bad(s, "wrong number of arguments to " + s.verb);
  }
  static void need(const Statement& s, const std::set<std::string>& set, const std::string& name,
                   const std::string& what) {
    if (!set.contains(name)) bad(s, what + " '" + name + "' is not declared on an earlier line");
  }
  static std::string domain(const Statement& s, const std::string& text) {
    try {
      return era::DomainName::parse(text).text();
    } catch (const Error& e) {
      fail(ErrorCode::invalid_domain, "line " + std::to_string(s.line) + ": " + e.what());
    }
  }
  static std::uint64_t number(const Statement& s, const std::string& t) {
    if (!is_uint(t)) bad(s, "expected a non-negative integer, got '" + t + "'");
    return std::stoull(t);
  }
  static void pairs(const Statement& s, std::size_t from) {
    for (std::size_t i = from; i < s.args.size(); ++i) {
      if (s.args[i].find('=') == std::string::npos) bad(s, "expected key=value, got '" + s.args[i] + "'");
    }
  }
  static void query(const Statement& s, const std::string& q) {
    auto ok = [](std::string_view part) {
      auto slash = part.find('/');
      return slash != std::string_view::npos && slash > 0 && slash + 1 < part.size();
    };
    auto colon = q.find(':');
    std::string_view view(q);
    if (!ok(view.substr(0, colon)) || (colon != std::string::npos && !ok(view.substr(colon + 1)))) {
      bad(s, "query must be <contract>/<key>[:<contract>/<key>]");
    }
  }
  void alias_node(const Statement& s, const std::string& alias, const std::string& node) const {
    need(s, aliases_, alias, "sidechain alias");
    need(s, nodes_, node, "node");
  }
  void sender(const Statement& s, const std::string& t) const {
    if (t.starts_with("@")) {
      need(s, orgs_, t.substr(1), "organisation");
    } else if (!is_lower_hex(t, 40)) {
      bad(s, "sender must be a lowercase hex20 address or @<org>");
    }
  }
  void chain(const Statement& s, const std::string& t) const {
    if (t != "mgmt") need(s, aliases_, t, "sidechain alias");
  }
  void proposal(const Statement& s, const std::string& t) const {
    if (!is_uint(t)) need(s, proposals_, t, "proposal");
  }
  void binding(const Statement& s, std::size_t at, bool bind) {
    if (s.args.size() == at) return;
    if (s.args.size() != at + 2 || s.args[at] != "->") bad(s, "expected '-> <name>'");
    if (bind && !proposals_.insert(s.args[at + 1]).second) bad(s, "proposal " + s.args[at + 1] + " declared twice");
  }

  std::set<std::string> orgs_, nodes_, roots_, delegates_, aliases_, proposals_;
};

}  // namespace

ScenarioScript ScenarioScript::parse(std::string_view text) {
  ScenarioScript script;
  Checker checker;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    Statement s;
    s.line = n;
    s.text = line;
    std::size_t at = 0;
    if (tokens[0] == "expect-error") {
      if (tokens.size() < 3) bad(s, "expect-error needs an error code and a statement");
      s.expect = parse_error_code(tokens[1]);
      if (!s.expect) bad(s, "unknown error code '" + tokens[1] + "'");
      at = 2;
    }
    s.verb = tokens[at];
    s.args.assign(tokens.begin() + static_cast<std::ptrdiff_t>(at) + 1, tokens.end());
    checker.check(s, !s.expect.has_value());
    script.statements.push_back(std::move(s));
  }
  return script;
}

ScenarioScript ScenarioScript::load(const std::filesystem::path& path) {
  auto bytes = read_file(path);
  return parse(to_string(bytes));
}

}  // namespace eps::scenario
