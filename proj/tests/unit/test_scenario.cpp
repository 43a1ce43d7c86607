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


#include <doctest.h>

#include <filesystem>

#include "eps/io.hpp"
#include "eps/scenario/runner.hpp"

using namespace eps;
using namespace eps::scenario;

namespace {

const char* kPair = R"(org a.example
node a.example a1
org b.example
node b.example b1
era-root r1
era-list r1 a.example orginfo
era-list r1 b.example orginfo
orginfo a.example org.ethereum.enode a1
orginfo b.example org.ethereum.enode b1
policy b1 establish.orgs.whitelist a.example
policy b1 establish.api.whitelist b1, a1
)";

ErrorCode parse_code(const std::string& text, std::string* message = nullptr) {
  try {
    ScenarioScript::parse(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("parsed");
  return ErrorCode::malformed_input;
}

RunResult run(const std::string& text, std::string_view dir, bool report = false) {
  RunOptions opts;
  opts.out_dir = std::filesystem::temp_directory_path() / "eps-unit-scenario" / dir;
  std::filesystem::remove_all(opts.out_dir);
  opts.seed = 11;
  opts.write_report = report;
  return run_scenario(ScenarioScript::parse(text), opts);
}

}  // namespace

TEST_CASE("statements are tokenized with line numbers") {
  auto s = ScenarioScript::parse("# comment\n\norg a.example   # trailing\nnode a.example a1 ciphertext-only\n");
  REQUIRE(s.statements.size() == 2);
  CHECK(s.statements[0].line == 3);
  CHECK(s.statements[0].verb == "org");
  CHECK(s.statements[0].args == std::vector<std::string>{"a.example"});
  CHECK(s.statements[1].args.back() == "ciphertext-only");
}

TEST_CASE("expect-error prefix") {
  auto s = ScenarioScript::parse(std::string(kPair) + "establish a1 b.example -> s1\n"
                                                      "expect-error stale-block-reference cross-read s1 a1 s1 9 c/k 1\n");
  CHECK(s.statements.back().expect == ErrorCode::stale_block_reference);
  CHECK(s.statements.back().verb == "cross-read");
  CHECK(parse_code("expect-error no-such-code org a.example\n") == ErrorCode::parse_error);
}

TEST_CASE("parse errors name the line") {
  std::string msg;
  CHECK(parse_code("org a.example\nnode b.example b1\n", &msg) == ErrorCode::parse_error);
  CHECK(msg.find("line 2") != std::string::npos);
  CHECK(msg.find("not declared on an earlier line") != std::string::npos);

  CHECK(parse_code("org Bad_Domain\n", &msg) == ErrorCode::invalid_domain);
  CHECK(msg.find("line 1") != std::string::npos);
  CHECK(parse_code("frobnicate x\n") == ErrorCode::parse_error);
  CHECK(parse_code("org\n") == ErrorCode::parse_error);
  CHECK(parse_code(std::string(kPair) + "establish a1 b.example -> s1\nproduce-blocks s1 many\n") ==
        ErrorCode::parse_error);
  CHECK(parse_code(std::string(kPair) + "establish a1 b.example -> s1\nvote a1 p1 yes\n") == ErrorCode::parse_error);
  CHECK(parse_code(std::string(kPair) + "assert-root mgmt 1234\n") == ErrorCode::parse_error);
}

TEST_CASE("bindings inside expect-error are not declared") {
  auto base = std::string(kPair) + "establish a1 b.example -> s1\n";
  CHECK(parse_code(base + "expect-error voting-open propose a1 s1 add-org a.example -> p\nvote a1 p yes\n") ==
        ErrorCode::parse_error);
}

TEST_CASE("a small scenario runs and writes its outputs") {
  auto text = std::string(kPair) +
              "establish a1 b.example -> s1\n"
              "pin s1 b1 every 1\n"
              "deploy s1 a1 deed owner=a.example\n"
              "produce-blocks s1 1\n"
              "tx s1 b1 @b.example put deed owner b.example\n"
              "produce-blocks s1 1\n"
              "assert-state s1 deed owner b.example\n"
              "assert-pins s1 2\n"
              "expect-error permission-denied tx s1 a1 0000000000000000000000000000000000000001 put deed owner x\n"
              "archive s1 a1 s1.epss\n";
  auto r = run(text, "small");
  INFO(r.message);
  CHECK(r.exit_code == kExitOk);
  auto dir = std::filesystem::temp_directory_path() / "eps-unit-scenario" / "small";
  for (const char* f : {"trace.log", "roots.txt", "sidechains.txt", "mgmt.epsl", "s1.epss"}) {
    CHECK(std::filesystem::exists(dir / f));
  }
  auto roots = to_string(read_file(dir / "roots.txt"));
  CHECK(roots.rfind("mgmt block=", 0) == 0);
  CHECK(roots.find("root=" + r.mgmt_root.hex()) != std::string::npos);

  auto again = run(text, "small-again");
  CHECK(again.mgmt_root == r.mgmt_root);
  CHECK(again.trace == r.trace);
}

TEST_CASE("failed assertions and unmet expectations exit 1") {
  auto base = std::string(kPair) + "establish a1 b.example -> s1\ndeploy s1 a1 c k=v\nproduce-blocks s1 1\n";
  auto wrong = run(base + "assert-state s1 c k w\n", "wrong");
  CHECK(wrong.exit_code == kExitAssertion);
  CHECK(wrong.message.find("line 15") != std::string::npos);
  CHECK(wrong.message.find("assertion-failed") != std::string::npos);

  auto unmet = run(base + "expect-error permission-denied tx s1 a1 @a.example put c k w\n", "unmet");
  CHECK(unmet.exit_code == kExitAssertion);

  auto other = run(base + "expect-error guard-failed tx s1 a1 0000000000000000000000000000000000000001 put c k w\n",
                   "other");
  CHECK(other.exit_code == kExitAssertion);

  auto pins = run(base + "assert-pins s1 1\n", "pins");
  CHECK(pins.exit_code == kExitAssertion);
}

TEST_CASE("missing script file is a parse failure") {
  RunOptions opts;
  opts.out_dir = std::filesystem::temp_directory_path() / "eps-unit-scenario" / "missing";
  auto r = run_scenario_file("/nonexistent/script.eps", opts);
  CHECK(r.exit_code != kExitOk);
}
