// Copyright 2026 The cra Authors
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

#include <sstream>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "cra/cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "cra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cra::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("equiv reports equal commands") {
  CHECK(call({"equiv", "skip || chaos", "chaos", "--states", "2", "--bound", "2"}).code == 0);
  const Result r = call({"equiv", "tau", "bot"});
  CHECK(r.code == 1);
  CHECK(r.out.find("differ") != std::string::npos);
}

TEST_CASE("check decides refinement") {
  CHECK(call({"check", "rely{(0,0),(1,1)}", "refines", "rely{}"}).code == 1);
  CHECK(call({"check", "rely{}", "refines", "rely{(0,0),(1,1)}"}).code == 0);
  CHECK(call({"check", "tau", "is", "tau"}).code == 2);
}

TEST_CASE("parse and validation errors are usage errors") {
  const Result r = call({"equiv", "tau ;", "tau"});
  CHECK(r.code == 2);
  CHECK(r.err.find("1:") != std::string::npos);
  CHECK(call({"trace-count", "pgm{(0,2)}"}).code == 2);
  CHECK(call({"trace-count", "pow(tau, 4)", "--bound", "3"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
}

TEST_CASE("trace-count prints the denotation size") {
  const Result r = call({"trace-count", "top", "--bound", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "30\n");
}

TEST_CASE("expand prints expanded forms") {
  const Result r = call({"expand", "assert{0} ; pgm{(0,1)}", "--depth", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("abort: {1}") != std::string::npos);
  CHECK(r.out.find("pi(0,1) -> tau") != std::string::npos);
}

TEST_CASE("laws emits JSON reports") {
  const Result r = call({"laws", "--law", "guar_par", "--trials", "5", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["law"] == "guar_par");
  CHECK(j[0]["trials"] == 5);
  CHECK(call({"laws", "--law", "skip_refines_chaos", "--trials", "2"}).code == 1);
  CHECK(call({"laws", "--law", "nonexistent"}).code == 2);
  CHECK(call({"laws", "--family", "atomics", "--trials", "5"}).code == 0);
  CHECK(call({"laws", "--family", "molecules"}).code == 2);
}

TEST_CASE("full suite JSON is byte-identical across runs") {
  const std::vector<std::string> args = {"laws", "--trials", "5", "--seed", "3", "--json"};
  const Result a = call(args), b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
