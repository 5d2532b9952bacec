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


#include "cra/cli.hpp"

#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cra/dsl.hpp"
#include "cra/expansion.hpp"
#include "cra/laws.hpp"
#include "cra/trace_model.hpp"

namespace cra {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  unsigned states = 2;
  unsigned bound = 3;
  unsigned trials = 50;
  std::uint64_t seed = 42;
  bool json = false;
};

int check_cmd(const std::vector<std::string>& args, const Globals& g, std::ostream& out,
              std::ostream& err) {
  if (args.size() != 3 || args[1] != "refines") {
    err << "usage: check C refines D\n";
    return kUsage;
  }
  const ModelCfg cfg(StateSpace(g.states), g.bound);
  const DslOptions opts{g.bound};
  const Command c = parse_dsl(args[0], cfg.space, opts);
  const Command d = parse_dsl(args[2], cfg.space, opts);
  const TraceSet dc = denote(c, cfg), dd = denote(d, cfg);
  if (auto w = first_missing(dc, dd)) {
    out << "fails: " << render_trace(*w) << " is a trace of D but not of C\n";
    return kFail;
  }
  out << "holds\n";
  return kPass;
}

int equiv_cmd(const std::string& a, const std::string& b, const Globals& g, std::ostream& out) {
  const ModelCfg cfg(StateSpace(g.states), g.bound);
  const DslOptions opts{g.bound};
  const CrossCheck r = cross_check(parse_dsl(a, cfg.space, opts), parse_dsl(b, cfg.space, opts), cfg);
  if (!r.agree()) out << "warning: expansion engine disagrees with the trace model\n";
  if (r.oracle) {
    out << "equivalent\n";
    return kPass;
  }
  out << "differ: " << render_trace(*r.witness) << '\n';
  return kFail;
}

int expand_cmd(const std::string& src, unsigned depth, const Globals& g, std::ostream& out) {
  const StateSpace space(g.states);
  Command c = parse_dsl(src, space, DslOptions{g.bound});
  // Continuations are expanded breadth-first down to `depth` levels.
  std::vector<std::pair<std::string, Command>> level{{"", c}};
  for (unsigned k = 0; k < depth && !level.empty(); ++k) {
    std::vector<std::pair<std::string, Command>> next;
    for (const auto& [path, cmd] : level) {
      const ExpandedForm f = expand(cmd, space);
      out << (path.empty() ? std::string("root") : path) << ":\n" << render_expanded(f, space);
      for (const auto& [key, cont] : f.branches)
        next.emplace_back(path + (key.label == Label::Pi ? "/pi(" : "/eps(") +
                              std::to_string(key.pre) + "," + std::to_string(key.post) + ")",
                          cont);
    }
    level = std::move(next);
  }
  return kPass;
}

int laws_cmd(const std::string& name, const std::string& family, const Globals& g,
             std::ostream& out, std::ostream& err) {
  GenCfg cfg;
  cfg.seed = g.seed;
  cfg.state_size = g.states;
  cfg.bound = g.bound;
  cfg.trials = g.trials;
  std::vector<LawReport> reports;
  if (!family.empty()) {
    const Family f = family == "tests" ? Family::Tests
                     : family == "atomics" ? Family::Atomics
                                           : Family::Pseudo;
    reports.push_back(check_compatible_set(f, cfg));
  } else if (!name.empty()) {
    const Law* law = find_law(name);
    if (!law) {
      err << "unknown law: " << name << '\n';
      return kUsage;
    }
    reports.push_back(check_law(*law, cfg));
  } else {
    reports = check_all(cfg);
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (g.json) {
    out << reports_json(reports) << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.law << "  " << r.passes << '/' << r.trials;
      if (r.skipped) out << " (" << r.skipped << " skipped)";
      if (r.exhausted) out << " exhausted";
      out << '\n';
      if (const auto& cx = r.counterexample) {
        for (const auto& [k, v] : cx->bindings) out << "    " << k << " = " << v << '\n';
        out << "    " << cx->violation << ": " << cx->witness << '\n';
      }
    }
    out << (ok ? "all laws pass" : "some laws fail") << '\n';
  }
  return ok ? kPass : kFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded trace-model checker for concurrent refinement algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--states", g.states, "Number of states")->check(CLI::Range(1u, 4u));
  app.add_option("--bound", g.bound, "Maximum trace length")->check(CLI::Range(1u, 6u));
  app.add_option("--trials", g.trials, "Random instances per law")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Random seed");
  app.add_flag("--json", g.json, "JSON output");

  std::vector<std::string> check_args;
  auto* check = app.add_subcommand("check", "Decide C ⊒ D");
  check->add_option("args", check_args, "C refines D")->required()->expected(3);

  std::string eq_a, eq_b;
  auto* eqv = app.add_subcommand("equiv", "Decide C = D");
  eqv->add_option("C", eq_a)->required();
  eqv->add_option("D", eq_b)->required();

  std::string ex_src;
  unsigned depth = 1;
  auto* ex = app.add_subcommand("expand", "Print expanded forms");
  ex->add_option("C", ex_src)->required();
  ex->add_option("--depth", depth, "Levels of continuations")->check(CLI::Range(1u, 8u));

  std::string law_name, family;
  auto* laws = app.add_subcommand("laws", "Check registry laws");
  laws->add_option("--law", law_name, "Single law by name");
  laws->add_option("--family", family, "Compatible-set family")
      ->check(CLI::IsMember({"tests", "atomics", "pseudo"}));

  std::string tc_src;
  auto* tc = app.add_subcommand("trace-count", "Number of traces in the denotation");
  tc->add_option("C", tc_src)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*check) return check_cmd(check_args, g, out, err);
    if (*eqv) return equiv_cmd(eq_a, eq_b, g, out);
    if (*ex) return expand_cmd(ex_src, depth, g, out);
    if (*laws) return laws_cmd(law_name, family, g, out, err);
    if (*tc) {
      const ModelCfg cfg(StateSpace(g.states), g.bound);
      out << denote(parse_dsl(tc_src, cfg.space, DslOptions{g.bound}), cfg).count() << '\n';
      return kPass;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace cra
