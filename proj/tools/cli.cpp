// Copyright 2026 The Blackbox Authors. All Rights Reserved.
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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "blackbox/bridge.hpp"
#include "blackbox/calculus.hpp"
#include "blackbox/errors.hpp"
#include "blackbox/formulas.hpp"
#include "blackbox/quantum.hpp"

namespace blackbox::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace q = blackbox::quantum;
namespace lg = blackbox::logic;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string state;
  std::string mirror;
  std::string file;
  std::vector<std::string> premises;
  std::string direction = "lr";
  std::string atoms = "A,B";
  std::string text;
  bool json = false;
};

// Result of one command: the human text, plus the pieces of the JSON
// envelope.
struct Outcome {
  std::string text;
  Json result;
  Json regime;   // null unless a regime applies
  Json support;  // null unless a support table applies
  int code = kExitOk;
};

Json input_of(const Options& o) {
  Json in = Json::object();
  if (!o.state.empty()) in["state"] = o.state;
  if (!o.mirror.empty()) in["mirror"] = o.mirror;
  if (!o.file.empty()) in["file"] = o.file;
  if (!o.premises.empty()) in["premises"] = o.premises;
  if (o.command == "derive") in["direction"] = o.direction;
  if (o.command == "judge" || o.command == "outcomes" || o.command == "superpose" ||
      o.command == "verify" || o.command == "derive") {
    in["atoms"] = o.atoms;
  }
  if (!o.text.empty()) in["text"] = o.text;
  return in;
}

Json support_json(const std::vector<bridge::SupportEntry>& entries) {
  Json arr = Json::array();
  for (const auto& e : entries) arr.push_back({{"outcome", e.outcome}, {"probability", e.probability}});
  return arr;
}

std::string support_text(const std::vector<bridge::SupportEntry>& entries) {
  std::string out;
  for (const auto& e : entries) out += e.outcome + " " + bridge::format_probability(e.probability) + "\n";
  return out;
}

std::string require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing required option ") + flag);
  return value;
}

q::State state_of(const Options& o) { return q::parse_state(require(o.state, "--state")); }

q::Register2Q two_qubit_state(const Options& o) {
  auto s = state_of(o);
  if (auto* r = std::get_if<q::Register2Q>(&s)) return *r;
  throw UsageError("this command needs a two-qubit state");
}

bridge::AtomNames atom_names(const Options& o) {
  const auto comma = o.atoms.find(',');
  if (comma == std::string::npos) throw UsageError("--atoms expects two names, e.g. A,B");
  bridge::AtomNames names{o.atoms.substr(0, comma), o.atoms.substr(comma + 1)};
  if (!lg::is_identifier(names.first) || !lg::is_identifier(names.second)) {
    throw UsageError("atom names must match [A-Z][A-Za-z0-9]*");
  }
  return names;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome report_outcome(const lg::CheckReport& r) {
  Outcome out;
  out.text = r.render() + "\n";
  out.result = {{"accepted", r.accepted}, {"report", r.render()}};
  if (!r.accepted) out.code = kExitDomain;
  return out;
}

Outcome cmd_simulate(const Options& o) {
  const auto state = state_of(o);
  const auto mirror = q::parse_mirror(require(o.mirror, "--mirror"));
  Outcome out;
  if (const auto* q1 = std::get_if<q::Register1Q>(&state)) {
    const auto* m = std::get_if<q::Mirror1Q>(&mirror);
    if (m == nullptr) throw UsageError("a one-qubit state needs a mirror1 literal");
    const auto result = q::apply_mirror(*m, *q1);
    const auto sup = bridge::support(result);
    out.text = q::format_state(result) + "\n" + support_text(sup);
    out.result = q::format_state(result);
    out.support = support_json(sup);
    return out;
  }
  const auto* m = std::get_if<q::Mirror2Q>(&mirror);
  if (m == nullptr) throw UsageError("a two-qubit state needs a mirror2 literal");
  const auto result = q::apply_mirror(*m, std::get<q::Register2Q>(state));
  const auto sup = bridge::support(result);
  out.text = q::format_state(result) + "\n" + support_text(sup);
  out.result = q::format_state(result);
  out.regime = bridge::regime_label(q::classify(result));
  out.support = support_json(sup);
  return out;
}

Outcome cmd_classify(const Options& o) {
  const auto cls = q::classify(two_qubit_state(o));
  Outcome out;
  out.text = "regime: " + bridge::regime_label(cls) + "\ndegree: " +
             bridge::format_probability(cls.degree) + "\n";
  out.result = {{"tag", q::to_string(cls.tag)}, {"degree", cls.degree}};
  out.regime = bridge::regime_label(cls);
  return out;
}

Outcome cmd_judge(const Options& o) {
  const auto state = state_of(o);
  const auto names = atom_names(o);
  const auto j = std::holds_alternative<q::Register1Q>(state)
                     ? bridge::judge_1q(std::get<q::Register1Q>(state), names.first)
                     : bridge::judge_2q(std::get<q::Register2Q>(state), names);
  Outcome out;
  out.text = bridge::render(j);
  out.result = lg::print(j.sequent);
  if (j.regime) out.regime = bridge::regime_label(*j.regime);
  out.support = support_json(j.support);
  return out;
}

Outcome cmd_outcomes(const Options& o) {
  const auto s = two_qubit_state(o);
  Outcome out;
  out.result = Json::array();
  for (const auto& seq : bridge::external_outcomes(s, atom_names(o))) {
    out.text += lg::print(seq) + "\n";
    out.result.push_back(lg::print(seq));
  }
  out.regime = bridge::regime_label(q::classify(s));
  out.support = support_json(bridge::support(s));
  return out;
}

Outcome cmd_superpose(const Options& o) {
  const auto s = two_qubit_state(o);
  const auto f = bridge::superposed_external(s, atom_names(o));
  Outcome out;
  out.text = lg::print(f) + "\n";
  out.result = lg::print(f);
  out.regime = bridge::regime_label(q::classify(s));
  out.support = support_json(bridge::support(s));
  return out;
}

Outcome cmd_verify(const Options& o) {
  const auto s = two_qubit_state(o);
  Outcome out = report_outcome(bridge::verify_equivalence(s, atom_names(o)));
  out.regime = bridge::regime_label(q::classify(s));
  out.support = support_json(bridge::support(s));
  return out;
}

Outcome cmd_check(const Options& o) {
  const auto d = lg::parse_derivation(read_file(require(o.file, "--file")));
  std::vector<lg::Statement> allowed;
  for (const auto& p : o.premises) allowed.push_back(lg::parse_statement(p));
  return report_outcome(lg::check(d, allowed));
}

lg::Direction direction_of(const Options& o) {
  if (o.direction == "lr") return lg::Direction::LeftToRight;
  if (o.direction == "rl") return lg::Direction::RightToLeft;
  throw UsageError("--direction must be lr or rl");
}

Outcome cmd_derive(const Options& o) {
  const auto state = state_of(o);
  const auto names = atom_names(o);
  const auto dir = direction_of(o);
  Outcome out;
  lg::Derivation d = [&] {
    if (const auto* q1 = std::get_if<q::Register1Q>(&state)) {
      if (bridge::support(*q1).size() != 2) throw DomainFailure("qubit is not in superposition");
      return lg::derive_one_qubit(lg::Atom{names.first, false});
    }
    const auto& s = std::get<q::Register2Q>(state);
    out.regime = bridge::regime_label(q::classify(s));
    auto eq = bridge::equivalence(s, names);
    if (!eq) throw DomainFailure("no derivation connects the two readings of this register");
    return dir == lg::Direction::LeftToRight ? std::move(eq->forward) : std::move(eq->backward);
  }();
  out.text = lg::print_derivation(d) + "\n";
  out.result = lg::print_derivation(d);
  return out;
}

std::string parse_and_print(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '(') {
    const auto next = text.find_first_not_of(" \t\r\n", first + 1);
    if (next != std::string::npos && text[next] >= 'a' && text[next] <= 'z') {
      return lg::print_derivation(lg::parse_derivation(text));
    }
  }
  if (text.find("|-") != std::string::npos || text.find("⊢") != std::string::npos) {
    return lg::print(lg::parse_statement(text));
  }
  return lg::print(lg::parse_formula(text));
}

Outcome cmd_parse(const Options& o) {
  if (o.text.empty() == o.file.empty()) throw UsageError("parse takes either TEXT or --file");
  const std::string printed = parse_and_print(o.text.empty() ? read_file(o.file) : o.text);
  Outcome out;
  out.text = printed + "\n";
  out.result = printed;
  return out;
}

Outcome dispatch(const Options& o) {
  if (o.command == "simulate") return cmd_simulate(o);
  if (o.command == "classify") return cmd_classify(o);
  if (o.command == "judge") return cmd_judge(o);
  if (o.command == "outcomes") return cmd_outcomes(o);
  if (o.command == "superpose") return cmd_superpose(o);
  if (o.command == "verify") return cmd_verify(o);
  if (o.command == "check") return cmd_check(o);
  if (o.command == "derive") return cmd_derive(o);
  if (o.command == "parse") return cmd_parse(o);
  throw UsageError("unknown command");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Mirror measurements and the internal logic of one- and two-qubit registers",
               "blackbox"};
  app.require_subcommand(1);
  app.add_option("--state", o.state, "State literal: bell:psi+, basis:01, vec:(re,im);..., vec2:...");
  app.add_option("--mirror", o.mirror, "Mirror literal: mirror1:phi=..,alpha=.. or mirror2:phi=..,gamma=..,delta=..");
  app.add_option("--file", o.file, "Derivation or formula file");
  app.add_option("--premise", o.premises, "Declared hypothesis sequent (repeatable)");
  app.add_option("--direction", o.direction, "lr or rl")->check(CLI::IsMember({"lr", "rl"}));
  app.add_option("--atoms", o.atoms, "Atom names for qubit 1 and qubit 2");
  app.add_flag("--json", o.json, "Machine-readable output");

  const std::pair<const char*, const char*> commands[] = {
      {"simulate", "Apply a mirror to a state"},
      {"classify", "Separable / bell / intermediate regime"},
      {"judge", "Internal judgement of a register"},
      {"outcomes", "External register judgements"},
      {"superpose", "Superposition of the external judgements"},
      {"verify", "Check the equivalence of the two readings"},
      {"check", "Check a derivation file"},
      {"derive", "Print the equivalence derivation for a state"},
      {"parse", "Parse and pretty-print a formula, sequent or derivation"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&o, n = std::string(name)] { o.command = n; });
    if (std::string_view(name) == "parse") {
      sub->add_option("text", o.text, "Text to parse");
    }
  }

  std::vector<std::string> argv_storage{"blackbox"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Outcome result = dispatch(o);
    if (o.json) {
      Json envelope = {{"command", o.command},
                       {"input", input_of(o)},
                       {"result", result.result},
                       {"regime", result.regime},
                       {"support", result.support}};
      out << envelope.dump(2) << "\n";
    } else {
      out << result.text;
    }
    return result.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace blackbox::cli
