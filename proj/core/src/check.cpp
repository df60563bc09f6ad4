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

#include <algorithm>
#include <array>

#include "blackbox/calculus.hpp"

namespace blackbox::logic {

std::string_view rule_token(Rule r) {
  switch (r) {
    case Rule::AndForm: return "andF";
    case Rule::AndRefl: return "andR";
    case Rule::ParForm: return "parF";
    case Rule::ParRefl: return "parR";
    case Rule::Par0Form: return "par0F";
    case Rule::Par0Refl: return "par0R";
    case Rule::Par1Form: return "par1F";
    case Rule::Par1Refl: return "par1R";
    case Rule::AndCongr: return "andCongr";
    case Rule::AndCongrRefl: return "andCongrR";
    case Rule::AndCont: return "andCont";
    case Rule::AndContRefl: return "andContR";
    case Rule::Premise: return "premise";
    case Rule::Cut: return "cut";
  }
  return "?";
}

std::optional<Rule> rule_from_token(std::string_view token) {
  for (Rule r : kAllRules) {
    if (rule_token(r) == token) return r;
  }
  return std::nullopt;
}

Derivation leaf(Statement conclusion) { return {std::move(conclusion), Rule::Premise, {}}; }

Derivation step(Statement conclusion, Rule rule, std::vector<Derivation> premises) {
  return {std::move(conclusion), rule, std::move(premises)};
}

namespace {

void collect_leaves(const Derivation& d, std::vector<const Derivation*>& out) {
  if (d.rule == Rule::Premise) out.push_back(&d);
  for (const auto& p : d.premises) collect_leaves(p, out);
}

}  // namespace

std::vector<const Derivation*> leaves(const Derivation& d) {
  std::vector<const Derivation*> out;
  collect_leaves(d, out);
  return out;
}

std::size_t size(const Derivation& d) {
  std::size_t n = 1;
  for (const auto& p : d.premises) n += size(p);
  return n;
}

bool contains_rule(const Derivation& d, Rule r) {
  if (d.rule == r) return true;
  return std::any_of(d.premises.begin(), d.premises.end(),
                     [r](const Derivation& p) { return contains_rule(p, r); });
}

std::string_view reason_code(Reason r) {
  switch (r) {
    case Reason::CutNotAdmissible: return "CutNotAdmissible";
    case Reason::VisibilityViolation: return "VisibilityViolation";
    case Reason::UnknownPremise: return "UnknownPremise";
    case Reason::ArityMismatch: return "ArityMismatch";
    case Reason::SchemaMismatch: return "SchemaMismatch";
    case Reason::NotDerivable: return "NotDerivable";
  }
  return "?";
}

CheckReport CheckReport::reject(std::string path, Reason reason, std::string detail) {
  return {false, std::move(path), reason, std::move(detail)};
}

std::string CheckReport::render() const {
  if (accepted) return "ACCEPT";
  return "REJECT " + path + " " + std::string(reason_code(reason));
}

namespace {

struct Failure {
  Reason reason;
  std::string detail;
};

using Verdict = std::optional<Failure>;

Verdict fail(Reason r, std::string detail) { return Failure{r, std::move(detail)}; }

const Sequent* as_sequent(const Statement& s) { return std::get_if<Sequent>(&s); }
const LinkedSequent* as_linked(const Statement& s) { return std::get_if<LinkedSequent>(&s); }

// X for a formula of the shape X & X'.
std::optional<Atom> superposed_atom(const Formula& f) {
  if (!f.is(Connective::And) || !f.lhs().is_atom() || !f.rhs().is_atom()) return std::nullopt;
  if (f.rhs().atom() != dualize(f.lhs().atom())) return std::nullopt;
  return f.lhs().atom();
}

std::vector<Formula> pair_of(const Atom& x, const Atom& y) { return {Formula(x), Formula(y)}; }

// Shape of a &congr / &cont conclusion.
struct LinkedShape {
  const LinkedSequent* seq;
  Atom left;
  Atom right;
};

std::optional<LinkedShape> linked_shape(const Statement& s, MetaLink link) {
  const auto* ls = as_linked(s);
  if (ls == nullptr || ls->pair.link != link) return std::nullopt;
  auto x = superposed_atom(ls->pair.left);
  auto z = superposed_atom(ls->pair.right);
  if (!x || !z) return std::nullopt;
  return LinkedShape{ls, *x, *z};
}

std::vector<std::vector<Formula>> congr_branches(const Atom& x, const Atom& z) {
  return {pair_of(x, z), pair_of(dualize(x), dualize(z))};
}

std::vector<std::vector<Formula>> cont_branches(const Atom& x, const Atom& z) {
  const Atom xd = dualize(x);
  const Atom zd = dualize(z);
  return {pair_of(x, z), pair_of(x, zd), pair_of(xd, z), pair_of(xd, zd)};
}

Verdict check_and_form(const Derivation& d) {
  if (d.premises.size() < 2) return fail(Reason::ArityMismatch, "andF needs at least two premises");
  const auto* concl = as_sequent(d.conclusion);
  if (concl == nullptr) return fail(Reason::SchemaMismatch, "andF concludes a plain sequent");
  if (concl->succedent.size() != 1) {
    return fail(Reason::VisibilityViolation, "andF conclusion carries side formulas");
  }
  std::vector<Formula> parts;
  for (const auto& p : d.premises) {
    const auto* ps = as_sequent(p.conclusion);
    if (ps == nullptr) return fail(Reason::SchemaMismatch, "andF premise is not a plain sequent");
    if (ps->succedent.size() != 1) {
      return fail(Reason::VisibilityViolation, "andF premise carries side formulas");
    }
    if (ps->context != concl->context) return fail(Reason::SchemaMismatch, "context changed");
    parts.push_back(ps->succedent.front());
  }
  if (concl->succedent.front() != and_chain(parts)) {
    return fail(Reason::SchemaMismatch, "conclusion is not the & of the premises");
  }
  return std::nullopt;
}

Verdict check_and_refl(const Derivation& d) {
  if (d.premises.size() != 1) return fail(Reason::ArityMismatch, "andR needs one premise");
  const auto* concl = as_sequent(d.conclusion);
  const auto* prem = as_sequent(d.premises.front().conclusion);
  if (concl == nullptr || prem == nullptr) {
    return fail(Reason::SchemaMismatch, "andR relates plain sequents");
  }
  if (concl->succedent.size() != 1 || prem->succedent.size() != 1) {
    return fail(Reason::VisibilityViolation, "andR sequent carries side formulas");
  }
  if (prem->context != concl->context) return fail(Reason::SchemaMismatch, "context changed");
  const Formula& whole = prem->succedent.front();
  if (!whole.is(Connective::And)) return fail(Reason::SchemaMismatch, "andR premise is not a &");
  const auto parts = and_components(whole);
  if (std::find(parts.begin(), parts.end(), concl->succedent.front()) == parts.end()) {
    return fail(Reason::SchemaMismatch, "conclusion is not a component of the premise");
  }
  return std::nullopt;
}

// `joined` equals `split` with one adjacent pair replaced by its par.
bool par_joins(const std::vector<Formula>& split, const std::vector<Formula>& joined) {
  if (split.size() != joined.size() + 1) return false;
  for (std::size_t i = 0; i < joined.size(); ++i) {
    const Formula& f = joined[i];
    if (!f.is(Connective::Par) || f.lhs() != split[i] || f.rhs() != split[i + 1]) continue;
    const bool before = std::equal(joined.begin(), joined.begin() + static_cast<long>(i), split.begin());
    const bool after = std::equal(joined.begin() + static_cast<long>(i) + 1, joined.end(),
                                  split.begin() + static_cast<long>(i) + 2);
    if (before && after) return true;
  }
  return false;
}

Verdict check_par(const Derivation& d, bool form) {
  if (d.premises.size() != 1) return fail(Reason::ArityMismatch, "par rules need one premise");
  const auto* concl = as_sequent(d.conclusion);
  const auto* prem = as_sequent(d.premises.front().conclusion);
  if (concl == nullptr || prem == nullptr) {
    return fail(Reason::SchemaMismatch, "par rules relate plain sequents");
  }
  if (prem->context != concl->context) return fail(Reason::SchemaMismatch, "context changed");
  const bool ok = form ? par_joins(prem->succedent, concl->succedent)
                       : par_joins(concl->succedent, prem->succedent);
  if (!ok) return fail(Reason::SchemaMismatch, "no comma/par pair matches");
  return std::nullopt;
}

// par0F / par1F and their inverses: L ~k R  <=>  L %k R.
Verdict check_linked_par(const Derivation& d, MetaLink link, Connective op, bool form) {
  if (d.premises.size() != 1) return fail(Reason::ArityMismatch, "needs one premise");
  const Statement& upper = d.premises.front().conclusion;
  const Statement& linked_side = form ? upper : d.conclusion;
  const Statement& par_side = form ? d.conclusion : upper;
  const auto* ls = as_linked(linked_side);
  const auto* ps = as_sequent(par_side);
  if (ls == nullptr || ps == nullptr || ls->pair.link != link || ps->succedent.size() != 1) {
    return fail(Reason::SchemaMismatch, "wrong link or sequent shape");
  }
  if (ls->context != ps->context) return fail(Reason::SchemaMismatch, "context changed");
  if (ps->succedent.front() != Formula(op, ls->pair.left, ls->pair.right)) {
    return fail(Reason::SchemaMismatch, "linked pair and connective operands differ");
  }
  return std::nullopt;
}

// andCongr / andCont: the premises are exactly the expected branches, in order.
Verdict check_assembly(const Derivation& d, MetaLink link, std::size_t arity) {
  if (d.premises.size() != arity) return fail(Reason::ArityMismatch, "wrong number of premises");
  const auto shape = linked_shape(d.conclusion, link);
  if (!shape) return fail(Reason::SchemaMismatch, "conclusion is not (X & X') link (Y & Y')");
  const auto expected = link == MetaLink::MaxEnt ? congr_branches(shape->left, shape->right)
                                                 : cont_branches(shape->left, shape->right);
  for (std::size_t i = 0; i < arity; ++i) {
    const auto* ps = as_sequent(d.premises[i].conclusion);
    if (ps == nullptr || ps->context != shape->seq->context || ps->succedent != expected[i]) {
      return fail(Reason::SchemaMismatch, "premise " + std::to_string(i) + " does not match");
    }
  }
  return std::nullopt;
}

Verdict check_disassembly(const Derivation& d, MetaLink link) {
  if (d.premises.size() != 1) return fail(Reason::ArityMismatch, "needs one premise");
  const auto shape = linked_shape(d.premises.front().conclusion, link);
  if (!shape) return fail(Reason::SchemaMismatch, "premise is not (X & X') link (Y & Y')");
  const auto* concl = as_sequent(d.conclusion);
  if (concl == nullptr || concl->context != shape->seq->context) {
    return fail(Reason::SchemaMismatch, "conclusion is not a plain sequent in the same context");
  }
  const auto branches = link == MetaLink::MaxEnt ? congr_branches(shape->left, shape->right)
                                                 : cont_branches(shape->left, shape->right);
  if (std::find(branches.begin(), branches.end(), concl->succedent) == branches.end()) {
    return fail(Reason::SchemaMismatch, "conclusion is not one of the linked branches");
  }
  return std::nullopt;
}

Verdict check_node(const Derivation& d, std::span<const Statement> allowed) {
  switch (d.rule) {
    case Rule::Premise:
      if (!d.premises.empty()) return fail(Reason::ArityMismatch, "premise leaf with premises");
      if (std::find(allowed.begin(), allowed.end(), d.conclusion) == allowed.end()) {
        return fail(Reason::UnknownPremise, print(d.conclusion));
      }
      return std::nullopt;
    case Rule::Cut:
      return fail(Reason::CutNotAdmissible, "cut");
    case Rule::AndForm: return check_and_form(d);
    case Rule::AndRefl: return check_and_refl(d);
    case Rule::ParForm: return check_par(d, true);
    case Rule::ParRefl: return check_par(d, false);
    case Rule::Par0Form: return check_linked_par(d, MetaLink::NonEnt, Connective::Par0, true);
    case Rule::Par0Refl: return check_linked_par(d, MetaLink::NonEnt, Connective::Par0, false);
    case Rule::Par1Form: return check_linked_par(d, MetaLink::MaxEnt, Connective::Par1, true);
    case Rule::Par1Refl: return check_linked_par(d, MetaLink::MaxEnt, Connective::Par1, false);
    case Rule::AndCongr: return check_assembly(d, MetaLink::MaxEnt, 2);
    case Rule::AndCongrRefl: return check_disassembly(d, MetaLink::MaxEnt);
    case Rule::AndCont: return check_assembly(d, MetaLink::NonEnt, 4);
    case Rule::AndContRefl: return check_disassembly(d, MetaLink::NonEnt);
  }
  return fail(Reason::SchemaMismatch, "unknown rule");
}

std::optional<CheckReport> find_cut(const Derivation& d, const std::string& path) {
  if (d.rule == Rule::Cut) return CheckReport::reject(path, Reason::CutNotAdmissible, "cut");
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    if (auto r = find_cut(d.premises[i], path + "." + std::to_string(i))) return r;
  }
  return std::nullopt;
}

std::optional<CheckReport> check_tree(const Derivation& d, std::span<const Statement> allowed,
                                      const std::string& path) {
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    if (auto r = check_tree(d.premises[i], allowed, path + "." + std::to_string(i))) return r;
  }
  if (auto f = check_node(d, allowed)) {
    return CheckReport::reject(path, f->reason, std::move(f->detail));
  }
  return std::nullopt;
}

}  // namespace

CheckReport check(const Derivation& d, std::span<const Statement> allowed_premises) {
  if (auto r = find_cut(d, "root")) return *r;
  if (auto r = check_tree(d, allowed_premises, "root")) return *r;
  return CheckReport::accept();
}

}  // namespace blackbox::logic
