#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistgate/curve.hpp"
#include "twistgate/descent.hpp"
#include "twistgate/errors.hpp"
#include "twistgate/fieldsearch.hpp"
#include "twistgate/galois.hpp"
#include "twistgate/lseries.hpp"
#include "twistgate/numtheory.hpp"
#include "twistgate/reduction.hpp"
#include "twistgate/rootnum.hpp"

namespace twistgate::cli {
namespace {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kEvidenceNote =
    "nonvanishing L(E,1) gives rank 0 only through the analytic-rank implication; this is numerical evidence";

struct Outcome {
  Status status = Status::Ok;
  json result = json::object();
  std::string text;
};

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::CheckFailed: return "check-failed";
    case Status::UnsupportedInput: return "unsupported-input";
  }
  return "?";
}

// ---- argument values -------------------------------------------------------

Integer parse_integer(const std::string& text, std::string_view what) {
  Integer value;
  const bool digits = !text.empty() && text.find_first_not_of("-+0123456789") == std::string::npos &&
                      text.find_first_of("-+", 1) == std::string::npos && text != "-" && text != "+";
  if (!digits || value.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0)
    throw DomainError("bad integer for " + std::string(what) + ": '" + text + "'");
  return value;
}

std::vector<Integer> parse_integer_list(const std::string& text, std::string_view what) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_integer(item, what));
  if (out.empty()) throw DomainError("empty list for " + std::string(what));
  return out;
}

std::string sign_str(int s) { return s > 0 ? "+1" : (s < 0 ? "-1" : "0"); }

std::string list_str(const std::vector<Integer>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].get_str();
  return out + "]";
}

std::string factorization_str(const Integer& n) {
  if (abs(n) == 1) return n.get_str();
  std::string out = n < 0 ? "-" : "";
  const auto f = factor(abs(n));
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    out += (i ? " * " : "") + f.factors[i].prime.get_str();
    if (f.factors[i].exponent > 1) out += "^" + std::to_string(f.factors[i].exponent);
  }
  return out;
}

std::string factorization_or_plain(const Integer& n) {
  try {
    return factorization_str(n);
  } catch (const CompositeResidueError&) {
    return n.get_str() + " (not fully factored)";
  }
}

json factorization_json(const Integer& n) {
  json arr = json::array();
  if (n == 0) return arr;
  for (const auto& pe : factor(abs(n)).factors) arr.push_back({pe.prime.get_str(), pe.exponent});
  return arr;
}

json model_json(const WeierstrassModel& E) {
  return json::array({E.a1().get_str(), E.a2().get_str(), E.a3().get_str(), E.a4().get_str(), E.a6().get_str()});
}

// ---- curve selection -------------------------------------------------------

struct CurveSelection {
  std::string label;
  std::string coefficients;
  std::string twist;
};

struct SelectedCurve {
  std::string name;
  std::string label;  // empty for --curve input
  WeierstrassModel base;
  std::optional<Integer> twist;
  WeierstrassModel model;  // twisted when --twist was given
};

void add_curve_options(CLI::App* cmd, CurveSelection& sel, bool with_twist) {
  auto* label = cmd->add_option("--label", sel.label, "Curve label from the curve table");
  auto* curve = cmd->add_option("--curve", sel.coefficients, "Coefficients a1,a2,a3,a4,a6");
  label->excludes(curve);
  if (with_twist) cmd->add_option("--twist", sel.twist, "Quadratic twist by squarefree D");
}

SelectedCurve select_curve(const CurveSelection& sel, std::string_view default_label = {}) {
  std::string label = sel.label;
  if (label.empty() && sel.coefficients.empty()) {
    if (default_label.empty()) throw CLI::ValidationError("curve", "one of --label or --curve is required");
    label = std::string(default_label);
  }
  std::optional<WeierstrassModel> base;
  std::string name;
  if (!label.empty()) {
    base = CurveTable::from_environment().at(label);
    name = label;
  } else {
    const auto a = parse_integer_list(sel.coefficients, "--curve");
    if (a.size() != 5) throw DomainError("--curve expects exactly 5 coefficients");
    base.emplace(a[0], a[1], a[2], a[3], a[4]);
    name = base->to_string();
  }
  SelectedCurve out{name, label, *base, std::nullopt, *base};
  if (!sel.twist.empty()) {
    out.twist = parse_integer(sel.twist, "--twist");
    if (*out.twist != 1) out.model = quadratic_twist(*base, *out.twist);
    out.name += "^(" + out.twist->get_str() + ")";
  }
  return out;
}

json curve_json(const SelectedCurve& c) {
  json j{{"name", c.name}, {"label", c.label}, {"base_model", model_json(c.base)}};
  j["twist"] = c.twist ? json(c.twist->get_str()) : json(nullptr);
  j["model"] = model_json(c.model);
  return j;
}

// ---- root numbers ----------------------------------------------------------

json root_number_json(const RootNumber& w) {
  json ledger = json::array();
  for (const auto& f : w.local_factors())
    ledger.push_back({{"place", f.place.to_string()}, {"sign", f.sign}, {"case", std::string(to_string(f.rule))}});
  return {{"value", w.value()}, {"ledger", ledger}};
}

void print_ledger(std::ostream& os, const RootNumber& w) {
  os << "  place     sign  rule\n";
  for (const auto& f : w.local_factors())
    os << "  " << std::left << std::setw(9) << f.place.to_string() << ' ' << std::setw(5) << sign_str(f.sign) << ' '
       << '[' << to_string(f.rule) << "] " << rule_text(f.rule) << '\n';
}

// ---- l-values --------------------------------------------------------------

json lvalue_json(const LValueEstimate& l) {
  return {{"value", format_real(l.value)},
          {"tail_bound", format_real(l.tail_bound, 6)},
          {"terms_used", l.terms_used},
          {"conductor", l.conductor.get_str()},
          {"root_number", l.root_number},
          {"split", l.split},
          {"margin_factor", l.margin_factor},
          {"verdict", std::string(to_string(l.verdict))},
          {"retried", l.retried}};
}

// ---- subcommands -----------------------------------------------------------

Outcome cmd_curve_info(const CurveSelection& sel) {
  const SelectedCurve c = select_curve(sel);
  const CurveInvariants v = invariants(c.model);
  const ShortForm s = short_form(c.model);
  Outcome o;
  std::ostringstream t;
  t << "Curve " << c.name << ": " << c.model << '\n'
    << "  b2 = " << v.b2 << ", b4 = " << v.b4 << ", b6 = " << v.b6 << ", b8 = " << v.b8 << '\n'
    << "  c4 = " << v.c4 << ", c6 = " << v.c6 << '\n'
    << "  Δ = " << v.delta << " = " << factorization_or_plain(v.delta) << '\n'
    << "  j = " << v.j << '\n';
  std::string j_factored;
  try {
    j_factored = factorization_str(Integer{v.j.get_num()});
    if (v.j.get_den() != 1) j_factored += " / (" + factorization_str(Integer{v.j.get_den()}) + ")";
    t << "    = " << j_factored << '\n';
  } catch (const CompositeResidueError&) {
  }
  t << "  short form: y^2 = x^3 + (" << s.A << ") x + (" << s.B << ")\n";

  o.result["curve"] = curve_json(c);
  o.result["invariants"] = {{"b2", v.b2.get_str()}, {"b4", v.b4.get_str()}, {"b6", v.b6.get_str()},
                            {"b8", v.b8.get_str()}, {"c4", v.c4.get_str()}, {"c6", v.c6.get_str()},
                            {"delta", v.delta.get_str()}, {"j", v.j.get_str()}};
  o.result["short_form"] = {{"A", s.A.get_str()}, {"B", s.B.get_str()}};
  try {
    o.result["delta_factorization"] = factorization_json(v.delta);
  } catch (const CompositeResidueError&) {
    o.result["delta_factorization"] = nullptr;
  }
  try {
    const Integer N = conductor(c.model);
    const RootNumber w = global_root_number(c.model);
    t << "  conductor N = " << N << '\n' << "  root number w = " << sign_str(w.value()) << '\n';
    o.result["conductor"] = N.get_str();
    o.result["root_number"] = root_number_json(w);
  } catch (const Error& e) {
    t << "  conductor / root number: unsupported (" << e.what() << ")\n";
    o.result["conductor"] = nullptr;
    o.result["root_number"] = nullptr;
  }
  o.text = t.str();
  return o;
}

Outcome cmd_reduction(const CurveSelection& sel, std::int64_t p) {
  const SelectedCurve c = select_curve(sel);
  const ReductionData red = p == 2 ? classify(c.model, 2) : local_reduction(c.model, p);
  const WeierstrassModel used = p >= 5 ? minimalize_at(c.model, p) : c.model;
  Outcome o;
  std::ostringstream t;
  t << "Reduction of " << c.name << " at p = " << p << '\n'
    << "  p-minimal model: " << used << '\n'
    << "  type: " << to_string(red.kind) << '\n'
    << "  |E(F_p)| = " << red.points << " (singular point and infinity included)\n"
    << "  p + 1 - |E(F_p)| = " << red.a_p;
  switch (red.kind) {
    case ReductionKind::Good: t << "  (trace of Frobenius, |a_p| <= 2 sqrt(p))\n"; break;
    case ReductionKind::MultSplit: t << "  (= +1: split multiplicative)\n"; break;
    case ReductionKind::MultNonsplit: t << "  (= -1: nonsplit multiplicative)\n"; break;
    default: t << "  (= 0: additive)\n"; break;
  }
  o.result["curve"] = curve_json(c);
  o.result["p"] = p;
  o.result["minimal_model"] = model_json(used);
  o.result["kind"] = std::string(to_string(red.kind));
  o.result["points"] = red.points;
  o.result["a_p"] = red.a_p;
  o.text = t.str();
  return o;
}

Outcome cmd_root_number(const CurveSelection& sel) {
  const SelectedCurve c = select_curve(sel);
  Outcome o;
  std::ostringstream t;
  o.result["curve"] = curve_json(c);

  if (!c.twist) {
    const RootNumber w = global_root_number(c.model);
    t << "Global root number of " << c.name << ": w = " << sign_str(w.value()) << " (product over places)\n";
    print_ledger(t, w);
    o.result["root_number"] = root_number_json(w);
    o.text = t.str();
    return o;
  }

  const Integer& d = *c.twist;
  t << "Twist of " << c.name.substr(0, c.name.find("^(")) << " by d = " << d << ": " << c.model << '\n';
  std::optional<RootNumber> direct;
  std::optional<std::string> direct_error;
  try {
    direct = global_root_number(c.model);
  } catch (const Error& e) {
    direct_error = e.what();
  }
  std::optional<int> formula;
  std::string formula_detail;
  try {
    formula = twist_root_number_formula(c.base, d);
    const Integer N = conductor(c.base);
    formula_detail = "(" + d.get_str() + "/" + N.get_str() + ") * w(E) = " + sign_str(jacobi(d, N)) + " * " +
                     sign_str(global_root_number(c.base).value()) + " = " + sign_str(*formula);
  } catch (const HypothesisViolationError& e) {
    formula_detail = std::string("not applicable: ") + e.what();
  }

  if (direct) {
    t << "  local product: w = " << sign_str(direct->value()) << '\n';
    print_ledger(t, *direct);
    o.result["root_number"] = root_number_json(*direct);
  } else {
    t << "  local product: unsupported (" << *direct_error << ")\n";
    o.result["root_number"] = nullptr;
  }
  t << "  twist formula (semistable E, odd conductor, d = 1 mod 4): " << formula_detail << '\n';
  o.result["formula"] = formula ? json(*formula) : json(nullptr);
  o.result["formula_detail"] = formula_detail;

  if (!direct && !formula) throw UnsupportedPlaceError(*direct_error);
  if (direct && formula) {
    const bool agree = direct->value() == *formula;
    t << "  agreement: " << (agree ? "yes" : "NO") << '\n';
    o.result["agree"] = agree;
    if (!agree) o.status = Status::CheckFailed;
  }
  o.text = t.str();
  return o;
}

Outcome cmd_twist_root_check(const CurveSelection& sel, std::int64_t dmax) {
  const SelectedCurve c = select_curve(sel);
  if (dmax < 1) throw DomainError("--dmax must be positive");
  const Integer N = conductor(c.model);
  const int w = global_root_number(c.model).value();
  Outcome o;
  std::ostringstream t;
  std::size_t instances = 0;
  json mismatches = json::array();
  for (std::int64_t dv = 1; dv <= dmax; dv += 4) {
    const Integer d{static_cast<long>(dv)};
    Integer g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), N.get_mpz_t());
    if (g != 1 || !is_squarefree(d)) continue;
    const int formula = twist_root_number_formula(c.model, d);
    const int direct = dv == 1 ? w : global_root_number(quadratic_twist(c.model, d)).value();
    ++instances;
    if (formula != direct) mismatches.push_back({{"d", dv}, {"formula", formula}, {"direct", direct}});
  }
  t << "Twist root-number check for " << c.name << " (N = " << N << ", w = " << sign_str(w) << ")\n"
    << "  d ranges over squarefree d <= " << dmax << ", d = 1 mod 4, gcd(d, N) = 1\n"
    << "  formula (d/N) w(E) vs local product on the twist: " << instances << " instances, " << mismatches.size()
    << " mismatches\n";
  for (const auto& m : mismatches)
    t << "  MISMATCH d = " << m["d"] << ": formula " << m["formula"] << ", direct " << m["direct"] << '\n';
  o.result["curve"] = curve_json(c);
  o.result["conductor"] = N.get_str();
  o.result["instances"] = instances;
  o.result["mismatches"] = mismatches;
  if (!mismatches.empty()) o.status = Status::CheckFailed;
  o.text = t.str();
  return o;
}

Outcome cmd_lvalue(const CurveSelection& sel, std::int64_t terms, double split, double margin) {
  const SelectedCurve c = select_curve(sel);
  LValueOptions opts;
  opts.margin_factor = margin;
  opts.split = split;
  const LValueEstimate l = l_value_with_retry(c.model, terms, opts);
  Outcome o;
  std::ostringstream t;
  t << "L(E,1) for " << c.name << " (N = " << l.conductor << ", w = " << sign_str(l.root_number) << ", "
    << l.terms_used << " terms, split t = " << l.split << (l.retried ? ", after a 4x retry" : "") << ")\n"
    << "  value      = " << format_real(l.value) << '\n'
    << "  tail bound = " << format_real(l.tail_bound, 6) << '\n'
    << "  verdict    = " << to_string(l.verdict) << " (margin " << l.margin_factor << " x tail bound)\n"
    << "  note: " << kEvidenceNote << '\n';
  o.result["curve"] = curve_json(c);
  o.result["lvalue"] = lvalue_json(l);
  o.result["note"] = std::string(kEvidenceNote);
  if (l.verdict != LVerdict::NonzeroEvidence) o.status = Status::CheckFailed;
  o.text = t.str();
  return o;
}

Outcome cmd_serre_check(const CurveSelection& sel, std::int64_t ell, std::optional<std::int64_t> aux) {
  const SelectedCurve c = select_curve(sel);
  if (!aux) aux = default_aux_prime(c.label);
  if (!aux) throw CLI::ValidationError("--aux", "no default auxiliary prime for this curve; pass --aux");
  const SurjectivityReport r = serre_check(c.model, ell, *aux);
  Outcome o;
  std::ostringstream t;
  t << "Serre criterion hypotheses for " << c.name << ", ell = " << ell << '\n';
  json checks = json::array();
  for (const auto& jc : r.j_exponent_checks) {
    t << "  v_" << jc.prime << "(j) = " << jc.exponent << ": ell " << (jc.passed ? "does not divide " : "DIVIDES ")
      << -jc.exponent << '\n';
    checks.push_back({{"prime", jc.prime.get_str()}, {"exponent", jc.exponent}, {"passed", jc.passed}});
  }
  if (r.j_exponent_checks.empty()) t << "  j is integral: no potentially multiplicative prime to test\n";
  t << "  |E(F_" << r.aux.prime << ")| = " << r.aux.points << ": ell " << (r.aux.passed ? "does not divide" : "DIVIDES")
    << " the count\n";
  t << "  overall: " << (r.overall ? "pass: " + std::string(kSurjectivityVerdict) : std::string("fail")) << '\n';
  o.result["curve"] = curve_json(c);
  o.result["ell"] = ell;
  o.result["j_exponent_checks"] = checks;
  o.result["aux"] = {{"prime", r.aux.prime}, {"points", r.aux.points}, {"passed", r.aux.passed}};
  o.result["overall"] = r.overall;
  if (r.overall) o.result["verdict"] = std::string(kSurjectivityVerdict);
  if (!r.overall) o.status = Status::CheckFailed;
  o.text = t.str();
  return o;
}

Outcome cmd_search(int p, std::size_t r, std::int64_t bound) {
  const auto tuples = search(p, r, bound);
  Outcome o;
  std::ostringstream t;
  t << "Admissible " << r << "-tuples for p = " << p << " (level " << 3 * p << "), d_i <= " << bound << ": "
    << tuples.size() << '\n';
  json arr = json::array();
  for (const auto& tup : tuples) {
    t << "  " << list_str(tup.ds()) << '\n';
    json row = json::array();
    for (const auto& d : tup.ds()) row.push_back(d.get_str());
    arr.push_back(row);
  }
  o.result = {{"p", p}, {"r", r}, {"bound", bound}, {"count", tuples.size()}, {"tuples", arr}};
  o.text = t.str();
  return o;
}

Outcome cmd_check_hypothesis(int p, const std::string& d_list, double margin, unsigned threads) {
  const auto ds = parse_integer_list(d_list, "--d");
  HypothesisOptions opts;
  opts.margin_factor = margin;
  opts.threads = threads;
  opts.curve = level_curve(p, CurveTable::from_environment());
  const HypothesisReport rep = check_hypothesis(p, ds, opts);

  Outcome o;
  std::ostringstream t;
  t << "Hypothesis check for K = Q(sqrt d_i), d = " << list_str(rep.ds) << ", X = X0(" << 3 * p << ") = "
    << (p == 5 ? "15a1" : "21a1") << '\n';
  o.result["p"] = p;
  json dj = json::array();
  for (const auto& d : rep.ds) dj.push_back(d.get_str());
  o.result["ds"] = dj;
  if (!rep.admissibility.admissible) {
    t << "  admissibility: FAIL at condition '" << to_string(*rep.admissibility.failed) << "' (entry "
      << rep.admissibility.index << "): " << rep.admissibility.detail << '\n'
      << "  overall: " << to_string(rep.overall) << '\n';
    o.result["admissibility"] = {{"admissible", false},
                                 {"failed", std::string(to_string(*rep.admissibility.failed))},
                                 {"index", rep.admissibility.index},
                                 {"detail", rep.admissibility.detail}};
    o.result["overall"] = std::string(to_string(rep.overall));
    o.status = Status::CheckFailed;
    o.text = t.str();
    return o;
  }
  t << "  admissibility: pass (squarefree, 1 mod 4, coprime to " << 3 * p << ", (d_i/" << 3 * p
    << ") = 1, independent modulo squares)\n"
    << "  unramified at 2, 3, " << p << ": " << (rep.unramified_at_6p ? "yes" : "no") << " (implied by admissibility)\n"
    << "  character  d_S        w(local)  w(formula)  L(E,1)                          tail bound    verdict\n";
  json rows = json::array();
  for (const auto& cr : rep.per_character) {
    t << "  " << std::left << std::setw(10) << cr.character.to_string() << ' ' << std::setw(10)
      << cr.discriminant.get_str() << ' ' << std::setw(9) << sign_str(cr.root_number.value()) << ' '
      << std::setw(11) << sign_str(cr.formula_sign) << ' ' << std::setw(31) << format_real(cr.lvalue.value, 24)
      << ' ' << std::setw(13) << format_real(cr.lvalue.tail_bound, 3) << ' ' << to_string(cr.lvalue.verdict)
      << (cr.lvalue.retried ? " (retried 4x)" : "") << '\n';
    rows.push_back({{"character", cr.character.to_string()},
                    {"discriminant", cr.discriminant.get_str()},
                    {"twist_model", model_json(cr.twist)},
                    {"root_number", root_number_json(cr.root_number)},
                    {"formula_sign", cr.formula_sign},
                    {"lvalue", lvalue_json(cr.lvalue)}});
  }
  t << "  overall: " << to_string(rep.overall);
  if (rep.overall == HypothesisStatus::Verified) t << " (" << kVerifiedWording << ")";
  t << '\n';
  o.result["admissibility"] = {{"admissible", true}};
  o.result["unramified_at_6p"] = rep.unramified_at_6p;
  o.result["per_character"] = rows;
  o.result["overall"] = std::string(to_string(rep.overall));
  if (rep.overall == HypothesisStatus::Verified) o.result["wording"] = std::string(kVerifiedWording);
  if (rep.overall != HypothesisStatus::Verified) o.status = Status::CheckFailed;
  o.text = t.str();
  return o;
}

Outcome cmd_descent_sum(unsigned k, std::size_t n, std::size_t r) {
  const auto family = signed_module_family(k, n, r);
  Outcome o;
  std::size_t elements = 0;
  std::size_t failures = 0;
  for (const auto& module : family) {
    const auto cert = lemma_sum_check(module);
    elements += cert.elements_checked;
    if (!cert.passed) ++failures;
  }
  std::ostringstream t;
  t << "Check of 2^r M in sum_s M_s over (Z/2^" << k << ")^" << n << " with r = " << r
    << " commuting involutions (diagonal / signed swap)\n"
    << "  modules: " << family.size() << ", elements certified: " << elements << ", failures: " << failures << '\n';
  o.result = {{"lemma", "sum"}, {"k", k}, {"n", n}, {"r", r}, {"modules", family.size()},
              {"elements_checked", elements}, {"failures", failures}, {"passed", failures == 0}};
  if (failures) o.status = Status::CheckFailed;
  o.text = t.str();
  return o;
}

std::string point_str(const RationalPoint& P) { return "(" + P.x.get_str() + ", " + P.y.get_str() + ")"; }

Outcome cmd_descent_tmw(const CurveSelection& sel, const std::string& d_text, std::int64_t height) {
  const SelectedCurve c = select_curve(sel, "15a1");
  const Integer d = parse_integer(d_text, "--d");
  const ShortForm E = short_form(c.model);
  const auto points = quad_point_search(E, d, height);
  const auto rational = rational_point_search(E, height);
  const ShortForm twist = twist_short_form(E, d);

  Outcome o;
  std::ostringstream t;
  t << "Twist correspondence over Q(sqrt " << d << ") for " << c.name << " in short form y^2 = x^3 + (" << E.A
    << ") x + (" << E.B << "), height " << height << '\n';
  bool ok = true;
  json anti = json::array();
  std::vector<RationalPoint> images;
  for (const auto& P : points) {
    const TwistImage img = twist_map(P, d);
    const bool good = img.is_rational();
    ok = ok && good;
    t << "  anti-invariant P = (" << P.x << ", " << P.y << ") -> (" << img.x << ", " << img.y << ")"
      << (good ? " rational on the twist" : " NOT rational") << '\n';
    anti.push_back({{"x", P.x.to_string()}, {"y", P.y.to_string()}, {"image_x", img.x.to_string()},
                    {"image_y", img.y.to_string()}, {"rational", good}});
    if (good) images.push_back(img.as_rational());
  }
  json inv = json::array();
  for (const auto& R : rational) {
    if (R.y == 0) continue;  // 2-torsion already listed above
    const QuadPoint P{QuadElt::rational(R.x, d), QuadElt::rational(R.y, d), E};
    const TwistImage img = twist_map(P, d);
    const bool good = !img.is_rational();
    ok = ok && good;
    t << "  invariant P = " << point_str(R) << " -> (" << img.x << ", " << img.y << ")"
      << (good ? " not rational" : " UNEXPECTEDLY rational") << '\n';
    inv.push_back({{"x", R.x.get_str()}, {"y", R.y.get_str()}, {"image_rational", !good}});
  }
  // The same box searched directly on the twist, x = d m / n.
  auto direct = rational_point_search(twist, height, d);
  auto key = [](const RationalPoint& P) { return std::make_pair(P.x.get_str(), P.y.get_str()); };
  auto sorted_keys = [&](const std::vector<RationalPoint>& v) {
    std::vector<std::pair<std::string, std::string>> ks;
    for (const auto& P : v) ks.push_back(key(P));
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  const bool bijection = sorted_keys(direct) == sorted_keys(images);
  ok = ok && bijection;
  t << "  anti-invariant points: " << points.size() << ", rational points on the twist in the same box: "
    << direct.size() << (bijection ? " (bijection)" : " (MISMATCH)") << '\n'
    << "  overall: " << (ok ? "pass" : "fail") << '\n';
  o.result = {{"lemma", "tmw"},        {"curve", curve_json(c)},       {"d", d.get_str()},
              {"height", height},      {"anti_invariant", anti},       {"invariant", inv},
              {"twist_points", direct.size()}, {"bijection", bijection}, {"passed", ok}};
  if (!ok) o.status = Status::CheckFailed;
  o.text = t.str();
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"twistgate: root numbers, twists and L-values for X0(15) and X0(21)", "twistgate"};
  app.require_subcommand(1);
  bool as_json = false;
  double margin = 10.0;
  app.add_flag("--json", as_json, "Emit one JSON document on standard output");
  app.add_option("--margin", margin, "Evidence margin: |L(E,1)| must exceed margin x tail bound")
      ->check(CLI::PositiveNumber);

  CurveSelection sel;
  std::int64_t p_value = 0;
  std::int64_t dmax = 0;
  std::int64_t terms = 0;
  double split = 1.0;
  std::int64_t ell = 0;
  std::int64_t aux = 0;
  int level_p = 0;
  std::size_t rank = 0;
  std::int64_t bound = 0;
  std::string d_list;
  unsigned threads = 0;
  std::string lemma;
  unsigned k = 0;
  std::size_t n = 0;
  std::size_t r_sum = 0;
  std::string d_single;
  std::int64_t height = 0;

  auto* curve_info = app.add_subcommand("curve-info", "Invariants, discriminant and j of a curve");
  add_curve_options(curve_info, sel, false);

  auto* reduction = app.add_subcommand("reduction", "Reduction type and point count at a prime");
  reduction->add_option("--p", p_value, "Prime")->required();
  add_curve_options(reduction, sel, true);

  auto* root_number = app.add_subcommand("root-number", "Global root number with its local ledger");
  add_curve_options(root_number, sel, true);

  auto* twist_check = app.add_subcommand("twist-root-check", "Twist formula vs local product for all d <= dmax");
  twist_check->add_option("--dmax", dmax, "Largest twist parameter")->required();
  add_curve_options(twist_check, sel, false);

  auto* lvalue = app.add_subcommand("lvalue", "Approximate L(E,1) with a rigorous tail bound");
  lvalue->add_option("--terms", terms, "Number of Dirichlet coefficients (default from the conductor)");
  lvalue->add_option("--split", split, "Split point of the approximate functional equation")
      ->check(CLI::PositiveNumber);
  add_curve_options(lvalue, sel, true);

  auto* serre = app.add_subcommand("serre-check", "Hypotheses of Serre's surjectivity criterion mod ell");
  serre->add_option("--ell", ell, "Odd prime ell")->required();
  auto* aux_opt = serre->add_option("--aux", aux, "Auxiliary good prime (default 7 for 15a1, 5 for 21a1)");
  add_curve_options(serre, sel, false);

  auto* search_cmd = app.add_subcommand("search", "Enumerate admissible tuples");
  search_cmd->add_option("--p", level_p, "5 or 7")->required()->check(CLI::IsMember({5, 7}));
  search_cmd->add_option("--r", rank, "Tuple length")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--bound", bound, "Largest d_i")->required();

  auto* hyp = app.add_subcommand("check-hypothesis", "Check every character twist over Q(sqrt d_1, ..., sqrt d_r)");
  hyp->add_option("--p", level_p, "5 or 7")->required()->check(CLI::IsMember({5, 7}));
  hyp->add_option("--d", d_list, "d_1,d_2,...")->required();
  hyp->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  auto* descent = app.add_subcommand("descent-check", "Verify the descent lemmas on concrete data");
  descent->add_option("--lemma", lemma, "sum or tmw")->required()->check(CLI::IsMember({"sum", "tmw"}));
  descent->add_option("--k", k, "Module exponent: (Z/2^k)^n");
  descent->add_option("--n", n, "Module rank");
  descent->add_option("--r", r_sum, "Number of generators");
  descent->add_option("--d", d_single, "Squarefree d > 1");
  descent->add_option("--height", height, "Search height for x = m/n");
  add_curve_options(descent, sel, false);

  std::vector<std::string> argv_storage{"twistgate"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  std::string command = args.empty() ? "" : args.front();
  auto emit_error = [&](std::string_view type, const std::string& message) {
    if (as_json) {
      json doc{{"command", command},
               {"status", status_name(Status::UnsupportedInput)},
               {"exit_code", static_cast<int>(Status::UnsupportedInput)},
               {"error", {{"type", type}, {"message", message}}}};
      out << doc.dump(2) << '\n';
    }
    err << "twistgate: " << message << '\n';
    return static_cast<int>(Status::UnsupportedInput);
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    const std::string hint = app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help();
    if (!as_json) err << hint;
    return emit_error("UsageError", e.what());
  }
  command = app.get_subcommands().front()->get_name();

  Outcome outcome;
  try {
    if (curve_info->parsed()) {
      outcome = cmd_curve_info(sel);
    } else if (reduction->parsed()) {
      outcome = cmd_reduction(sel, p_value);
    } else if (root_number->parsed()) {
      outcome = cmd_root_number(sel);
    } else if (twist_check->parsed()) {
      outcome = cmd_twist_root_check(sel, dmax);
    } else if (lvalue->parsed()) {
      outcome = cmd_lvalue(sel, terms, split, margin);
    } else if (serre->parsed()) {
      outcome = cmd_serre_check(sel, ell, aux_opt->count() ? std::optional<std::int64_t>(aux) : std::nullopt);
    } else if (search_cmd->parsed()) {
      outcome = cmd_search(level_p, rank, bound);
    } else if (hyp->parsed()) {
      outcome = cmd_check_hypothesis(level_p, d_list, margin, threads);
    } else if (descent->parsed()) {
      if (lemma == "sum") {
        if (k == 0 || n == 0 || r_sum == 0) throw CLI::ValidationError("descent-check", "--lemma sum needs --k, --n, --r");
        outcome = cmd_descent_sum(k, n, r_sum);
      } else {
        if (d_single.empty() || height == 0) throw CLI::ValidationError("descent-check", "--lemma tmw needs --d and --height");
        outcome = cmd_descent_tmw(sel, d_single, height);
      }
    }
  } catch (const CLI::ParseError& e) {
    return emit_error("UsageError", e.what());
  } catch (const Error& e) {
    return emit_error(e.kind(), e.what());
  } catch (const std::exception& e) {
    return emit_error("InternalError", e.what());
  }

  if (as_json) {
    json doc{{"command", command},
             {"status", status_name(outcome.status)},
             {"exit_code", static_cast<int>(outcome.status)},
             {"result", outcome.result}};
    out << doc.dump(2) << '\n';
  } else {
    out << outcome.text;
  }
  return static_cast<int>(outcome.status);
}

}  // namespace twistgate::cli
