#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "isotriv/configs.hpp"
#include "isotriv/kodaira.hpp"
#include "isotriv/sl2z.hpp"
#include "isotriv/torus_analysis.hpp"
#include "isotriv/verify.hpp"
#include "isotriv/weierstrass.hpp"

namespace isotriv::cli {

namespace {

using nlohmann::json;

// Raised for malformed flag combinations detected after parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit_json(const std::string& path, const json& j, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << j.dump(2) << "\n";
}

// With --json - the JSON document is the only thing on stdout.
std::ostream& text_stream(const std::string& json_path, std::ostream& out) {
  static std::ostream discard(nullptr);
  return json_path == "-" ? discard : out;
}

std::string class_name(const sl2z::UnimodularMatrix& rep) {
  if (rep.is_identity()) return "I";
  if (rep.is_minus_identity()) return "-I";
  for (int k = 1; k < 6; ++k) {
    if (sl2z::alpha().pow(k) == rep) return k == 1 ? "alpha" : "alpha^" + std::to_string(k);
  }
  for (int k = 1; k < 4; ++k) {
    if (sl2z::beta().pow(k) == rep) return k == 1 ? "beta" : "beta^" + std::to_string(k);
  }
  return rep.to_string();
}

// ---------------------------------------------------------------------------
// monodromy

struct MonodromyArgs {
  std::string matrix;
  std::string word;
  std::string conjugate_to;
  std::size_t word_length = configs::kDefaultRigidityWordLength;
  std::string json_path;
};

int cmd_monodromy(const MonodromyArgs& a, std::ostream& sink) {
  std::ostream& out = text_stream(a.json_path, sink);
  if (a.matrix.empty() == a.word.empty()) throw UsageError("give exactly one of --matrix and --word");
  const auto m = a.matrix.empty() ? sl2z::ModularWord::parse(a.word).evaluate() : sl2z::UnimodularMatrix::parse(a.matrix);
  const auto nf = sl2z::normal_form(m);
  const auto ord = sl2z::order(m);

  json j{{"matrix", m.to_string()}, {"normal_form", nf.display()}, {"order", sl2z::order_to_string(ord)}};
  out << "matrix " << m.to_string() << "\n";
  if (ord) {
    out << "order " << *ord << ", word " << nf.display() << "\n";
    const auto dec = sl2z::elliptic_decomposition(m);
    out << "class " << class_name(dec.representative) << ", conjugator " << dec.conjugator.display() << "\n";
    j["class"] = class_name(dec.representative);
    j["conjugator"] = dec.conjugator.display();
  } else {
    const Integer t = abs(m.trace());
    out << "infinite order, word " << nf.display() << "\n";
    out << "note: |trace| = " << t.get_str() << (t == 2 ? ", parabolic" : " > 2, hyperbolic") << "\n";
    j["class"] = nullptr;
  }

  if (!a.conjugate_to.empty()) {
    const auto other = sl2z::UnimodularMatrix::parse(a.conjugate_to);
    const auto r = sl2z::is_conjugate(m, other, a.word_length);
    json c{{"target", other.to_string()}, {"search_bound", a.word_length}, {"conjugate", r.conjugate}};
    out << "conjugate to " << other.to_string() << ": ";
    if (r.conjugate) {
      out << "yes, witness " << r.witness->display() << "\n";
      c["witness"] = r.witness->display();
    } else if (r.minimal_witness_length) {
      out << "not within length " << a.word_length << " (shortest witness has length " << *r.minimal_witness_length
          << ")\n";
      c["minimal_witness_length"] = *r.minimal_witness_length;
    } else {
      out << "no\n";
    }
    j["conjugacy"] = c;
  }
  emit_json(a.json_path, j, sink);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyArgs {
  std::string j_case;
  std::string a;
  std::string b;
  std::string json_path;
};

int cmd_classify(const ClassifyArgs& args, std::ostream& sink) {
  std::ostream& out = text_stream(args.json_path, sink);
  using weierstrass::JCase;
  using weierstrass::RationalPolynomial;
  std::optional<RationalPolynomial> a, b;
  if (!args.a.empty()) a = RationalPolynomial::parse(args.a);
  if (!args.b.empty()) b = RationalPolynomial::parse(args.b);

  JCase j = JCase::Generic;
  std::string constancy;
  if (args.j_case.empty()) {
    if (!a || !b) throw UsageError("without --j both --a and --b are needed");
    const auto r = weierstrass::j_invariant_constancy(*a, *b);
    constancy = weierstrass::j_constancy_name(r.kind);
    switch (r.kind) {
      case weierstrass::JConstancy::Constant0: j = JCase::Zero; break;
      case weierstrass::JConstancy::Constant1728: j = JCase::J1728; break;
      case weierstrass::JConstancy::ConstantOther: j = JCase::Generic; break;
      case weierstrass::JConstancy::NonConstant:
        out << "j-invariant: non-constant, not isotrivial\n";
        return kExitOk;
    }
  } else {
    j = weierstrass::parse_j_case(args.j_case);
    if (j == JCase::Zero && (a || !b)) throw UsageError("--j 0 takes --b only (a vanishes)");
    if (j == JCase::J1728 && (b || !a)) throw UsageError("--j 1728 takes --a only (b vanishes)");
  }

  const auto report = j == JCase::Zero    ? weierstrass::classify_surface(j, *b)
                      : j == JCase::J1728 ? weierstrass::classify_surface(j, *a)
                                          : weierstrass::generic_report();
  json rj = report.to_json();
  if (!constancy.empty()) rj["j_constancy"] = constancy;

  if (!constancy.empty()) out << "j-invariant: " << constancy << "\n";
  out << "j-case: " << weierstrass::j_case_name(j) << "\n";
  if (j == JCase::Zero) out << "b(t) = " << b->to_string() << "\n";
  if (j == JCase::J1728) out << "a(t) = " << a->to_string() << "\n";
  if (report.profile) out << "zero profile: " << report.profile->to_string() << "\n";
  out << "fibres:";
  for (const auto& f : rj["fibres"]) {
    out << " " << kodaira::display_name(kodaira::parse_kind(f["type"].get<std::string>())) << " x"
        << f["count"].get<unsigned>();
  }
  out << "\n";
  out << "singularities:";
  if (rj["local_singularities"].empty()) out << " none";
  for (const auto& s : rj["local_singularities"]) out << " " << s["type"].get<std::string>() << " x" << s["count"].get<unsigned>();
  out << "\n";
  out << "euler: " << rj["euler_ledger"].get<std::string>() << " = " << report.euler_total << "\n";
  if (report.valid_k3) {
    out << "verdict: valid isotrivial K3\n";
  } else {
    out << "verdict: invalid\n";
    for (const auto& r : report.reasons) out << "  - " << r << "\n";
  }
  emit_json(args.json_path, rj, sink);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// configs

struct ConfigsArgs {
  std::string profiles;
  bool rigidity = false;
  std::string check;
  std::string j_case;
  std::size_t word_length = configs::kDefaultRigidityWordLength;
  std::string json_path;
};

configs::FibreConfiguration parse_configuration(const std::string& j_case, const std::string& text) {
  std::vector<configs::FibreCount> fibres;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    const auto kind = kodaira::parse_kind(item.substr(0, colon));
    unsigned count = 1;
    if (colon != std::string::npos) count = static_cast<unsigned>(to_long(parse_integer(item.substr(colon + 1))));
    fibres.push_back({kind, count});
  }
  if (fibres.empty()) throw UsageError("empty fibre list");
  const auto j = j_case.empty() ? weierstrass::JCase::Generic : weierstrass::parse_j_case(j_case);
  return configs::FibreConfiguration(j, fibres);
}

int cmd_configs(const ConfigsArgs& a, std::ostream& sink) {
  std::ostream& out = text_stream(a.json_path, sink);
  json j;
  if (!a.check.empty()) {
    const auto config = parse_configuration(a.j_case, a.check);
    const auto r = configs::necessary_conditions(config);
    out << config.to_string() << ": " << configs::verdict_name(r.verdict) << "\n";
    out << "euler " << config.euler_ledger() << " = " << r.euler_sum << "\n";
    if (r.modulus > 0) out << "exponent sum " << r.exponent_sum << " mod " << r.modulus << "\n";
    j = {{"configuration", config.to_json()},
         {"verdict", configs::verdict_name(r.verdict)},
         {"euler_sum", r.euler_sum},
         {"exponent_sum", r.exponent_sum},
         {"modulus", r.modulus}};
  } else if (!a.profiles.empty()) {
    const auto jc = weierstrass::parse_j_case(a.profiles);
    const auto profiles = configs::enumerate_profiles(jc);
    out << profiles.size() << " zero profiles for j = " << weierstrass::j_case_name(jc) << "\n";
    j = json::array();
    for (const auto& p : profiles) {
      const auto config = configs::configuration_for_profile(jc, p);
      out << "  " << p.to_string() << " -> " << config.to_string() << ", euler " << config.euler_sum() << "\n";
      j.push_back({{"profile", p.to_string()}, {"configuration", config.to_json()}, {"euler_sum", config.euler_sum()}});
    }
  } else {
    const auto starred = configs::enumerate_starred();
    out << starred.size() << " starred configurations with Euler sum 24\n";
    j = json::array();
    for (const auto& c : starred) {
      out << "  " << c.to_string() << "  " << c.euler_ledger() << " = " << c.euler_sum() << "\n";
      json cj{{"configuration", c.to_json()}, {"euler_ledger", c.euler_ledger()}};
      if (a.rigidity) {
        const auto r = configs::rigid_configuration_check(c, a.word_length);
        out << "    rigidity (conjugators up to length " << a.word_length << "): ";
        if (r.forced) {
          out << "forced, monodromy group of order " << r.monodromy_group_order << "\n";
          for (const auto& m : r.forced_monodromies) {
            out << "      " << kodaira::display_name(m.kind) << " " << m.monodromy.to_string() << "\n";
          }
        } else {
          out << r.solutions.size() << " solutions\n";
        }
        cj["rigidity"] = r.to_json();
      }
      j.push_back(cj);
    }
  }
  emit_json(a.json_path, j, sink);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// torus

struct ActionArgs {
  std::string spec;
  std::string file;
  std::string field;
  std::string torsion;
  std::size_t order_cap = torus::kDefaultOrderCap;
  std::string json_path;
};

void add_action_options(CLI::App* cmd, ActionArgs& a) {
  auto* spec = cmd->add_option("--action", a.spec, "Built-in action, e.g. cyclic-surface:4, translated:3, matsushita:6,3");
  auto* file = cmd->add_option("--action-file", a.file, "Action as JSON")->check(CLI::ExistingFile);
  spec->excludes(file);
  cmd->add_option("--field", a.field, "gauss or eisenstein (where the order allows either)");
  cmd->add_option("--torsion", a.torsion, "2-torsion point p/q,p/q for translated actions");
  cmd->add_option("--order-cap", a.order_cap, "Refuse groups larger than this")->check(CLI::PositiveNumber);
  cmd->add_option("--json", a.json_path, "Write a JSON report to this path (- for stdout)");
}

torus::FiniteActionGroup load_action(const ActionArgs& a) {
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    return torus::FiniteActionGroup::from_json(json::parse(in), a.order_cap);
  }
  if (a.spec.empty()) throw UsageError("give --action or --action-file");
  torus::BuiltinOptions opts;
  opts.order_cap = a.order_cap;
  if (!a.field.empty()) opts.field = torus::parse_field(a.field);
  if (!a.torsion.empty()) {
    opts.torsion.clear();
    std::stringstream ss(a.torsion);
    std::string x;
    while (std::getline(ss, x, ',')) opts.torsion.push_back(parse_rational(x));
  }
  return torus::builtin_action(a.spec, opts);
}

void print_header(const torus::FiniteActionGroup& g, std::ostream& out) {
  out << "action " << g.name() << ": order " << g.order() << " on E^" << g.complex_dimension() << " ("
      << torus::field_name(g.field()) << ")\n";
}

struct FixedArgs {
  std::string element;
  bool all = false;
  std::string contains;
  std::size_t limit = 64;
};

int cmd_fixed_points(const ActionArgs& a, const FixedArgs& f, std::ostream& sink) {
  std::ostream& out = text_stream(a.json_path, sink);
  const auto g = load_action(a);
  print_header(g, out);
  std::vector<std::pair<std::string, torus::TorusAutomorphism>> targets;
  if (!f.element.empty()) {
    targets.emplace_back(f.element, g.evaluate_word(f.element));
  } else if (f.all) {
    for (std::size_t i = 1; i < g.order(); ++i) targets.emplace_back(g.word(i), g.element(i));
  } else {
    for (const auto& gen : g.generators()) targets.emplace_back(gen.name, gen.map);
  }
  std::optional<torus::TorusPoint> probe;
  if (!f.contains.empty()) probe = torus::TorusPoint::parse(f.contains);

  json j = json::array();
  for (const auto& [name, map] : targets) {
    const auto locus = torus::fixed_locus(map);
    json e{{"element", name}, {"solvable", locus.solvable()}};
    out << name << ": ";
    if (!locus.solvable()) {
      out << "no fixed points\n";
    } else {
      out << "dimension " << locus.dimension() << ", " << locus.component_count().get_str()
          << (locus.dimension() == 0 ? " points" : " components") << "\n";
      e["dimension"] = locus.dimension();
      e["components"] = locus.component_count().get_str();
      if (locus.component_count() <= Integer(static_cast<unsigned long>(f.limit))) {
        json samples = json::array();
        for (const auto& c : locus.components()) {
          out << "  " << c.sample.to_string();
          if (c.dimension > 0) out << " + span" << c.directions.to_string();
          out << "\n";
          samples.push_back(c.sample.to_string());
        }
        e["samples"] = samples;
      }
    }
    if (probe) {
      const bool in = locus.contains(*probe);
      out << "  " << probe->to_string() << (in ? " is fixed" : " is not fixed") << "\n";
      e["contains"] = in;
    }
    j.push_back(e);
  }
  emit_json(a.json_path, {{"action", g.name()}, {"elements", j}}, sink);
  return kExitOk;
}

int cmd_inventory(const ActionArgs& a, std::ostream& sink) {
  std::ostream& out = text_stream(a.json_path, sink);
  const auto g = load_action(a);
  print_header(g, out);
  const auto inv = torus::singularity_inventory(g);
  out << "isolated points by stabilizer order:";
  if (inv.points_by_stabilizer_order.empty()) out << " none";
  out << "\n";
  for (auto it = inv.points_by_stabilizer_order.rbegin(); it != inv.points_by_stabilizer_order.rend(); ++it) {
    out << "  order " << it->first << ": " << it->second << " points in "
        << inv.point_orbits_by_stabilizer_order.at(it->first) << " orbits\n";
  }
  if (!inv.orbits_by_label.empty()) {
    out << "labels:";
    for (auto it = inv.orbits_by_label.rbegin(); it != inv.orbits_by_label.rend(); ++it) {
      out << " " << it->first << " x" << it->second;
    }
    out << "\n";
  }
  out << "strata (" << inv.strata.size() << " orbits):\n";
  for (const auto& s : inv.strata) {
    out << "  dim " << s.dimension << ", slice C^" << s.transverse_dimension << ", |H| " << s.stabilizer.size()
        << (s.cyclic ? " cyclic" : "") << (s.generated_by_reflections ? ", reflection group" : "")
        << (s.transverse_minus_one ? ", contains -1" : "");
    if (s.label) out << ", " << *s.label;
    out << ", orbit " << s.orbit_size << ", through " << s.sample.to_string() << "\n";
  }
  for (const auto& n : inv.notes) out << "note: " << n << "\n";
  emit_json(a.json_path, inv.to_json(g), sink);
  return kExitOk;
}

int cmd_invariants(const ActionArgs& a, std::optional<std::size_t> degree, bool base, std::ostream& sink) {
  std::ostream& out = text_stream(a.json_path, sink);
  const auto g0 = load_action(a);
  const auto g = base ? torus::base_projection(g0) : g0;
  print_header(g, out);
  json j{{"action", g.name()}};
  json dims = json::object();
  for (std::size_t p = 0; p <= g.complex_dimension(); ++p) {
    if (degree && *degree != p) continue;
    const auto h = torus::invariant_form_dimension(g, p);
    out << "h^{" << p << ",0} = " << h << "\n";
    dims[std::to_string(p)] = h;
  }
  if (degree && *degree > g.complex_dimension()) torus::invariant_form_dimension(g, *degree);
  j["h_p0"] = dims;
  emit_json(a.json_path, j, sink);
  return kExitOk;
}

int cmd_obstruction(const ActionArgs& a, std::ostream& sink) {
  std::ostream& out = text_stream(a.json_path, sink);
  const auto g = load_action(a);
  print_header(g, out);
  const auto r = torus::desingularization_obstruction(g);
  out << "verdict " << torus::verdict_name(r.verdict) << "\n";
  out << "reason: " << r.reason << "\n";
  if (r.witness) {
    out << "witness: stabilizer {";
    for (std::size_t i = 0; i < r.witness->stabilizer.size(); ++i) {
      out << (i ? ", " : "") << g.word(r.witness->stabilizer[i]);
    }
    out << "} at " << r.witness->sample.to_string() << "\n";
  }
  emit_json(a.json_path, r.to_json(g), sink);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::size_t word_length = configs::kDefaultRigidityWordLength;
  bool skip_rigidity = false;
  std::string json_path;
};

int cmd_verify(const VerifyArgs& a, std::ostream& sink) {
  std::ostream& out = text_stream(a.json_path, sink);
  verify::VerifyOptions opts;
  opts.word_length = a.word_length;
  opts.rigidity = !a.skip_rigidity;
  const auto report = verify::verify_claims(opts);
  out << report.to_text();
  emit_json(a.json_path, report.to_json(), sink);
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isotrivial elliptic K3 surfaces and finite quotients of CM tori", "isotriv"};
  app.require_subcommand(1);
  std::function<int()> action;

  MonodromyArgs mono;
  auto* mono_cmd = app.add_subcommand("monodromy", "Normal form, order and conjugacy class of an SL(2,Z) element");
  mono_cmd->add_option("--matrix", mono.matrix, "Matrix as [[a,b],[c,d]]");
  mono_cmd->add_option("--word", mono.word, "Word in a, a2, b with optional sign");
  mono_cmd->add_option("--conjugate-to", mono.conjugate_to, "Decide conjugacy to this matrix");
  mono_cmd->add_option("--word-length", mono.word_length, "Conjugator length bound");
  mono_cmd->add_option("--json", mono.json_path, "Write a JSON report to this path (- for stdout)");
  mono_cmd->callback([&] { action = [&] { return cmd_monodromy(mono, out); }; });

  ClassifyArgs cls;
  auto* cls_cmd = app.add_subcommand("classify", "Singular fibres of an isotrivial Weierstrass K3");
  cls_cmd->add_option("--j", cls.j_case, "0, 1728 or generic; inferred from --a and --b when omitted");
  cls_cmd->add_option("--a", cls.a, "a(t) coefficients, constant term first");
  cls_cmd->add_option("--b", cls.b, "b(t) coefficients, constant term first");
  cls_cmd->add_option("--json", cls.json_path, "Write a JSON report to this path (- for stdout)");
  cls_cmd->callback([&] { action = [&] { return cmd_classify(cls, out); }; });

  ConfigsArgs cfg;
  auto* cfg_cmd = app.add_subcommand("configs", "Starred configurations, zero profiles and monodromy checks");
  cfg_cmd->add_option("--profiles", cfg.profiles, "List zero profiles for j = 0 or 1728");
  cfg_cmd->add_flag("--rigidity", cfg.rigidity, "Run the bounded rigidity search on each starred configuration");
  cfg_cmd->add_option("--check", cfg.check, "Fibre list such as IVstar:3 or IIstar,IVstar,I0star");
  cfg_cmd->add_option("--j", cfg.j_case, "j-case recorded with --check");
  cfg_cmd->add_option("--word-length", cfg.word_length, "Conjugator length bound for --rigidity");
  cfg_cmd->add_option("--json", cfg.json_path, "Write a JSON report to this path (- for stdout)");
  cfg_cmd->callback([&] { action = [&] { return cmd_configs(cfg, out); }; });

  auto* torus_cmd = app.add_subcommand("torus", "Finite group actions on products of CM elliptic curves");
  torus_cmd->require_subcommand(1);

  ActionArgs fixed_action;
  FixedArgs fixed;
  auto* fixed_cmd = torus_cmd->add_subcommand("fixed-points", "Fixed loci of generators or chosen elements");
  add_action_options(fixed_cmd, fixed_action);
  fixed_cmd->add_option("--element", fixed.element, "Word in the generator names, e.g. gamma1*gamma2");
  fixed_cmd->add_flag("--all", fixed.all, "Every non-identity element");
  fixed_cmd->add_option("--contains", fixed.contains, "Lattice-coordinate point to test");
  fixed_cmd->add_option("--limit", fixed.limit, "List components only when there are at most this many");
  fixed_cmd->callback([&] { action = [&] { return cmd_fixed_points(fixed_action, fixed, out); }; });

  ActionArgs inv_action;
  auto* inv_cmd = torus_cmd->add_subcommand("inventory", "Singular strata of the quotient");
  add_action_options(inv_cmd, inv_action);
  inv_cmd->callback([&] { action = [&] { return cmd_inventory(inv_action, out); }; });

  ActionArgs forms_action;
  std::optional<std::size_t> degree;
  bool base = false;
  auto* forms_cmd = torus_cmd->add_subcommand("invariants", "Dimensions of invariant holomorphic forms");
  add_action_options(forms_cmd, forms_action);
  forms_cmd->add_option("--degree", degree, "Only this form degree");
  forms_cmd->add_flag("--base", base, "Use the induced action on the even factors");
  forms_cmd->callback([&] { action = [&] { return cmd_invariants(forms_action, degree, base, out); }; });

  ActionArgs obs_action;
  auto* obs_cmd = torus_cmd->add_subcommand("obstruction", "Symplectic desingularization verdict");
  add_action_options(obs_cmd, obs_action);
  obs_cmd->callback([&] { action = [&] { return cmd_obstruction(obs_action, out); }; });

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify-paper", "Recompute every reference value and compare");
  ver_cmd->add_option("--word-length", ver.word_length, "Conjugator length bound for the rigidity checks");
  ver_cmd->add_flag("--skip-rigidity", ver.skip_rigidity, "Skip the rigidity searches");
  ver_cmd->add_option("--json", ver.json_path, "Write a JSON report to this path (- for stdout)");
  ver_cmd->callback([&] { action = [&] { return cmd_verify(ver, out); }; });

  std::vector<const char*> argv{"isotriv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace isotriv::cli
