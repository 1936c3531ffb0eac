// Command-line front end: build tables, classify them, run operator
// censuses and identity verifications, and query rack-algebra operators.
//
// Exit codes: 0 success, 1 a verified mathematical claim failed on the
// given input, 2 usage or I/O error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rbrack/algebra.hpp"
#include "rbrack/cayley.hpp"
#include "rbrack/construct.hpp"
#include "rbrack/corpus.hpp"
#include "rbrack/group.hpp"
#include "rbrack/io.hpp"
#include "rbrack/operators.hpp"

using namespace rbrack;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

long long default_max_space() {
  if (const char* env = std::getenv("RBRACK_MAX_SPACE")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 100000000;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json(j, out_path);
}

// Inline JSON text or a path to a JSON file.
nlohmann::json inline_or_file(const std::string& s) {
  if (!s.empty() && (s[0] == '[' || s[0] == '{')) return nlohmann::json::parse(s);
  return load_json(s);
}

CayleyTable load_table(const std::string& path) {
  CayleyTable t = table_from_json(load_json(path));
  t.validate();
  return t;
}

FiniteGroup load_group(const std::string& path) {
  return validate_group(table_from_json(load_json(path)));
}

OperatorMap parse_operator(const std::string& s) {
  return operator_from_json(inline_or_file(s));
}

PhiAction parse_phi(const std::string& s) { return phi_from_json(inline_or_file(s)); }

struct BuildArgs {
  std::string what;
  std::vector<std::string> args;
  std::string out;
};

int run_build(const BuildArgs& a) {
  auto arg_int = [&](size_t i) { return std::stoi(a.args.at(i)); };
  auto need = [&](size_t k, const std::string& usage) {
    if (a.args.size() != k)
      throw CLI::ValidationError("build " + a.what + " expects: " + usage);
  };

  CayleyTable t;
  std::string kind = "rack";
  if (a.what == "trivial") {
    need(1, "N");
    t = trivial_quandle(arg_int(0));
  } else if (a.what == "dihedral") {
    need(1, "N");
    t = dihedral_quandle(arg_int(0));
  } else if (a.what == "cyclic-group") {
    need(1, "N");
    t = cyclic_group(arg_int(0)).base;
    kind = "group";
  } else if (a.what == "symmetric-group") {
    need(1, "N");
    t = symmetric_group(arg_int(0)).base;
    kind = "group";
  } else if (a.what == "group-product") {
    need(2, "G1.json G2.json");
    t = direct_product(load_group(a.args[0]), load_group(a.args[1])).base;
    kind = "group";
  } else if (a.what == "conj") {
    need(2, "G.json M");
    t = conj_quandle(load_group(a.args[0]), std::stoll(a.args[1]));
  } else if (a.what == "core") {
    need(1, "G.json");
    t = core_quandle(load_group(a.args[0]));
  } else if (a.what == "alexander") {
    need(2, "G.json PHI(perm json or file)");
    nlohmann::json pj = inline_or_file(a.args[1]);
    t = alexander_quandle(load_group(a.args[0]), Perm(pj.get<std::vector<Elt>>()));
  } else if (a.what == "product") {
    need(2, "T1.json T2.json");
    t = product_rack(load_table(a.args[0]), load_table(a.args[1]));
  } else if (a.what == "semidirect") {
    need(3, "A.json X.json PHI.json");
    t = semidirect_rack(load_table(a.args[0]), load_table(a.args[1]),
                        parse_phi(a.args[2]));
  } else if (a.what == "holomorph") {
    need(1, "T.json");
    t = holomorph(load_table(a.args[0]));
  } else if (a.what == "union") {
    need(3, "T1.json T2.json SPEC.json");
    t = union_rack(load_table(a.args[0]), load_table(a.args[1]),
                   union_spec_from_json(inline_or_file(a.args[2])));
  } else if (a.what == "b-conjugation") {
    need(2, "G.json B");
    t = b_conjugation(load_group(a.args[0]), parse_operator(a.args[1]));
  } else if (a.what == "b-core") {
    need(2, "G.json B");
    t = b_core(load_group(a.args[0]), parse_operator(a.args[1]));
  } else {
    throw CLI::ValidationError("unknown construction: " + a.what);
  }
  emit(table_to_json(t, kind), a.out);
  return kExitOk;
}

json verdict(const std::string& theorem, bool holds, json detail) {
  json j;
  j["theorem"] = theorem;
  j["verdict"] = holds ? "PASS" : "FAIL";
  j["detail"] = std::move(detail);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite racks, quandles and Rota-Baxter / averaging operators"};
  app.require_subcommand(1);

  // ---- build -------------------------------------------------------------
  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "construct a table and write it as JSON");
  build->add_option("what", build_args.what,
                    "trivial|dihedral|cyclic-group|symmetric-group|group-product|"
                    "conj|core|alexander|product|semidirect|holomorph|union|"
                    "b-conjugation|b-core")
      ->required();
  build->add_option("args", build_args.args, "construction arguments");
  build->add_option("-o,--output", build_args.out, "output path (default stdout)");

  // ---- classify ----------------------------------------------------------
  std::string cls_table, cls_out;
  CLI::App* cls = app.add_subcommand("classify", "axiom report for a table");
  cls->add_option("table", cls_table, "table JSON file")->required();
  cls->add_option("-o,--output", cls_out, "output path (default stdout)");

  // ---- search ------------------------------------------------------------
  std::string sr_table, sr_kind = "rb", sr_out, sr_action, sr_phi;
  long long sr_max = default_max_space();
  int sr_workers = 1;
  CLI::App* sr = app.add_subcommand("search", "exhaustive operator census");
  sr->add_option("table", sr_table, "table JSON file")->required();
  sr->add_option("-k,--kind", sr_kind,
                 "rb|averaging-right|averaging-left|relative-rb|relative-averaging");
  sr->add_option("-o,--output", sr_out, "census JSON-lines output path");
  sr->add_option("--action", sr_action, "acting rack A (relative kinds; default: X itself)");
  sr->add_option("--phi", sr_phi, "phi action file (relative kinds; default: inner)");
  sr->add_option("--max-space", sr_max, "candidate-count cap");
  sr->add_option("-j,--workers", sr_workers, "worker threads")->check(CLI::PositiveNumber);

  // ---- verify ------------------------------------------------------------
  std::string vf_theorem, vf_table, vf_op, vf_op2, vf_table2, vf_spec, vf_phi, vf_out;
  std::string vf_field = "Q";
  std::int64_t vf_prime = 7;
  int vf_weight = 1;
  CLI::App* vf = app.add_subcommand("verify", "check a named identity / derived structure");
  vf->add_option("theorem", vf_theorem,
                 "rack-rb|averaging-right|averaging-left|averaging-derived|"
                 "relative-rb|relative-averaging|graph-criterion|rrb-derived|"
                 "group-rb|group-derived|group-hypotheses|union-averaging|"
                 "weight-minus-one|extension-averaging")
      ->required();
  vf->add_option("table", vf_table, "table JSON file (rack or group per theorem)")->required();
  vf->add_option("-B,--operator", vf_op, "operator map (inline JSON or file)");
  vf->add_option("--operator2", vf_op2, "second operator (union-averaging)");
  vf->add_option("--table2", vf_table2, "second table (union-averaging)");
  vf->add_option("--spec", vf_spec, "union spec file (union-averaging)");
  vf->add_option("--phi", vf_phi, "phi action (relative theorems; default: inner)");
  vf->add_option("--weight", vf_weight, "group RB weight, +1 or -1");
  vf->add_option("--field", vf_field, "Q or Fp (extension-averaging)");
  vf->add_option("-p,--prime", vf_prime, "prime for Fp");
  vf->add_option("-o,--output", vf_out, "report output path (default stdout)");

  // ---- census-report -----------------------------------------------------
  std::string cr_table, cr_out;
  long long cr_max = default_max_space();
  int cr_workers = 1;
  CLI::App* cr = app.add_subcommand("census-report",
                                    "operator counts for every kind on one table");
  cr->add_option("table", cr_table, "table JSON file")->required();
  cr->add_option("-o,--output", cr_out, "output path (default stdout)");
  cr->add_option("--max-space", cr_max, "candidate-count cap");
  cr->add_option("-j,--workers", cr_workers, "worker threads")->check(CLI::PositiveNumber);

  // ---- algebra -----------------------------------------------------------
  CLI::App* alg = app.add_subcommand("algebra", "rack-algebra operators over exact fields");
  alg->require_subcommand(1);

  std::string ms_table, ms_out;
  std::int64_t ms_p = 2, ms_lambda = 1;
  long long ms_max = default_max_space();
  CLI::App* ms = alg->add_subcommand("monomial-search",
                                     "monomial weight-lambda operators over F_p");
  ms->add_option("table", ms_table, "table JSON file")->required();
  ms->add_option("-p,--prime", ms_p, "field modulus (prime)")->required();
  ms->add_option("--lambda", ms_lambda, "weight as an integer");
  ms->add_option("--max-space", ms_max, "candidate-count cap");
  ms->add_option("-o,--output", ms_out, "output path (default stdout)");

  std::string cs_table, cs_op, cs_out;
  CLI::App* cs = alg->add_subcommand("condition-systems",
                                     "weight -1 characterization report for extend(B)");
  cs->add_option("table", cs_table, "table JSON file")->required();
  cs->add_option("-B,--operator", cs_op, "operator map")->required();
  cs->add_option("-o,--output", cs_out, "output path (default stdout)");

  std::string ex_table, ex_op, ex_field = "Q", ex_out;
  std::int64_t ex_p = 7;
  CLI::App* ex = alg->add_subcommand("extend-check",
                                     "linear extension of a set averaging operator");
  ex->add_option("table", ex_table, "table JSON file")->required();
  ex->add_option("-B,--operator", ex_op, "operator map")->required();
  ex->add_option("--field", ex_field, "Q or Fp");
  ex->add_option("-p,--prime", ex_p, "prime for Fp");
  ex->add_option("-o,--output", ex_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return run_build(build_args);

    if (*cls) {
      emit(report_to_json(classify(load_table(cls_table))), cls_out);
      return kExitOk;
    }

    if (*sr) {
      auto kind = kind_from_name(sr_kind);
      if (!kind) throw CLI::ValidationError("unknown kind: " + sr_kind);
      CayleyTable t = load_table(sr_table);
      OperatorCensus c;
      if (*kind == OperatorKind::RelativeRB || *kind == OperatorKind::RelativeAveraging) {
        CayleyTable a = sr_action.empty() ? t : load_table(sr_action);
        PhiAction phi = sr_phi.empty() ? PhiAction::inner(t) : parse_phi(sr_phi);
        c = relative_census(t, a, phi, *kind, sr_max, sr_workers);
      } else {
        c = census(t, *kind, sr_max, sr_workers);
      }
      if (!sr_out.empty()) save_census_jsonl(c, sr_out);
      std::cout << census_summary_json(c).dump() << "\n";
      return kExitOk;
    }

    if (*cr) {
      CayleyTable t = load_table(cr_table);
      json j;
      j["structure"] = t.hash();
      j["n"] = t.n;
      for (OperatorKind k : {OperatorKind::RackRB, OperatorKind::AveragingRight,
                             OperatorKind::AveragingLeft}) {
        OperatorCensus c = census(t, k, cr_max, cr_workers);
        j[kind_name(k)] = {{"count", c.operators.size()}, {"space", c.space_size}};
      }
      PhiAction inner = PhiAction::inner(t);
      for (OperatorKind k : {OperatorKind::RelativeRB, OperatorKind::RelativeAveraging}) {
        OperatorCensus c = relative_census(t, t, inner, k, cr_max, cr_workers);
        j[kind_name(k)] = {{"count", c.operators.size()}, {"space", c.space_size}};
      }
      emit(j, cr_out);
      return kExitOk;
    }

    if (*ms) {
      Field f = Field::prime(ms_p);
      auto found = monomial_rb_search(load_table(ms_table), ms_p,
                                      fld_from_int(f, ms_lambda), ms_max);
      json j;
      j["p"] = ms_p;
      j["lambda"] = ms_lambda;
      j["count"] = found.size();
      j["operators"] = json::array();
      for (const MonomialOperator& m : found) j["operators"].push_back(monomial_to_json(m));
      emit(j, ms_out);
      return kExitOk;
    }

    if (*cs) {
      CayleyTable t = load_table(cs_table);
      ConditionSystemsReport r = condition_systems(t, parse_operator(cs_op));
      json d;
      d["system1"] = r.system1;
      d["system2"] = r.system2;
      d["per_pair"] = r.per_pair;
      d["algebraic_rb_minus1"] = r.algebraic_rb_minus1;
      d["algebraic_rb_zero"] = r.algebraic_rb_zero;
      d["algebraic_rb_one"] = r.algebraic_rb_one;
      d["equivalence_ok"] = r.equivalence_ok;
      emit(verdict("weight-minus-one-characterization", r.equivalence_ok, d), cs_out);
      return r.equivalence_ok ? kExitOk : kExitFalsified;
    }

    if (*ex) {
      CayleyTable t = load_table(ex_table);
      Field f = (ex_field == "Q") ? Field::rationals() : Field::prime(ex_p);
      bool ok = averaging_extension_check(t, parse_operator(ex_op), f);
      emit(verdict("averaging-extension", ok,
                   {{"field", ex_field}, {"p", f.kind == Field::Kind::Fp ? f.p : 0}}),
           ex_out);
      return ok ? kExitOk : kExitFalsified;
    }

    if (*vf) {
      CayleyTable t = load_table(vf_table);
      auto op = [&] { return parse_operator(vf_op); };
      json report;
      bool ok = false;

      if (vf_theorem == "rack-rb") {
        ok = is_rack_rb(t, op());
        report = verdict(vf_theorem, ok, {});
      } else if (vf_theorem == "averaging-right" || vf_theorem == "averaging-left") {
        AveragingSide side = vf_theorem == "averaging-right" ? AveragingSide::Right
                                                            : AveragingSide::Left;
        ok = is_averaging(t, op(), side);
        report = verdict(vf_theorem, ok, {});
      } else if (vf_theorem == "averaging-derived") {
        DerivedAveragingReport r = derived_averaging(t, op());
        ok = r.all_ok();
        json d;
        d["derived_table"] = table_to_json(r.table)["table"];
        d["classification"] = report_to_json(r.classification);
        d["fixed_points"] = r.fixed_points;
        d["quandle_iff_ok"] = r.quandle_iff_ok;
        d["b_averaging_on_derived"] = r.b_averaging_on_derived;
        d["b_homomorphism"] = r.b_homomorphism;
        report = verdict(vf_theorem, ok, d);
      } else if (vf_theorem == "relative-rb" || vf_theorem == "relative-averaging" ||
                 vf_theorem == "graph-criterion" || vf_theorem == "rrb-derived") {
        PhiAction phi = vf_phi.empty() ? PhiAction::inner(t) : parse_phi(vf_phi);
        if (vf_theorem == "relative-rb") {
          ok = is_relative_rb(t, t, phi, op());
          report = verdict(vf_theorem, ok, {});
        } else if (vf_theorem == "relative-averaging") {
          ok = is_relative_averaging(t, t, phi, op());
          report = verdict(vf_theorem, ok, {});
        } else if (vf_theorem == "graph-criterion") {
          bool pointwise = is_relative_averaging(t, t, phi, op());
          bool graph = graph_is_subrack(t, t, phi, op());
          ok = pointwise == graph;  // a mismatch would already have thrown
          report = verdict(vf_theorem, ok,
                           {{"pointwise", pointwise}, {"graph_subrack", graph}});
        } else {
          DerivedRrbReport r = derived_rrb(t, t, phi, op());
          ok = !r.compatibility || r.classification.is_rack;
          json d;
          d["derived_table"] = table_to_json(r.table)["table"];
          d["compatibility"] = r.compatibility;
          d["compatibility_remark"] = r.compatibility_remark;
          d["classification"] = report_to_json(r.classification);
          d["quandle_fixed_point"] = r.quandle_fixed_point;
          report = verdict(vf_theorem, ok, d);
        }
      } else if (vf_theorem == "group-rb") {
        GroupRBReport r = check_group_rb(validate_group(t), op(), vf_weight);
        ok = r.holds;
        json d;
        d["weight"] = vf_weight;
        if (r.witness) d["witness"] = {r.witness->first, r.witness->second};
        report = verdict(vf_theorem, ok, d);
      } else if (vf_theorem == "group-derived") {
        DerivedGroup r = derived_group_op(validate_group(t), op());
        ok = r.b_is_rb_on_derived && r.b_is_homomorphism;
        report = verdict(vf_theorem, ok,
                         {{"derived_table", table_to_json(r.group.base, "group")["table"]},
                          {"b_rb_on_derived", r.b_is_rb_on_derived},
                          {"b_homomorphism", r.b_is_homomorphism}});
      } else if (vf_theorem == "group-hypotheses") {
        ConstrHypothesesReport r = constr_hypotheses(validate_group(t), op());
        ok = r.all_implications_ok();
        json d;
        d["h1"] = r.h1;
        d["h2"] = r.h2;
        d["h3"] = r.h3;
        d["h4"] = r.h4;
        d["conj"] = report_to_json(r.conj_class);
        d["core"] = report_to_json(r.core_class);
        report = verdict(vf_theorem, ok, d);
      } else if (vf_theorem == "union-averaging") {
        if (vf_table2.empty() || vf_spec.empty() || vf_op2.empty())
          throw CLI::ValidationError("union-averaging needs --table2, --spec, --operator2");
        UnionOperatorReport r =
            union_operator(t, load_table(vf_table2),
                           union_spec_from_json(inline_or_file(vf_spec)), op(),
                           parse_operator(vf_op2));
        ok = r.agree();
        report = verdict(vf_theorem, ok,
                         {{"glued", operator_to_json(r.glued)},
                          {"condition_tau", r.paper_condition_tau},
                          {"condition_sigma", r.paper_condition_sigma},
                          {"direct_averaging", r.direct_averaging}});
      } else if (vf_theorem == "weight-minus-one") {
        ConditionSystemsReport r = condition_systems(t, op());
        ok = r.equivalence_ok;
        report = verdict(vf_theorem, ok,
                         {{"system1", r.system1},
                          {"system2", r.system2},
                          {"algebraic_rb_minus1", r.algebraic_rb_minus1}});
      } else if (vf_theorem == "extension-averaging") {
        Field f = (vf_field == "Q") ? Field::rationals() : Field::prime(vf_prime);
        ok = averaging_extension_check(t, op(), f);
        report = verdict(vf_theorem, ok, {{"field", vf_field}});
      } else {
        throw CLI::ValidationError("unknown theorem: " + vf_theorem);
      }

      emit(report, vf_out);
      return ok ? kExitOk : kExitFalsified;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
