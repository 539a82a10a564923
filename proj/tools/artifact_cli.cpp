#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "artifact/distribution.hpp"
#include "artifact/jing.hpp"
#include "artifact/ratlimit.hpp"
#include "artifact/relations.hpp"
#include "artifact/repmod.hpp"
#include "artifact/rewrite.hpp"

using json = nlohmann::json;
using namespace artifact;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("bad integer \"" + tok + "\" in point list");
    }
    if (used != tok.size()) throw UsageError("bad integer \"" + tok + "\" in point list");
    out.push_back(v);
  }
  return out;
}

// "0,2" gives every node the same points; "0,2;1,3" lists them per node.
PointSet parse_points(const CartanData& cd, const std::string& s) {
  if (s.find(';') == std::string::npos) {
    auto v = parse_ints(s);
    if (v.empty()) throw UsageError("empty point list");
    return PointSet(cd.n, v);
  }
  std::vector<std::vector<int>> per;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ';')) per.push_back(parse_ints(part));
  if (static_cast<int>(per.size()) != cd.n) throw UsageError("point list needs one group per node");
  for (const auto& p : per)
    if (p.empty()) throw UsageError("empty point group");
  return PointSet(per);
}

CartanData parse_type(const std::string& t) {
  try {
    return cartan(t);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --type: ") + e.what());
  }
}

// A1: the exponents of hw. Otherwise every exponent kmin..kmax+n on every node.
PointSet default_points(const CartanData& cd, const LWeight& hw) {
  if (hw.y.empty()) return PointSet(cd.n, {0});
  std::set<int> s;
  for (const auto& [key, e] : hw.y) s.insert(key.second);
  const int lo = *s.begin(), hi = *s.rbegin();
  if (cd.n > 1)
    for (int k = lo; k <= hi + cd.n; ++k) s.insert(k);
  return PointSet(cd.n, std::vector<int>(s.begin(), s.end()));
}

json element_json(const Element& e) {
  json terms = json::array();
  for (const auto& [w, c] : e.terms()) terms.push_back({{"word", w.empty() ? "1" : word_str(w)}, {"coefficient", c.str()}});
  return terms;
}

json rat_json(const RatElement& e) {
  json terms = json::array();
  for (const auto& [w, c] : e) terms.push_back({{"word", w.empty() ? "1" : word_str(w)}, {"coefficient", c.get_str()}});
  return terms;
}

void emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string suite, type = "A1", points, hw, out, relation;
  int trunc = 1, max_m = 2, max_points = 3, max_k = 5, order = 2, max_index = 2;
};

json verify_hom(const VerifyArgs& a, bool& ok) {
  CartanData cd = parse_type(a.type);
  PointSet P = parse_points(cd, a.points.empty() ? "0,2" : a.points);
  json checks = json::array();
  for (const auto& rel : uqlg_catalog(cd)) {
    if (!a.relation.empty() && rel.name() != a.relation) continue;
    VerifyResult r = verify_relation(rel, cd, P, a.trunc);
    json res = json::array();
    for (const auto& t : r.residual)
      res.push_back({{"delta", t.delta}, {"word", word_str(t.word)}, {"coefficient", t.coeff.str()}});
    checks.push_back({{"relation", rel.name()},
                      {"params", rel.params()},
                      {"truncation", a.trunc},
                      {"ok", r.ok},
                      {"coefficients_checked", r.coefficients},
                      {"residual_terms", res}});
    ok = ok && r.ok;
  }
  if (checks.empty()) throw UsageError("no relation named " + a.relation);
  return checks;
}

json verify_relations(const VerifyArgs& a, bool& ok) {
  if (a.hw.empty()) throw UsageError("suite relations needs --hw");
  CartanData cd = parse_type(a.type);
  LWeight hw = LWeight::parse(a.hw);
  PointSet P = a.points.empty() ? default_points(cd, hw) : parse_points(cd, a.points);
  Rewriter rw(cd, P, a.trunc);
  HWModule mod(rw, hw);
  FidelityReport rep = check_relations(mod, {}, 1000000);
  std::map<std::pair<std::string, std::string>, json> bad;
  for (const auto& f : rep.failures) {
    json& cert = bad[{f.family, f.params}];
    if (cert.is_null())
      cert = {{"relation", f.family}, {"params", f.params}, {"truncation", a.trunc}, {"ok", false},
              {"residual_terms", json::array()}};
    const Block& tb = mod.blocks()[f.target_block];
    for (std::size_t t = 0; t < f.residual.size(); ++t)
      if (!f.residual[t].is_zero())
        cert["residual_terms"].push_back({{"word", word_str(tb.basis[t]) + " v"},
                                          {"coefficient", f.residual[t].str()},
                                          {"source", word_str(mod.blocks()[f.source_block].basis[f.column]) + " v"}});
  }
  json checks = json::array();
  for (auto& [k, v] : bad) checks.push_back(v);
  ok = rep.ok;
  return {{"module_dim", mod.dim()}, {"instances_checked", rep.instances_checked}, {"failures", checks}};
}

json verify_jing(const VerifyArgs& a, bool& ok) {
  CartanData cd = parse_type(a.type);
  json checks = json::array();
  std::vector<std::string> names;
  for (int i = 1; i <= cd.n; ++i)
    for (int j = 1; j <= cd.n; ++j) {
      if (i == j || cd.B(i, j) == 0) continue;
      const int s = serre_order(cd, i, j);
      JingPoly p = jing_identity(cd, i, j);
      names.clear();
      for (int t = 1; t <= s; ++t) names.push_back("F" + std::to_string(t));
      names.push_back("G");
      checks.push_back({{"relation", "jing"},
                        {"params", "i=" + std::to_string(i) + " j=" + std::to_string(j) + " s=" + std::to_string(s)},
                        {"ok", p.is_zero()},
                        {"residual", p.str(names)}});
      ok = ok && p.is_zero();
    }
  return checks;
}

json verify_det(const VerifyArgs& a, bool& ok) {
  json checks = json::array();
  for (int M = 1; M <= a.max_m; ++M)
    for (int p = 1; p <= a.max_points; ++p) {
      DetX d = det_X(M, p);
      json c = {{"relation", "det_X"}, {"params", "M=" + std::to_string(M) + " points=" + std::to_string(p)},
                {"ok", d.equal()}};
      if (!d.equal()) {
        std::vector<std::string> names;
        for (int t = 1; t <= p; ++t) names.push_back("a" + std::to_string(t));
        c["residual"] = (d.computed - d.closed).str(names);
      }
      checks.push_back(c);
      ok = ok && d.equal();
    }
  for (int M = 1; M <= a.max_m; ++M)
    for (int k = 0; k <= a.max_k; ++k) {
      mpz_class v = det_binom(M, k);
      checks.push_back({{"relation", "det_binom"}, {"params", "M=" + std::to_string(M) + " k=" + std::to_string(k)},
                        {"ok", v == 1}, {"value", v.get_str()}});
      ok = ok && v == 1;
    }
  return checks;
}

json ratlimit_report(const std::string& type, const std::string& points, int max_index, int order, bool& ok) {
  CartanData cd = parse_type(type);
  PointSet P = parse_points(cd, points.empty() ? "-3,-2,-1,0,1,2,3" : points);
  if (order < 2) throw UsageError("--order must be at least 2");
  if (max_index < 0) throw UsageError("--max-m must be nonnegative");
  CatalogOptions opt;
  opt.max_index = max_index;
  json checks = json::array();
  for (const auto& inst : relation_catalog(cd, P, 1 << 20, opt)) {
    Degeneration d = degeneration_check(cd, P, inst, order);
    json c = {{"relation", inst.family}, {"params", inst.params}, {"ok", d.ok}};
    c["expected"] = d.expected ? json(d.expected->id) : json(nullptr);
    if (d.identically_zero) {
      c["leading"] = "0";
    } else {
      c["power"] = d.power;
      c["factor"] = d.factor.get_str();
      if (!d.ok) c["leading_terms"] = rat_json(d.leading);
    }
    checks.push_back(c);
    ok = ok && d.ok;
  }
  return checks;
}

int cmd_verify(const VerifyArgs& a) {
  bool ok = true;
  json report = {{"suite", a.suite}};
  if (a.suite == "hom") {
    report["type"] = a.type;
    report["checks"] = verify_hom(a, ok);
  } else if (a.suite == "relations") {
    report["type"] = a.type;
    report["hw"] = a.hw;
    report["truncation"] = a.trunc;
    report["result"] = verify_relations(a, ok);
  } else if (a.suite == "jing") {
    report["type"] = a.type;
    report["checks"] = verify_jing(a, ok);
  } else if (a.suite == "det") {
    report["checks"] = verify_det(a, ok);
  } else if (a.suite == "ratlimit") {
    report["type"] = a.type;
    report["checks"] = ratlimit_report(a.type, a.points, a.max_index, a.order, ok);
  } else {
    throw UsageError("unknown suite " + a.suite);
  }
  report["ok"] = ok;
  emit(report, a.out);
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------ module

struct ModuleArgs {
  std::string job, type = "A1", points, hw, out;
  std::vector<std::string> emit_sel;
  int trunc = 1, depth = -1;
};

void load_job(ModuleArgs& a) {
  std::ifstream f(a.job);
  if (!f) throw UsageError("cannot read job file " + a.job);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw UsageError(std::string("job file: ") + e.what());
  }
  try {
    if (j.contains("type")) a.type = j["type"].get<std::string>();
    if (j.contains("hw")) a.hw = j["hw"].get<std::string>();
    if (j.contains("trunc")) a.trunc = j["trunc"].get<int>();
    if (j.contains("depth")) a.depth = j["depth"].get<int>();
    if (j.contains("emit")) a.emit_sel = j["emit"].get<std::vector<std::string>>();
    if (j.contains("out")) a.out = j["out"].get<std::string>();
    if (j.contains("points")) {
      const json& p = j["points"];
      std::ostringstream os;
      if (p.is_string()) {
        os << p.get<std::string>();
      } else if (!p.empty() && p[0].is_array()) {
        for (std::size_t i = 0; i < p.size(); ++i) {
          os << (i ? ";" : "");
          for (std::size_t t = 0; t < p[i].size(); ++t) os << (t ? "," : "") << p[i][t].get<int>();
        }
      } else {
        for (std::size_t t = 0; t < p.size(); ++t) os << (t ? "," : "") << p[t].get<int>();
      }
      a.points = os.str();
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("job file: ") + e.what());
  }
}

int cmd_module(ModuleArgs a) {
  if (!a.job.empty()) load_job(a);
  if (a.hw.empty()) throw UsageError("module needs --hw");
  if (a.trunc < 1) throw UsageError("--trunc must be positive");
  CartanData cd = parse_type(a.type);
  LWeight hw = LWeight::parse(a.hw);
  PointSet P = a.points.empty() ? default_points(cd, hw) : parse_points(cd, a.points);
  for (const auto& [key, e] : hw.y)
    if (!cd.valid_node(key.first)) throw UsageError("highest weight uses node " + std::to_string(key.first));
  std::set<std::string> sel(a.emit_sel.begin(), a.emit_sel.end());
  if (sel.empty()) sel = {"basis", "qchar"};
  for (const auto& s : sel)
    if (s != "basis" && s != "qchar" && s != "dot") throw UsageError("unknown --emit selector " + s);

  Rewriter rw(cd, P, a.trunc);
  ModuleOptions opt;
  opt.depth = a.depth;
  ObstructionReport ob = truncation_obstruction(rw, hw, opt);
  if (!ob.consistent) {
    std::cerr << "obstruction: no highest weight module of A/F_" << a.trunc << " with highest weight "
              << hw.str(cd.n == 1) << "\n";
    for (const auto& line : ob.chain) std::cerr << "  " << line << "\n";
    return 1;
  }
  HWModule mod(rw, hw, opt);
  QCharacter qc = qcharacter(mod);
  const bool rank1 = cd.n == 1;
  json j = {{"type", a.type}, {"hw", hw.str(rank1)}, {"truncation", a.trunc}, {"dim", mod.dim()},
            {"depth", mod.depth()}, {"complete", mod.complete()}};
  j["layer_dims"] = mod.layer_dims();
  json ws = json::array();
  for (const auto& e : qc.entries) {
    json w = {{"monomial", e.weight.str(rank1)}, {"mult", e.mult}, {"layer", e.layer}};
    if (sel.count("basis")) {
      json b = json::array();
      for (const auto& word : e.basis) {
        json letters = json::array();
        for (const auto& g : word) letters.push_back(g.str());
        b.push_back(letters);
      }
      w["basis"] = b;
    }
    ws.push_back(w);
  }
  if (sel.count("basis") || sel.count("qchar")) j["weights"] = ws;
  if (sel.count("qchar")) {
    json ar = json::array();
    for (const auto& r : qc.arrows)
      ar.push_back({{"from", r.from}, {"to", r.to}, {"label", "A[" + std::to_string(r.node) + "," + std::to_string(r.point) + "]^-1"}});
    j["arrows"] = ar;
  }
  const std::string dot = sel.count("dot") ? qcharacter_dot(qc, rank1) : "";
  if (a.out.empty()) {
    if (!dot.empty()) j["dot"] = dot;
    emit(j, "");
  } else {
    emit(j, a.out);
    if (!dot.empty()) {
      std::ofstream f(a.out + ".dot");
      if (!f) throw UsageError("cannot write " + a.out + ".dot");
      f << dot;
    }
  }
  return 0;
}

// ------------------------------------------------------------------ reduce

struct ReduceArgs {
  std::string word, mode = "triangular", type = "A1", points, out;
  int trunc = 1;
};

int cmd_reduce(const ReduceArgs& a) {
  if (a.trunc < 1) throw UsageError("--trunc must be positive");
  Word w = parse_word(a.word);
  CartanData cd = parse_type(a.type);
  for (const auto& g : w)
    if (!cd.valid_node(g.node)) throw UsageError("letter " + g.str() + " uses a node outside " + a.type);
  PointSet P;
  if (!a.points.empty()) {
    P = parse_points(cd, a.points);
  } else {
    // default: the points of the word together with {0,2} (A1) or {0,1,2,3}
    const std::vector<int> base = cd.n == 1 ? std::vector<int>{0, 2} : std::vector<int>{0, 1, 2, 3};
    std::vector<std::set<int>> s(cd.n, std::set<int>(base.begin(), base.end()));
    for (const auto& g : w)
      if (!g.is_Ktype()) s[g.node - 1].insert(g.k);
    std::vector<std::vector<int>> per;
    for (auto& x : s) per.emplace_back(x.begin(), x.end());
    P = PointSet(per);
  }
  for (const auto& g : w)
    if (!g.is_Ktype() && !P.contains(g.node, g.k)) throw UsageError("letter " + g.str() + " uses a point outside P");
  if (a.mode != "normal-sl2" && a.mode != "triangular") throw UsageError("unknown --mode " + a.mode);
  if (a.mode == "normal-sl2" && cd.n != 1) throw UsageError("normal-sl2 needs type A1");
  Rewriter rw(cd, P, a.trunc);
  Element x = Element::word(a.trunc, w);
  Element r = a.mode == "normal-sl2" ? rw.normal_form_sl2(x) : rw.triangular_form(x);
  json j = {{"input", a.word}, {"mode", a.mode}, {"truncation", a.trunc}, {"terms", element_json(r)}, {"text", r.str()}};
  emit(j, a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the algebra A(g, q, P) and its truncations"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->add_option("--suite", va.suite, "relations | jing | det | hom | ratlimit")
      ->required()
      ->check(CLI::IsMember({"relations", "jing", "det", "hom", "ratlimit"}));
  verify->add_option("--type", va.type, "Dynkin type, e.g. A1, G2");
  verify->add_option("--points", va.points, "exponents of the points, \"0,2\" or per node \"0,2;1,3\"");
  verify->add_option("--trunc", va.trunc, "truncation N");
  verify->add_option("--hw", va.hw, "highest weight (suite relations)");
  verify->add_option("--relation", va.relation, "single relation name (suite hom)");
  verify->add_option("--max-m", va.max_m, "largest M (det) or largest m-index (ratlimit)");
  verify->add_option("--max-points", va.max_points, "largest number of points (det)");
  verify->add_option("--max-k", va.max_k, "largest k in the binomial determinant (det)");
  verify->add_option("--order", va.order, "expansion order in h (ratlimit)");
  verify->add_option("--out", va.out, "write the report to a file");

  ModuleArgs ma;
  auto* module = app.add_subcommand("module", "Build a simple highest l-weight module");
  module->add_option("--job", ma.job, "JSON job file");
  module->add_option("--type", ma.type, "Dynkin type");
  module->add_option("--points", ma.points, "exponents of the points");
  module->add_option("--hw", ma.hw, "highest weight, e.g. \"Y0^2 Y2\" or \"Y[1,0] Y[2,1]\"");
  module->add_option("--trunc", ma.trunc, "truncation N");
  module->add_option("--depth", ma.depth, "largest E- word length");
  module->add_option("--emit", ma.emit_sel, "basis, qchar, dot")->delimiter(',');
  module->add_option("--out", ma.out, "JSON output path; DOT goes to <out>.dot");

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "Rewrite a word mod F_N");
  reduce->add_option("word", ra.word, "word such as \"E-[1,0,1] E-[1,2,0]\"")->required();
  reduce->add_option("--mode", ra.mode, "normal-sl2 | triangular");
  reduce->add_option("--trunc", ra.trunc, "truncation N");
  reduce->add_option("--type", ra.type, "Dynkin type");
  reduce->add_option("--points", ra.points, "exponents of the points (default: those of the word and 0,2 in A1, 0..3 otherwise)");
  reduce->add_option("--out", ra.out, "write the result to a file");

  VerifyArgs rl;
  auto* rlc = app.add_subcommand("ratlimit-check", "Leading order in h of every relation instance");
  rlc->add_option("--type", rl.type, "Dynkin type");
  rlc->add_option("--points", rl.points, "exponents (default -3..3)");
  rlc->add_option("--max-m", rl.max_index, "largest m-index");
  rlc->add_option("--order", rl.order, "expansion order in h");
  rlc->add_option("--out", rl.out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*module) return cmd_module(ma);
    if (*reduce) return cmd_reduce(ra);
    if (*rlc) {
      bool ok = true;
      json report = {{"suite", "ratlimit"}, {"type", rl.type}};
      report["checks"] = ratlimit_report(rl.type, rl.points, rl.max_index, rl.order, ok);
      report["ok"] = ok;
      emit(report, rl.out);
      return ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
