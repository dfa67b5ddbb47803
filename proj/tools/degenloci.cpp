#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degenloci/census.hpp"
#include "degenloci/correspondence.hpp"
#include "degenloci/hodge.hpp"
#include "degenloci/invariants.hpp"
#include "degenloci/random.hpp"
#include "degenloci/reproduce.hpp"
#include "degenloci/schubert.hpp"

using namespace degenloci;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kCheckFailure = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::string subcommand;
  int n = 4, s = 4, m = 1;
  std::uint64_t prime = 32003;
  int ext = 1;
  std::uint64_t seed = 1;
  std::size_t samples = 500;
  std::uint64_t budget = 0;
  std::string format = "text";
  std::string out;

  json to_json() const {
    return json{{"subcommand", subcommand}, {"params", {{"n", n}, {"s", s}, {"m", m}}},
                {"prime", prime},           {"ext", ext},
                {"seed", seed},             {"samples", samples},
                {"budget", budget},         {"format", format}};
  }
};

struct Report {
  json body = json::object();
  std::vector<std::string> text;
  int status = kOk;
};

TripleParams params(const RunConfig& c, const Field& f) {
  TripleParams t;
  t.n = c.n;
  t.s = c.s;
  t.m = c.m;
  t.field = &f;
  return t;
}

std::string str(const BigInt& v) { return to_decimal(v); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string class_string(const ProductClass& x) {
  std::string out;
  auto part = [](const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
  };
  for (const auto& [key, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    const Ambient& a = x.ambient();
    out += str(c) + "*s" + part(a.factor(0).basis()[key[0]]) + "s" + part(a.factor(1).basis()[key[1]]) + "s" +
           part(a.factor(2).basis()[key[2]]);
  }
  return out.empty() ? "0" : out;
}

Report cmd_gen(const RunConfig& c, bool white) {
  Report r;
  const Field& f = Field::prime(c.prime);
  if (white) {
    SplitWhiteInstance w = split_white_instance(f, c.m, c.seed);
    r.body["instance"] = json::parse(instance_to_json(w.matrix));
    json pts = json::array();
    for (const auto& p : w.special_points) pts.push_back(p.to_string());
    r.body["special_points"] = pts;
  } else {
    r.body["instance"] = json::parse(instance_to_json(generate_instance(params(c, f), c.seed)));
  }
  r.text.push_back(r.body.dump(2));
  return r;
}

Report cmd_invariants(const RunConfig& c) {
  Report r;
  GenusDegree gd = genus_degree_curve(c.n);
  json curve{{"genus", str(gd.genus)}, {"degree", str(gd.degree)}, {"euler", str(pragacz_euler_curve(c.n))}};
  json surface{{"euler", str(pragacz_euler_surface(c.n))},
               {"geometric_genus", str(geometric_genus_surface(c.n))},
               {"chi_O", str(chi_O_surface(c.n))}};
  r.body["n"] = c.n;
  r.body["curve"] = curve;
  r.body["surface"] = surface;
  r.text.push_back("n = " + std::to_string(c.n));
  r.text.push_back("curve: genus " + str(gd.genus) + ", degree " +
                   str(gd.degree) + ", e = " + str(pragacz_euler_curve(c.n)));
  r.text.push_back("surface: e = " + str(pragacz_euler_surface(c.n)) + ", p_g = " +
                   str(geometric_genus_surface(c.n)) + ", chi(O) = " + str(chi_O_surface(c.n)));
  if (c.s - c.m - 1 >= 0) {
    const BigInt e = ci_euler_bidegree(c.s, c.n - 1, c.n + c.m);
    r.body["S_euler"] = str(e);
    r.text.push_back("S(" + std::to_string(c.n) + "," + std::to_string(c.s) + "," + std::to_string(c.m) +
                     "): dim " + std::to_string(c.s - c.m - 1) + ", e = " + str(e));
  }
  return r;
}

Report cmd_hilb2(const std::string& path, int dim) {
  Report r;
  HodgePoly e = HodgePoly::from_json(read_file(path));
  HodgePoly h;
  if (dim == 2) {
    h = hilb2_epoly_surface(e);
  } else if (dim == 3) {
    h = hilb2_epoly_threefold(e);
  } else {
    throw std::invalid_argument("--dim must be 2 or 3");
  }
  r.body["input"] = json::parse(e.to_json());
  r.body["hilb2"] = json::parse(h.to_json());
  r.body["euler"] = str(h.euler());
  r.body["closed_form_euler"] = str(hilb2_euler_closed_form(e.euler(), dim));
  r.text.push_back("E(S) = " + e.to_string());
  r.text.push_back("E(Hilb2) = " + h.to_string());
  r.text.push_back("e(Hilb2) = " + str(h.euler()) + " (closed form " + str(hilb2_euler_closed_form(e.euler(), dim)) +
                   ")");
  r.text.push_back(h.diamond(2 * dim));
  if (h.euler() != hilb2_euler_closed_form(e.euler(), dim)) r.status = kCheckFailure;
  return r;
}

Report cmd_euler_z(const RunConfig& c, bool show_classes) {
  Report r;
  ZEuler z = euler_of_Z(c.n, c.s, c.m);
  r.body["dim_G"] = z.dim_G;
  r.body["rank_E"] = z.rank_E;
  r.body["dim_Z"] = z.dim_Z;
  r.body["euler"] = str(z.euler);
  r.text.push_back("G = Gr(2," + std::to_string(c.n) + ") x Gr(2," + std::to_string(c.s + 1) + ") x Gr(" +
                   std::to_string(c.n + c.m - 2) + "," + std::to_string(c.n + c.m) + "), dim " +
                   std::to_string(z.dim_G));
  r.text.push_back("rank E = " + std::to_string(z.rank_E) + ", dim Z = " + std::to_string(z.dim_Z));
  r.text.push_back("e(Z) = " + str(z.euler));
  if (show_classes) {
    TensorChern e = chern_of_tensor_bundle(c.n, c.s, c.m);
    ProductClass t = tangent_chern(c.n, c.s, c.m);
    r.body["c1_E"] = class_string(e.total.homogeneous(1));
    r.body["c1_TG"] = class_string(t.homogeneous(1));
    r.body["c_top_E_terms"] = e.top.terms().size();
    r.text.push_back("c1(E) = " + class_string(e.total.homogeneous(1)));
    r.text.push_back("c1(TG) = " + class_string(t.homogeneous(1)));
    r.text.push_back("c_top(E): " + std::to_string(e.top.terms().size()) + " Schubert terms");
  }
  return r;
}

Report cmd_census(const RunConfig& c, bool white) {
  Report r;
  const Field& f = Field::prime(c.prime);
  LinearFormMatrix m = white ? split_white_instance(f, c.m, c.seed).matrix : generate_instance(params(c, f), c.seed);
  CensusOptions opt;
  if (c.budget) opt.budget = c.budget;
  std::vector<std::uint64_t> counts;
  json rows = json::array();
  for (int k = 1; k <= c.ext; ++k) {
    StratumReport s = empirical_stratum_census(m, k, opt);
    counts.push_back(s.rank_deficient);
    rows.push_back({{"ext", k}, {"examined", s.examined}, {"rank_deficient", s.rank_deficient}, {"counts", s.counts}});
    r.text.push_back("F_" + std::to_string(c.prime) + "^" + std::to_string(k) + ": examined " +
                     std::to_string(s.examined) + ", rank-deficient " + std::to_string(s.rank_deficient));
  }
  r.body["white"] = white;
  r.body["by_degree"] = rows;
  auto v = stabilized_value(counts);
  r.body["stabilized"] = v ? json(*v) : json(nullptr);
  r.text.push_back(v ? "stabilized at " + std::to_string(*v) : "not stabilized");
  if (white) {
    r.body["expected"] = str(white_blowup_count(c.m));
    if (!v || BigInt(*v) != white_blowup_count(c.m)) r.status = kCheckFailure;
    r.text.push_back("expected blow-up count " + str(white_blowup_count(c.m)));
  }
  return r;
}

json classification_json(const Classification& cl) {
  json j{{"case", to_string(cl.label)}, {"w_dim", cl.w_dim}};
  if (cl.eigen) j["eigen"] = to_string(*cl.eigen);
  json w = json::array();
  for (const auto& p : cl.witnesses) w.push_back({{"v", p.v.to_string()}, {"alpha", p.alpha.to_string()}});
  j["witnesses"] = w;
  if (cl.image_point) j["image_point"] = cl.image_point->to_string();
  return j;
}

Report cmd_classify(const RunConfig& c, const std::string& instance_path, const std::string& point_path) {
  Report r;
  if (instance_path.empty() != point_path.empty()) throw std::invalid_argument("--instance and --zpoint go together");
  std::optional<LinearFormMatrix> m;
  std::optional<ZPoint> z;
  if (!instance_path.empty()) {
    m = instance_from_json(read_file(instance_path));
    z = zpoint_from_json(m->field(), read_file(point_path));
  } else {
    m = generate_instance(params(c, Field::prime(c.prime)), c.seed);
    auto pts = sample_points_on_S(*m, 2, derive_seed(c.seed, 1));
    z = build_point(*m, pts[0], pts[1]);
    r.body["pair"] = {pts[0].v.to_string(), pts[1].v.to_string()};
  }
  r.body["zpoint"] = json::parse(zpoint_to_json(*z));
  Classification cl = classify(*m, *z);
  r.body["classification"] = classification_json(cl);
  r.text.push_back("case " + to_string(cl.label) + ", dim W = " + std::to_string(cl.w_dim));
  for (const auto& p : cl.witnesses) r.text.push_back("witness " + p.v.to_string());
  return r;
}

Report cmd_roundtrip(const RunConfig& c, bool force) {
  Report r;
  TripleParams t = params(c, Field::prime(c.prime));
  RangeReport range = validate_params(t);
  if (!range.good_range && !force) throw std::invalid_argument("triple outside the good range (use --force)");
  RoundTripReport rt = run_roundtrip(t, c.samples, c.seed, c.budget);
  const std::vector<std::string> names{"a", "b", "c", "d", "not_in_Z"};
  json cases = json::object();
  for (std::size_t i = 0; i < names.size(); ++i) cases[names[i]] = rt.cases[i];
  r.body["good_range"] = range.good_range;
  r.body["pairs_tested"] = rt.pairs_tested;
  r.body["degenerate_pairs"] = rt.degenerate_pairs;
  r.body["cases"] = cases;
  r.body["recovered"] = rt.recovered;
  r.body["sampler"] = rt.sampler;
  r.text.push_back("sampler " + rt.sampler + ", pairs " + std::to_string(rt.pairs_tested) + ", degenerate " +
                   std::to_string(rt.degenerate_pairs));
  std::string line = "cases:";
  for (std::size_t i = 0; i < names.size(); ++i) line += " " + names[i] + "=" + std::to_string(rt.cases[i]);
  r.text.push_back(line);
  r.text.push_back("recovered " + std::to_string(rt.recovered) + "/" + std::to_string(rt.pairs_tested));
  if (range.good_range && (rt.recovered != rt.pairs_tested || rt.pairs_tested < c.samples)) r.status = kCheckFailure;
  return r;
}

Report cmd_conjecture(const RunConfig& c) {
  Report r;
  const int n = 2 * c.s - 2 * c.m - 3, d = c.s - c.m - 1;
  if (d < 1 || d > 3) throw std::invalid_argument("need 1 <= s - m - 1 <= 3");
  const BigInt e = ci_euler_bidegree(c.s, n - 1, n + c.m);
  const BigInt hilb = hilb2_euler_closed_form(e, d);
  const BigInt z = euler_of_Z(n, c.s, c.m).euler;
  const BigInt predicted = conjecture_delta(c.m, c.s);
  r.body["n"] = n;
  r.body["e_S"] = str(e);
  r.body["e_hilb2"] = str(hilb);
  r.body["e_Z"] = str(z);
  r.body["delta"] = str(hilb - z);
  r.body["predicted"] = str(predicted);
  r.text.push_back("(n,s,m) = (" + std::to_string(n) + "," + std::to_string(c.s) + "," + std::to_string(c.m) + ")");
  r.text.push_back("e(S) = " + str(e) + ", e(Hilb2) = " + str(hilb) + ", e(Z) = " + str(z));
  r.text.push_back("e(Hilb2) - e(Z) = " + str(hilb - z) + ", predicted " + str(predicted));
  if (hilb - z != predicted) r.status = kCheckFailure;
  return r;
}

Report cmd_reproduce(const RunConfig& c, const std::vector<std::string>& only) {
  Report r;
  ReproduceOptions o;
  o.seed = c.seed;
  o.prime = c.prime;
  o.pairs = c.samples;
  o.only = only;
  std::vector<CheckResult> results = run_reproduction(o);
  json checks = json::array();
  int passed = 0;
  for (const auto& res : results) {
    passed += res.passed;
    checks.push_back({{"id", res.id},
                      {"name", res.name},
                      {"group", res.group},
                      {"passed", res.passed},
                      {"checks", res.checks},
                      {"failures", res.failures},
                      {"lines", res.lines}});
    std::ostringstream os;
    os << (res.passed ? "PASS " : "FAIL ") << res.id << " " << res.name << " (" << res.checks << " checks, "
       << res.seconds << " s)";
    r.text.push_back(os.str());
    for (const auto& line : res.lines) r.text.push_back("    " + line);
  }
  r.body["checks"] = checks;
  r.body["totals"] = {{"selected", results.size()}, {"passed", passed}, {"failed", results.size() - passed}};
  r.text.push_back(std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed");
  if (passed != static_cast<int>(results.size())) r.status = kCheckFailure;
  return r;
}

void emit(const RunConfig& c, const Report& r) {
  std::string out;
  if (c.format == "json") {
    json doc{{"config", c.to_json()}, {"status", r.status}, {"report", r.body}};
    out = doc.dump(2) + "\n";
  } else {
    json cfg = c.to_json();
    out = "# " + cfg.dump() + "\n";
    for (const auto& line : r.text) out += line + (line.empty() || line.back() != '\n' ? "\n" : "");
  }
  if (c.out.empty()) {
    std::cout << out;
  } else {
    std::ofstream file(c.out, std::ios::app);
    if (!file) throw std::invalid_argument("cannot open " + c.out);
    file << out;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degeneracy loci of matrices of linear forms: exact computations and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--seed", c.seed, "random seed");
  app.add_option("--prime", c.prime, "characteristic of the base field");
  app.add_option("--ext", c.ext, "extension degree (census: largest degree)")->check(CLI::Range(1, 6));
  app.add_option("--samples", c.samples, "sample count (round-trip pairs)");
  app.add_option("--budget", c.budget, "work budget; 0 picks a default");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", c.out, "append the report to this file");

  auto add_triple = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "rows");
    sub->add_option("--s", c.s, "projective dimension of the variables");
    sub->add_option("--m", c.m, "extra columns");
  };

  bool white = false, show_classes = false, force = false;
  std::string epoly, instance_path, point_path;
  int dim = 2;
  std::vector<std::string> only;

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  add_triple(gen);
  gen->add_flag("--white", white, "split White instance (3, m+3, m)");
  auto* inv = app.add_subcommand("invariants", "numerical invariants of the degeneracy loci");
  add_triple(inv);
  auto* hilb = app.add_subcommand("hilb2", "E-polynomial of a Hilbert square");
  hilb->add_option("--epoly", epoly, "JSON file with the E-polynomial")->required();
  hilb->add_option("--dim", dim, "dimension (2 or 3)");
  auto* ez = app.add_subcommand("euler-z", "Euler number of Z by Schubert calculus");
  add_triple(ez);
  ez->add_flag("--show-classes", show_classes, "print first Chern classes");
  auto* cen = app.add_subcommand("census", "count rank-deficient points over F_p^k, k = 1..ext");
  add_triple(cen);
  cen->add_flag("--white", white, "split White instance (3, m+3, m)");
  auto* cls = app.add_subcommand("classify", "classify a point of Z");
  add_triple(cls);
  cls->add_option("--instance", instance_path, "instance JSON file");
  cls->add_option("--zpoint", point_path, "Z-point JSON file");
  auto* rt = app.add_subcommand("roundtrip", "build, classify and recover sampled pairs");
  add_triple(rt);
  rt->add_flag("--force", force, "allow triples outside the good range");
  auto* conj = app.add_subcommand("conjecture", "e(Hilb2) - e(Z) on the boundary n = 2s - 2m - 3");
  conj->add_option("--s", c.s, "s");
  conj->add_option("--m", c.m, "m");
  auto* rep = app.add_subcommand("reproduce-paper", "run the full table of checks");
  rep->add_option("--only", only, "criterion ids, names or groups")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  c.subcommand = sub->get_name();
  if (white) {
    c.n = 3;
    c.s = c.m + 3;
  }
  if (sub == conj) c.n = 2 * c.s - 2 * c.m - 3;
  try {
    Report r;
    if (sub == gen) r = cmd_gen(c, white);
    else if (sub == inv) r = cmd_invariants(c);
    else if (sub == hilb) r = cmd_hilb2(epoly, dim);
    else if (sub == ez) r = cmd_euler_z(c, show_classes);
    else if (sub == cen) r = cmd_census(c, white);
    else if (sub == cls) r = cmd_classify(c, instance_path, point_path);
    else if (sub == rt) r = cmd_roundtrip(c, force);
    else if (sub == conj) r = cmd_conjecture(c);
    else r = cmd_reproduce(c, only);
    emit(c, r);
    return r.status;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
}
