#include "potentia/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "potentia/brylinski.hpp"
#include "potentia/checks.hpp"
#include "potentia/poisson.hpp"

namespace potentia {

namespace {

using Json = nlohmann::ordered_json;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string preset, matrix, matrix_file, q, format = "json", out;
  std::optional<long> max_degree;
  bool no_timing = false;
};

// seeds of the sampled checks
constexpr std::uint32_t kBasisSeed = 3, kSwapSeed = 4, kCenterSeed = 10;

QuadMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw BadInput("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rat>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw BadInput("matrix rows must be arrays");
    std::vector<Rat> r;
    for (const auto& e : row) {
      if (e.is_string())
        r.push_back(parse_rat(e.get<std::string>()));
      else if (e.is_number_integer())
        r.push_back(Rat(e.get<long>()));
      else
        throw BadInput("matrix entries must be integers or rational strings \"p/q\"");
    }
    rows.push_back(std::move(r));
  }
  return QuadMatrix(std::move(rows));
}

Json matrix_json(const QuadMatrix& M) {
  Json rows = Json::array();
  for (const auto& row : M.m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    rows.push_back(r);
  }
  return rows;
}

struct Input {
  std::string preset;  // empty for explicit matrices
  QuadMatrix M;
  std::optional<Rat> q;
  std::size_t D = 8;
};

Input resolve(const Options& o) {
  Input in;
  if (!o.q.empty()) {
    in.q = parse_rat(o.q);
    if (*in.q == 0 || *in.q == 1 || *in.q == -1) throw BadInput("--q must avoid 0, 1 and -1");
  }
  if (!o.matrix.empty()) {
    Json j;
    try {
      j = Json::parse(o.matrix);
    } catch (const Json::exception& e) {
      throw BadInput(std::string("--matrix is not valid JSON: ") + e.what());
    }
    in.M = matrix_from_json(j);
  } else if (!o.matrix_file.empty()) {
    std::ifstream f(o.matrix_file);
    if (!f) throw BadInput("cannot read " + o.matrix_file);
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::exception& e) {
      throw BadInput(std::string("matrix file is not valid JSON: ") + e.what());
    }
    in.M = matrix_from_json(j.is_object() && j.contains("matrix") ? j["matrix"] : j);
  } else {
    in.preset = o.preset.empty() ? "jordan" : o.preset;
    if (in.preset == "quantum") {
      if (!in.q) in.q = Rat(2);
      in.M = quantum_matrix(*in.q);
      in.preset = "quantum:" + to_string(*in.q);
    } else {
      in.M = preset_matrix(in.preset);
      if (in.preset.rfind("quantum:", 0) == 0 && !in.q) in.q = parse_rat(in.preset.substr(8));
    }
  }

  long D = 8;
  if (const char* env = std::getenv("POTENTIA_MAX_DEGREE")) {
    try {
      D = std::stol(env);
    } catch (const std::exception&) {
      throw BadInput("POTENTIA_MAX_DEGREE is not an integer");
    }
  }
  if (o.max_degree) D = *o.max_degree;
  if (D < 2) throw BadInput("max degree must be at least 2");
  in.D = std::size_t(D);
  return in;
}

Json input_json(const Input& in) {
  Json j;
  if (!in.preset.empty()) j["preset"] = in.preset;
  j["matrix"] = matrix_json(in.M);
  j["max_degree"] = in.D;
  if (in.q) j["q"] = to_string(*in.q);
  return j;
}

Json table_json(const HomologyTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  return rows;
}

void require_n2(const Input& in, const char* what) {
  if (in.M.n() != 2) throw BadInput(std::string(what) + " needs a 2x2 matrix");
}

void require_jordan(const Input& in, const char* what) {
  require_n2(in, what);
  if (classify2(in.M).kind != Type2::Jordan) throw BadInput(std::string(what) + " needs the Jordan algebra");
}

PoissonPotential potential_for(const Input& in) {
  require_n2(in, "Poisson homology");
  // the Jordan presentation is compared against -x^2 z
  if (in.M == jordan_matrix()) return jordan_poisson();
  return poisson_potential_of(in.M);
}

Rat quantum_q(const Input& in) { return in.q ? *in.q : Rat(2); }

struct Report {
  Json extra = Json::object();
  std::vector<std::pair<std::string, HomologyTable>> tables;
  std::vector<CheckResult> checks;
};

void add_table(Report& r, const std::string& name, HomologyTable t) {
  for (auto& [n, old] : r.tables)
    if (n == name) {
      old = std::move(t);
      return;
    }
  r.tables.emplace_back(name, std::move(t));
}

void add_checks(Report& r, const std::vector<CheckResult>& cs, const std::string& prefix = "") {
  for (auto c : cs) {
    if (!prefix.empty()) c.name = prefix + ": " + c.name;
    r.checks.push_back(std::move(c));
  }
}

void run_verify(const std::string& what, const Input& in, Report& r) {
  const std::size_t D = in.D;
  if (what == "euler") {
    r.checks.push_back(euler_for(in.M));
  } else if (what == "hessian") {
    r.checks.push_back(hessian_for(in.M));
  } else if (what == "confluence") {
    r.checks.push_back(confluence_for(in.M));
  } else if (what == "center") {
    r.checks.push_back(center_check(10, std::max<std::size_t>(D, 6), kCenterSeed));
  } else if (what == "duality") {
    r.checks.push_back(duality_for(in.M, D));
  } else if (what == "basischange") {
    r.checks.push_back(basis_change_for(in.M, 10, kBasisSeed));
    r.checks.push_back(swap_check(5, kSwapSeed));
  } else if (what == "gr") {
    require_jordan(in, "verify gr");
    JordanBridge br(D + 3);
    add_checks(r, gr_compare(br, D));
  } else if (what == "lifts") {
    require_jordan(in, "verify lifts");
    JordanBridge br(D);
    auto suite = lift_suite(br, D);
    r.checks.push_back(summarize_lifts(suite));
    Json lifts = Json::array();
    for (const auto& o : suite)
      lifts.push_back({{"label", o.record.label},
                       {"p", o.record.p},
                       {"degree", o.record.degree},
                       {"formula_ok", o.formula_ok},
                       {"listed_range", !o.extension},
                       {"solver_found", o.solver.has_value()}});
    r.extra["lifts"] = lifts;
  } else if (what == "degeneration") {
    require_jordan(in, "verify degeneration");
    JordanBridge br(D);
    auto rep = degeneration_check(br, D);
    add_table(r, "HH", rep.hh);
    add_table(r, "HP", rep.hp);
    add_checks(r, rep.checks);
  } else if (what == "quantum") {
    auto rep = quantum_compare(quantum_q(in), D);
    add_table(r, "HH", rep.hh);
    add_table(r, "HP", rep.hp);
    add_checks(r, rep.checks);
  } else {
    throw BadInput("unknown check '" + what + "'");
  }
}

const std::vector<std::pair<std::string, std::string>> kVerify = {
    {"euler", "Euler relation for the potential"},
    {"hessian", "symmetry of the second cyclic derivatives"},
    {"confluence", "overlaps of the rewriting system resolve"},
    {"center", "(a x^2 + (b+1) xy) z is central"},
    {"duality", "self-duality of the Koszul complex"},
    {"gr", "associated graded Koszul differentials vs Brylinski (jordan)"},
    {"lifts", "explicit lifts of Poisson cycles (jordan)"},
    {"degeneration", "HH(B) = HP(T) and the listed basis counts (jordan)"},
    {"quantum", "quantum HH and HP vs basis counts, at --q"},
    {"basischange", "basis changes and the x <-> z swap"},
};

void run_report(const Input& in, Report& r) {
  const std::size_t D = in.D;
  KoszulComplex kc(build_B(in.M), D);
  add_table(r, "HH", kc.homology());
  r.checks.push_back({"koszul d o d = 0", kc.squares_to_zero(), "every slice up to degree " + std::to_string(D)});
  if (in.M.n() == 2) {
    auto tag = classify2(in.M);
    r.extra["type"] = tag.name();
    auto pp = potential_for(in);
    add_table(r, "HP", hp_table(pp, D));
    add_table(r, "Hphi", hphi_table(pp, D));
    r.checks.push_back(poisson_complexes_check(pp, D));
  }
  for (const char* v : {"euler", "hessian", "confluence", "duality", "basischange", "center"}) run_verify(v, in, r);
  if (in.M.n() == 2 && classify2(in.M).kind == Type2::Jordan) {
    JordanBridge br(D + 3);
    add_checks(r, gr_compare(br, D));
    r.checks.push_back(summarize_lifts(lift_suite(br, D)));
    auto deg = degeneration_check(br, D);
    add_checks(r, deg.checks);
    for (const std::string f : {"HP0", "HP1", "HP2", "HP3", "Hphi1", "Hphi2", "Hphi3", "CurlQ"})
      for (bool ext : {false, true}) {
        if (ext && f != "HP1" && f != "HP2" && f != "CurlQ") continue;
        auto fr = verify_family(br.poisson(), f, D, ext);
        CheckResult c{"listed basis " + f + (ext ? ", ranges r, t >= -1" : ""), fr.pass(), ""};
        for (const auto& s : fr.failures) c.detail += s + "; ";
        if (c.pass) c.detail = "cycles, independent, count equals dimension up to degree " + std::to_string(D);
        r.checks.push_back(c);
      }
    r.checks.push_back(casimir_kernel_check(br.poisson(), D));
  }
  auto qc = quantum_compare(quantum_q(in), D);
  add_checks(r, qc.checks, "q=" + to_string(quantum_q(in)));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

std::string render_csv(const Json& j) {
  std::ostringstream os;
  for (const auto& [k, v] : j["input"].items())
    os << "input," << k << "," << csv_field(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& [k, v] : j.items()) {
    if (k == "input" || k == "tables" || k == "checks" || k == "elapsed_ms") continue;
    if (v.is_array() && k == "hilbert") {
      os << "hilbert,d,dim\n";
      for (std::size_t d = 0; d < v.size(); ++d) os << "hilbert," << d << "," << v[d].dump() << "\n";
    } else {
      os << k << "," << csv_field(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
  if (j.contains("tables")) {
    os << "table,p,d,dim\n";
    for (const auto& [name, rows] : j["tables"].items())
      for (const auto& r : rows) os << name << "," << r[0] << "," << r[1] << "," << r[2] << "\n";
  }
  if (j.contains("checks")) {
    os << "check,pass,detail\n";
    for (const auto& c : j["checks"])
      os << csv_field(c["name"].get<std::string>()) << "," << (c["pass"].get<bool>() ? "true" : "false") << ","
         << csv_field(c["detail"].get<std::string>()) << "\n";
  }
  os << "elapsed_ms," << j["elapsed_ms"].dump() << "\n";
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Hochschild and Poisson homology of the algebras B(M) defined by the potential f z", "potentia"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* a) {
    auto* pre = a->add_option("--preset", o.preset, "classical, jordan, quantum or quantum:q (default jordan)");
    auto* mat = a->add_option("--matrix", o.matrix, "matrix as JSON, e.g. [[\"-1\",\"-1\"],[\"1\",\"0\"]]");
    auto* mf = a->add_option("--matrix-file", o.matrix_file, "file holding the matrix JSON");
    pre->excludes(mat)->excludes(mf);
    mat->excludes(mf);
    a->add_option("--max-degree", o.max_degree, "highest internal degree (default 8, or POTENTIA_MAX_DEGREE)");
    a->add_option("--q", o.q, "quantum parameter for quantum presets and comparisons (default 2)");
    a->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    a->add_option("--out", o.out, "write the report here instead of stdout");
    a->add_flag("--no-timing", o.no_timing, "report elapsed_ms as 0");
  };

  std::string command, which;
  auto* classify = app.add_subcommand("classify", "type of a 2x2 matrix up to congruence and scaling");
  auto* hilbert = app.add_subcommand("hilbert", "dimensions of B(M) in degrees 0..D");
  auto* homology = app.add_subcommand("homology", "homology tables");
  homology->require_subcommand(1);
  std::vector<CLI::App*> leaves{classify, hilbert};
  leaves.push_back(homology->add_subcommand("hochschild", "HH_p(B)_d via the Koszul complex"));
  leaves.push_back(homology->add_subcommand("poisson", "HP_p(T)_d of the Poisson potential of M"));
  leaves.push_back(homology->add_subcommand("koszulphi", "homology of wedge with d phi"));
  auto* verify = app.add_subcommand("verify", "run one check");
  verify->require_subcommand(1);
  for (const auto& [v, help] : kVerify) leaves.push_back(verify->add_subcommand(v, help));
  leaves.push_back(app.add_subcommand("report", "all tables and checks"));
  for (auto* a : leaves) add_common(a);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Json j;
  Report rep;
  try {
    Input in = resolve(o);
    j["input"] = input_json(in);
    CLI::App* leaf = nullptr;
    for (auto* a : leaves)
      if (a->parsed()) leaf = a;
    const std::string name = leaf->get_name();
    if (classify->parsed()) {
      require_n2(in, "classify");
      auto tag = classify2(in.M);
      rep.extra["type"] = tag.name();
      if (tag.kind == Type2::Quantum) rep.extra["invariant"] = to_string(tag.s);
      if (tag.q) rep.extra["q"] = to_string(*tag.q);
    } else if (hilbert->parsed()) {
      Json h = Json::array();
      for (auto v : hilbert_coeffs(build_B(in.M).pres, in.D)) h.push_back(v);
      rep.extra["hilbert"] = h;
    } else if (homology->parsed()) {
      if (name == "hochschild")
        add_table(rep, "HH", KoszulComplex(build_B(in.M), in.D).homology());
      else if (name == "poisson")
        add_table(rep, "HP", hp_table(potential_for(in), in.D));
      else
        add_table(rep, "Hphi", hphi_table(potential_for(in), in.D));
    } else if (verify->parsed()) {
      run_verify(name, in, rep);
    } else {
      run_report(in, rep);
    }
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& [k, v] : rep.extra.items()) j[k] = v;
  if (!rep.tables.empty()) {
    j["tables"] = Json::object();
    for (const auto& [name, t] : rep.tables) j["tables"][name] = table_json(t);
  }
  j["checks"] = Json::array();
  for (const auto& c : rep.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  j["elapsed_ms"] = o.no_timing ? 0 : ms;

  const std::string text = o.format == "csv" ? render_csv(j) : j.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return all_pass(rep.checks) ? 0 : 1;
}

}  // namespace potentia
