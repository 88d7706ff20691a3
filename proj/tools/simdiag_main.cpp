#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "simdiag/characters.hpp"
#include "simdiag/diagonal.hpp"
#include "simdiag/errors.hpp"
#include "simdiag/parallel.hpp"
#include "simdiag/report.hpp"
#include "simdiag/verify.hpp"
#include "simdiag/widths.hpp"

namespace {

using namespace simdiag;

struct RunConfig {
  std::uint64_t order_cap = kDefaultOrderCap;
  std::uint64_t point_cap = kDefaultPointCap;
  std::uint32_t cn_cap = 64;
  std::uint64_t table_cap = 25000;
  unsigned threads = default_threads();
  std::string format = "json";  // json | csv | table
  std::string out;
  double max_seconds = 0;  // 0 = no deadline

  std::optional<std::chrono::steady_clock::time_point> deadline() const {
    if (max_seconds <= 0) return std::nullopt;
    return std::chrono::steady_clock::now() +
           std::chrono::milliseconds(static_cast<long long>(max_seconds * 1000));
  }
};

void apply_env(RunConfig& cfg) {
  auto from_env = [](const char* name, auto& slot) {
    if (const char* v = std::getenv(name)) slot = static_cast<std::decay_t<decltype(slot)>>(std::stoull(v));
  };
  from_env("SIMDIAG_ORDER_CAP", cfg.order_cap);
  from_env("SIMDIAG_POINT_CAP", cfg.point_cap);
  from_env("SIMDIAG_CN_CAP", cfg.cn_cap);
  from_env("SIMDIAG_TABLE_CAP", cfg.table_cap);
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::Parse, "cannot open config file: " + path);
  std::string line;
  while (std::getline(f, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    key = trim(key);
    value = trim(value);
    if (key == "order_cap") cfg.order_cap = std::stoull(value);
    else if (key == "point_cap") cfg.point_cap = std::stoull(value);
    else if (key == "cn_cap") cfg.cn_cap = static_cast<std::uint32_t>(std::stoul(value));
    else if (key == "table_cap") cfg.table_cap = std::stoull(value);
    else if (key == "threads") cfg.threads = static_cast<unsigned>(std::stoul(value));
    else if (key == "format") cfg.format = value;
    else if (key == "out") cfg.out = value;
    else if (key == "max_seconds") cfg.max_seconds = std::stod(value);
    else fail(ErrorKind::Parse, "unknown config key: " + key);
  }
}

void emit(const RunConfig& cfg, const Json& j, const std::string& csv = "") {
  std::string text;
  if (cfg.format == "json")
    text = j.dump(2) + "\n";
  else if (cfg.format == "csv" && !csv.empty())
    text = csv;
  else
    text = render_table(j);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) fail(ErrorKind::Usage, "cannot write output file: " + cfg.out);
    f << text;
  }
}

WidthReport compute_widths(const ConstructedGroup& cg, const std::string& aut_selector,
                           const RunConfig& cfg) {
  auto auts = select_auts(cg, aut_selector);
  WidthOptions opt;
  opt.threads = cfg.threads;
  opt.cn_cap = cfg.cn_cap;
  opt.deadline = cfg.deadline();
  return group_widths(cg.group, auts, cg.name, opt);
}

DiagonalGeometry make_geometry_for(const ConstructedGroup& cg,
                                   const std::vector<AutRealization>& auts, int k,
                                   const std::string& variant_str, const RunConfig& cfg) {
  Variant variant = parse_variant(variant_str);
  std::span<const AutRealization> span_auts;
  if (variant == Variant::DkT || variant == Variant::Custom) span_auts = auts;
  return DiagonalGeometry(cg.group, k, variant, cfg.point_cap, span_auts);
}

std::vector<BoundCertificate> gamma0_certificates(const DiagonalGeometry& geom,
                                                  const WidthReport& widths) {
  std::vector<BoundCertificate> certs;
  for (const auto& row : widths.classes) {
    std::uint32_t c_x_t = geom.variant() == Variant::DkT ? row.c_x : row.c_i;
    certs.push_back(bound_certificate(geom, row.rep, c_x_t, widths.c_i));
  }
  return certs;
}

ElemIdx parse_element(const EnumeratedGroup& g, const std::string& cycles) {
  Permutation p = Permutation::from_cycles(g.degree(), cycles);
  auto idx = g.find(p);
  if (!idx) fail(ErrorKind::Usage, "element " + cycles + " is not in the group");
  return *idx;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"widths, covering numbers and orbital diameters of diagonal-type groups"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  apply_env(cfg);
  std::string config_path;
  app.add_option("--config", config_path, "key=value file with default options");
  app.add_option("--order-cap", cfg.order_cap, "element enumeration cap");
  app.add_option("--point-cap", cfg.point_cap, "coset space size cap");
  app.add_option("--cn-cap", cfg.cn_cap, "covering-number iteration cap");
  app.add_option("--table-cap", cfg.table_cap, "character-table order cap");
  app.add_option("--threads", cfg.threads, "worker thread count");
  app.add_option("--format", cfg.format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", cfg.out, "write the report to a file");
  app.add_option("--max-seconds", cfg.max_seconds, "soft deadline; partial results are marked");

  std::string spec, aut_selector = "aut", variant_str = "Tk", t_cycles, target_str, suite = "all";
  std::string import_path, export_path, dot_path;
  int k = 2;

  auto* cmd_info = app.add_subcommand("info", "order and class data of a group");
  cmd_info->add_option("spec", spec, "group spec, e.g. A5 or PSL2(7)")->required();

  auto* cmd_widths = app.add_subcommand("widths", "conjugacy widths and covering numbers");
  cmd_widths->add_option("spec", spec)->required();
  cmd_widths->add_option("--aut", aut_selector, "inn | aut | file:<path>");

  auto* cmd_covering = app.add_subcommand("covering", "covering numbers per class");
  cmd_covering->add_option("spec", spec)->required();

  auto* cmd_chartable = app.add_subcommand("chartable", "irreducible character table");
  cmd_chartable->add_option("spec", spec)->required();
  cmd_chartable->add_option("--import", import_path, "read a table instead of computing");
  cmd_chartable->add_option("--export", export_path, "also write the table to a file");

  auto* cmd_orbdiam = app.add_subcommand("orbdiam", "orbital diameters of the diagonal action");
  cmd_orbdiam->add_option("spec", spec)->required();
  cmd_orbdiam->add_option("-k,--k", k, "number of factors")->required();
  cmd_orbdiam->add_option("--variant", variant_str, "Tk | TkSk | DkT");
  cmd_orbdiam->add_option("--aut", aut_selector);

  auto* cmd_gamma0 = app.add_subcommand("gamma0", "the orbital graph through (1,...,1,t)");
  cmd_gamma0->add_option("spec", spec)->required();
  cmd_gamma0->add_option("-k,--k", k)->required();
  cmd_gamma0->add_option("--variant", variant_str);
  cmd_gamma0->add_option("--aut", aut_selector);
  cmd_gamma0->add_option("--t", t_cycles, "base element in cycle notation")->required();
  cmd_gamma0->add_option("--dot", dot_path, "write a DOT rendering (|Omega| <= 5000)");

  auto* cmd_nu = app.add_subcommand("nu", "eigenspace codimension of a matrix");
  int nu_n = 0, nu_q = 0;
  bool nu_singer = false, nu_transvection = false;
  std::string nu_entries;
  cmd_nu->add_option("-n", nu_n, "matrix dimension")->required();
  cmd_nu->add_option("-q", nu_q, "field size")->required();
  cmd_nu->add_flag("--singer", nu_singer, "use the Singer element");
  cmd_nu->add_flag("--transvection", nu_transvection, "use a transvection");
  cmd_nu->add_option("--entries", nu_entries, "row-major entries, space separated");

  auto* cmd_verify = app.add_subcommand("verify-paper", "run the expectation suites");
  cmd_verify->add_option("--suite", suite, "widths | covering | diagonal | characters | all");

  auto* cmd_path = app.add_subcommand("path", "explicit path in Gamma_0^t");
  cmd_path->add_option("spec", spec)->required();
  cmd_path->add_option("-k,--k", k)->required();
  cmd_path->add_option("--variant", variant_str);
  cmd_path->add_option("--t", t_cycles)->required();
  cmd_path->add_option("--target", target_str, "k-1 cycle strings separated by ';'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!config_path.empty()) {
    RunConfig file_cfg;
    apply_env(file_cfg);
    apply_config_file(file_cfg, config_path);
    // explicit command-line values win over the config file
    auto keep = [&](auto member, auto& target) {
      (void)member;
      (void)target;
    };
    (void)keep;
    RunConfig merged = file_cfg;
    for (const auto* opt : app.get_options()) {
      if (opt->count() == 0) continue;
      const std::string& name = opt->get_name();
      if (name == "--order-cap") merged.order_cap = cfg.order_cap;
      if (name == "--point-cap") merged.point_cap = cfg.point_cap;
      if (name == "--cn-cap") merged.cn_cap = cfg.cn_cap;
      if (name == "--table-cap") merged.table_cap = cfg.table_cap;
      if (name == "--threads") merged.threads = cfg.threads;
      if (name == "--format") merged.format = cfg.format;
      if (name == "--out") merged.out = cfg.out;
      if (name == "--max-seconds") merged.max_seconds = cfg.max_seconds;
    }
    cfg = merged;
  }

  if (cmd_info->parsed()) {
    ConstructedGroup cg = build_group(spec, cfg.order_cap);
    emit(cfg, info_json(cg));
    return 0;
  }
  if (cmd_widths->parsed()) {
    ConstructedGroup cg = build_group(spec, cfg.order_cap);
    WidthReport report = compute_widths(cg, aut_selector, cfg);
    emit(cfg, widths_json(cg.group, report), widths_csv(cg.group, report));
    return 0;
  }
  if (cmd_covering->parsed()) {
    ConstructedGroup cg = build_group(spec, cfg.order_cap);
    WidthReport report = compute_widths(cg, aut_selector, cfg);
    emit(cfg, covering_json(cg.group, report));
    return 0;
  }
  if (cmd_chartable->parsed()) {
    ConstructedGroup cg = build_group(spec, cfg.order_cap);
    CharacterTable table;
    if (import_path.empty()) {
      table = dixon_table(cg.group, cfg.table_cap);
    } else {
      std::ifstream f(import_path);
      if (!f) fail(ErrorKind::Usage, "cannot open " + import_path);
      table = chartable_from_json(cg.group, Json::parse(f));
    }
    Json j = chartable_json(cg.name, table);
    if (!export_path.empty()) {
      std::ofstream f(export_path);
      f << j.dump(2) << "\n";
    }
    emit(cfg, j);
    return 0;
  }
  if (cmd_orbdiam->parsed()) {
    ConstructedGroup cg = build_group(spec, cfg.order_cap);
    auto auts = select_auts(cg, aut_selector);
    DiagonalGeometry geom = make_geometry_for(cg, auts, k, variant_str, cfg);
    WidthOptions wopt;
    wopt.threads = cfg.threads;
    wopt.cn_cap = cfg.cn_cap;
    WidthReport widths = group_widths(cg.group, auts, cg.name, wopt);
    std::cerr << "# |Omega| = " << geom.omega_size() << ", rank pending; estimated BFS work ~ "
              << geom.omega_size() << " x valency per orbital\n";
    OrbdiamOptions oopt;
    oopt.threads = cfg.threads;
    oopt.deadline = cfg.deadline();
    OrbdiamReport report = orbdiam(geom, oopt);
    auto certs = gamma0_certificates(geom, widths);
    Json j = orbdiam_json(geom, cg.name, report, certs);
    if (report.incomplete) j["incomplete"] = true;
    emit(cfg, j);
    return 0;
  }
  if (cmd_gamma0->parsed()) {
    ConstructedGroup cg = build_group(spec, cfg.order_cap);
    auto auts = select_auts(cg, aut_selector);
    DiagonalGeometry geom = make_geometry_for(cg, auts, k, variant_str, cfg);
    ElemIdx t = parse_element(cg.group, t_cycles);
    WidthOptions wopt;
    wopt.threads = cfg.threads;
    wopt.cn_cap = cfg.cn_cap;
    WidthReport widths = group_widths(cg.group, auts, cg.name, wopt);
    std::uint32_t c_x_t = 0, c_i_t = 0;
    for (const auto& row : widths.classes)
      if (row.class_idx == cg.group.class_of(t)) {
        c_x_t = geom.variant() == Variant::DkT ? row.c_x : row.c_i;
        c_i_t = row.c_i;
      }
    (void)c_i_t;
    BoundCertificate cert = bound_certificate(geom, t, c_x_t, widths.c_i);
    if (!dot_path.empty()) {
      std::vector<ElemIdx> tuple(static_cast<std::size_t>(k) - 1, EnumeratedGroup::identity());
      tuple.back() = t;
      std::ofstream f(dot_path);
      f << dot_export(orbital_graph(geom, geom.encode(tuple)));
    }
    Json j = certificate_json(cg.group, cert);
    j["T"] = cg.name;
    j["k"] = k;
    j["variant"] = variant_name(geom.variant());
    j["omega_size"] = geom.omega_size();
    emit(cfg, j);
    return 0;
  }
  if (cmd_nu->parsed()) {
    MatrixFq m;
    if (nu_singer) {
      m = singer_matrix(nu_n, nu_q);
    } else if (nu_transvection) {
      m = transvection_matrix(nu_n, nu_q);
    } else if (!nu_entries.empty()) {
      m = MatrixFq(nu_n, GfField::get(nu_q));
      std::istringstream is(nu_entries);
      for (int i = 0; i < nu_n * nu_n; ++i) {
        int v;
        if (!(is >> v) || v < 0 || v >= nu_q) fail(ErrorKind::Usage, "bad matrix entries");
        m.a[static_cast<std::size_t>(i)] = static_cast<Fq>(v);
      }
    } else {
      fail(ErrorKind::Usage, "choose --singer, --transvection or --entries");
    }
    Json j;
    j["n"] = nu_n;
    j["q"] = nu_q;
    j["matrix"] = m.to_string();
    j["nu"] = nu(m);
    emit(cfg, j);
    return 0;
  }
  if (cmd_verify->parsed()) {
    VerifyOptions vopt;
    vopt.threads = cfg.threads;
    vopt.order_cap = cfg.order_cap;
    vopt.point_cap = cfg.point_cap;
    vopt.cn_cap = cfg.cn_cap;
    vopt.table_cap = cfg.table_cap;
    auto results = run_verify_suite(suite, vopt);
    Json j = verify_json(suite, results);
    emit(cfg, j);
    std::uint64_t failed = j["failed"].get<std::uint64_t>();
    std::cerr << "# " << j["passed"] << " passed, " << failed << " failed, " << j["skipped"]
              << " skipped\n";
    return failed == 0 ? 0 : 1;
  }
  if (cmd_path->parsed()) {
    ConstructedGroup cg = build_group(spec, cfg.order_cap);
    DiagonalGeometry geom = make_geometry_for(cg, cg.auts, k, variant_str, cfg);
    ElemIdx t = parse_element(cg.group, t_cycles);
    std::vector<ElemIdx> tuple;
    std::stringstream ss(target_str);
    std::string part;
    while (std::getline(ss, part, ';')) tuple.push_back(parse_element(cg.group, part));
    if (tuple.size() != static_cast<std::size_t>(k) - 1)
      fail(ErrorKind::Usage, "target needs exactly k-1 components");
    DPoint target = geom.encode(tuple);
    auto path = construct_path(geom, t, target);
    Json j;
    j["T"] = cg.name;
    j["k"] = k;
    j["variant"] = variant_name(geom.variant());
    j["t"] = cg.group.cycle_string(t);
    j["length"] = path.size();
    Json steps = Json::array();
    for (DPoint p : path) {
      Json point = Json::array();
      for (ElemIdx e : geom.decode(p)) point.push_back(cg.group.cycle_string(e));
      steps.push_back(std::move(point));
    }
    j["path"] = std::move(steps);
    emit(cfg, j);
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::Usage:
        return 2;
      case ErrorKind::CapExceeded:
        return 3;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
