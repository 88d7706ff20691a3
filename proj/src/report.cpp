#include "simdiag/report.hpp"

#include <sstream>

#include "simdiag/errors.hpp"

namespace simdiag {

Json info_json(const ConstructedGroup& cg) {
  const auto& g = cg.group;
  Json j;
  j["group"] = cg.name;
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["num_classes"] = g.num_classes();
  Json classes = Json::array();
  for (const auto& c : g.classes()) {
    Json row;
    row["rep_cycles"] = g.cycle_string(c.representative);
    row["size"] = c.size();
    row["rep_order"] = g.element_order(c.representative);
    classes.push_back(std::move(row));
  }
  j["classes"] = std::move(classes);
  Json auts = Json::array();
  for (const auto& a : cg.auts) auts.push_back(a.label);
  j["aut_realizations"] = std::move(auts);
  return j;
}

Json widths_json(const EnumeratedGroup& g, const WidthReport& report) {
  Json j;
  j["group"] = report.group;
  j["order"] = report.order;
  Json classes = Json::array();
  for (const auto& row : report.classes) {
    Json r;
    r["rep_cycles"] = g.cycle_string(row.rep);
    r["rep_order"] = row.rep_order;
    r["size"] = row.size;
    r["c"] = row.c;
    r["c_i"] = row.c_i;
    r["c_x"] = row.c_x;
    r["cn"] = row.cn;
    classes.push_back(std::move(r));
  }
  j["classes"] = std::move(classes);
  j["maxima"] = Json{{"c", report.c}, {"c_i", report.c_i}, {"c_a", report.c_a}, {"cn", report.cn}};
  if (report.incomplete) j["incomplete"] = true;
  return j;
}

std::string widths_csv(const EnumeratedGroup& g, const WidthReport& report) {
  std::ostringstream os;
  os << "group,order,rep_cycles,rep_order,size,c,c_i,c_x,cn\n";
  for (const auto& row : report.classes)
    os << report.group << ',' << report.order << ',' << '"' << g.cycle_string(row.rep) << '"'
       << ',' << row.rep_order << ',' << row.size << ',' << row.c << ',' << row.c_i << ','
       << row.c_x << ',' << row.cn << '\n';
  os << report.group << ',' << report.order << ",\"(maxima)\",," << ',' << report.c << ','
     << report.c_i << ',' << report.c_a << ',' << report.cn << '\n';
  return os.str();
}

Json covering_json(const EnumeratedGroup& g, const WidthReport& report) {
  Json j;
  j["group"] = report.group;
  j["order"] = report.order;
  Json classes = Json::array();
  for (const auto& row : report.classes) {
    Json r;
    r["rep_cycles"] = g.cycle_string(row.rep);
    r["size"] = row.size;
    r["cn"] = row.cn;
    classes.push_back(std::move(r));
  }
  j["classes"] = std::move(classes);
  j["cn"] = report.cn;
  if (report.incomplete) j["incomplete"] = true;
  return j;
}

Json certificate_json(const EnumeratedGroup& g, const BoundCertificate& cert) {
  Json c;
  c["t_cycles"] = g.cycle_string(cert.t);
  c["c_x_t"] = cert.c_x_t;
  c["c_i_group"] = cert.c_i_group;
  c["lower_m"] = cert.lower_m;
  c["upper_1"] = cert.upper_1;
  if (cert.upper_2)
    c["upper_2"] = cert.upper_2;
  else
    c["upper_2"] = nullptr;
  c["diameter"] = cert.diameter;
  return c;
}

Json orbdiam_json(const DiagonalGeometry& geom, const std::string& group_name,
                  const OrbdiamReport& report, const std::vector<BoundCertificate>& certs) {
  Json j;
  j["T"] = group_name;
  j["k"] = geom.k();
  j["variant"] = variant_name(geom.variant());
  j["omega_size"] = report.omega;
  j["rank"] = report.rank;
  Json orbitals = Json::array();
  for (const auto& o : report.orbitals) {
    Json r;
    r["suborbit_size"] = o.suborbit_size;
    r["valency"] = o.valency;
    r["diameter"] = o.diameter;
    orbitals.push_back(std::move(r));
  }
  j["orbitals"] = std::move(orbitals);
  j["orbdiam"] = report.orbdiam;
  Json cj = Json::array();
  for (const auto& c : certs) cj.push_back(certificate_json(geom.T(), c));
  j["certificates"] = std::move(cj);
  return j;
}

Json chartable_json(const std::string& group_name, const CharacterTable& table) {
  Json j;
  j["group"] = group_name;
  j["order"] = table.group_order;
  j["classes"] = Json{{"sizes", table.class_sizes}, {"rep_orders", table.rep_orders}};
  j["degrees"] = table.degrees;
  Json values = Json::array();
  for (const auto& row : table.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(Json::array({v.real(), v.imag()}));
    values.push_back(std::move(r));
  }
  j["values"] = std::move(values);
  return j;
}

CharacterTable chartable_from_json(const EnumeratedGroup& g, const Json& j) {
  CharacterTable table;
  table.group_order = j.at("order").get<std::uint64_t>();
  if (table.group_order != g.order())
    fail(ErrorKind::Parse, "imported table order does not match the group");
  table.class_sizes = j.at("classes").at("sizes").get<std::vector<std::uint64_t>>();
  table.rep_orders = j.at("classes").at("rep_orders").get<std::vector<std::uint32_t>>();
  if (table.class_sizes.size() != g.num_classes())
    fail(ErrorKind::Parse, "imported table class count does not match the group");
  for (std::uint32_t c = 0; c < g.num_classes(); ++c) {
    if (table.class_sizes[c] != g.classes()[c].size() ||
        table.rep_orders[c] != g.element_order(g.classes()[c].representative))
      fail(ErrorKind::Parse, "imported table columns do not match the class list; "
                             "columns must follow the group's class order");
  }
  table.inverse_class.resize(g.num_classes());
  for (std::uint32_t c = 0; c < g.num_classes(); ++c) table.inverse_class[c] = g.inverse_class(c);
  table.degrees = j.at("degrees").get<std::vector<std::uint32_t>>();
  for (const auto& row : j.at("values")) {
    std::vector<std::complex<double>> r;
    for (const auto& v : row) r.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    table.values.push_back(std::move(r));
  }
  if (table.values.size() != table.degrees.size() || table.values.size() != g.num_classes())
    fail(ErrorKind::Parse, "imported table is not square");
  if (table.row_orthogonality_residual() > table.tolerance ||
      table.column_orthogonality_residual() > table.tolerance)
    fail(ErrorKind::LiftFailure, "imported table fails orthogonality");
  return table;
}

std::string render_table(const Json& j) {
  std::ostringstream os;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_array()) {
      os << it.key() << ":\n";
      for (const auto& row : *it) os << "  " << row.dump() << "\n";
    } else {
      os << it.key() << ": " << it->dump() << "\n";
    }
  }
  return os.str();
}

}  // namespace simdiag
