#include "sdutm/config.hpp"

#include <fstream>
#include <sstream>

#include "sdutm/expr.hpp"

namespace sdutm {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(trim(item)));
  return out;
}

StencilSpec named_stencil(const std::string& name, const PdeSpec& pde) {
  using namespace stencils;
  if (name == "forward1") return advection_forward(pde.c);
  if (name == "backward1") return advection_backward(pde.c);
  if (name == "centered1") return advection_centered(pde.c);
  if (name == "backward2") return advection_backward2(pde.c);
  if (name == "centered2")
    return pde.kind == PdeKind::Schrodinger ? schrodinger_centered() : heat_centered();
  if (name == "centered4") return heat_centered4();
  if (name == "forward2") return heat_forward();
  if (name == "backward2heat") return heat_backward();
  throw Error(kErrBadArgument, "unknown stencil name '" + name + "'");
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(kErrBadArgument, "config line without '=': " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

IBVPSpec parse_problem_config(const std::string& text) {
  auto kv = parse_key_values(text);
  auto get = [&](const std::string& key, const std::string& fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  };
  auto require = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(kErrBadArgument, "missing config key '" + key + "'");
    return it->second;
  };

  IBVPSpec spec;
  std::string pde = require("pde");
  std::string bkind = get("boundary.kind", "none");

  if (pde == "advection") {
    spec.pde.kind = PdeKind::Advection;
    spec.pde.sign = (bkind == "none") ? +1 : -1;
  } else if (pde == "heat") {
    spec.pde.kind = PdeKind::Heat;
  } else if (pde == "schrodinger") {
    spec.pde.kind = PdeKind::Schrodinger;
  } else {
    throw Error(kErrBadArgument, "unknown pde '" + pde + "'");
  }
  spec.pde.c = std::stod(get("c", "1.0"));
  spec.h = std::stod(require("h"));
  spec.t0 = std::stod(get("t0", "0"));

  spec.initial = space_from_expr(require("initial.expr"));

  if (bkind == "none") {
    spec.boundary.kind = BoundaryKind::None;
  } else if (bkind == "dirichlet" || bkind == "neumann") {
    spec.boundary.kind = bkind == "dirichlet" ? BoundaryKind::Dirichlet : BoundaryKind::Neumann;
    spec.boundary.data = time_from_expr(require("boundary.expr"));
  } else {
    throw Error(kErrBadArgument, "unknown boundary kind '" + bkind + "'");
  }

  if (kv.count("stencil.offsets")) {
    auto offs = parse_list(require("stencil.offsets"));
    auto cfs = parse_list(require("stencil.coeffs"));
    StencilSpec st;
    for (double o : offs) st.offsets.push_back(static_cast<int>(o));
    for (double c : cfs) st.coeffs.push_back(cdouble(c, 0.0));
    st.h_power = std::stoi(get("stencil.hpower", std::to_string(spec.pde.spatial_order())));
    st.label = "custom";
    spec.stencil = st;
  } else {
    std::string name = get("stencil", "");
    if (name.empty()) {
      switch (spec.pde.kind) {
        case PdeKind::Advection: name = spec.pde.sign > 0 ? "forward1" : "backward1"; break;
        case PdeKind::Heat:
        case PdeKind::Schrodinger: name = "centered2"; break;
      }
    }
    spec.stencil = named_stencil(name, spec.pde);
  }
  return spec;
}

IBVPSpec load_problem_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(kErrBadArgument, "cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_config(buffer.str());
}

}  // namespace sdutm
