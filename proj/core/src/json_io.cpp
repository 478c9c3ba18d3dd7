#include "cosdyn/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json_writer.hpp"

namespace cosdyn {
namespace detail {
namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void emit(const Json& j, int depth, std::string& out);

void emit_scalar(const Json& j, std::string& out) {
  if (j.is_number_float()) {
    const double x = j.get<double>();
    out += std::isfinite(x) ? format_number(x) : "null";
  } else {
    out += j.dump();
  }
}

void newline(int depth, std::string& out) {
  out += '\n';
  out.append(static_cast<std::size_t>(2 * depth), ' ');
}

void emit(const Json& j, int depth, std::string& out) {
  if (is_scalar(j)) {
    emit_scalar(j, out);
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    bool flat = true;
    for (const auto& e : j) flat = flat && is_scalar(e);
    out += '[';
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += flat ? ", " : ",";
      if (!flat) newline(depth + 1, out);
      emit(e, depth + 1, out);
      first = false;
    }
    if (!flat) newline(depth, out);
    out += ']';
  } else {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += '{';
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ',';
      newline(depth + 1, out);
      out += Json(key).dump();
      out += ": ";
      emit(value, depth + 1, out);
      first = false;
    }
    newline(depth, out);
    out += '}';
  }
}

}  // namespace

std::string dump_canonical(const Json& j) {
  std::string out;
  emit(j, 0, out);
  out += '\n';
  return out;
}

}  // namespace detail

namespace {

using detail::Json;

Json measure_json(const AtomicMeasure& m) {
  Json atoms = Json::array();
  for (const Atom& a : m.atoms()) atoms.push_back(Json::array({a.position, a.mass}));
  return Json{{"atoms", atoms}};
}

Json nullable(std::optional<int> v) { return v ? Json(*v) : Json(nullptr); }

Json witness_json(const WitnessReport& r) {
  return Json{
      {"n", r.n},
      {"epsilon_used", r.epsilon_used},
      {"mu_norm", r.mu_norm},
      {"nu_norm", r.nu_norm},
      {"phi", measure_json(r.phi)},
      {"lambda", r.lambda},
      {"dist_phi_to_mu", r.dist_phi_to_mu},
      {"dist_scaled_cosine_to_nu", r.dist_scaled_cosine_to_nu},
      {"norm_bounds",
       {{"T_mu_rest", r.norms.T_mu_rest},
        {"S_mu_rest", r.norms.S_mu_rest},
        {"T_nu_D", r.norms.T_nu_D},
        {"S_nu_E", r.norms.S_nu_E},
        {"T2_nu_D", r.norms.T2_nu_D},
        {"S2_nu_E", r.norms.S2_nu_E}}},
      {"mu_rest_defect", r.mu_rest_defect},
      {"nu_split_defect", r.nu_split_defect},
      {"phi_bound", r.phi_bound},
      {"target_bound", r.target_bound},
      {"success", r.success},
  };
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_json(const CorollaryReport& r) {
  const Json j{
      {"window", Json::array({r.window.lo(), r.window.hi()})},
      {"horizon", r.horizon},
      {"tol", r.tol},
      {"grid_step", r.grid_step},
      {"limit_rule",
       "holds: last value < tol and last quarter non-increasing; "
       "fails: last quarter non-decreasing and >= tol"},
      {"verdicts",
       {{"a", std::string(to_string(r.verdict_a))},
        {"b", std::string(to_string(r.verdict_b))},
        {"c", std::string(to_string(r.verdict_c))},
        {"overall", std::string(to_string(r.overall))}}},
      {"values", {{"a", r.value_a}, {"b", r.value_b}, {"c", r.value_c}}},
  };
  return detail::dump_canonical(j);
}

std::string to_json(const TheoremReport& r) {
  Json entries = Json::array();
  for (const TheoremIndexReport& e : r.entries) {
    entries.push_back(Json{
        {"index", e.index},
        {"mu_on_A", e.mu_on_A},
        {"nu_on_A", e.nu_on_A},
        {"sup_w_on_rest", e.sup_w_on_rest},
        {"sup_inv_w_on_rest", e.sup_inv_w_on_rest},
        {"sup_w_on_D", e.sup_w_on_D},
        {"sup_inv_w_on_E", e.sup_inv_w_on_E},
        {"sup_two_step_on_D", e.sup_two_step_on_D},
        {"sup_two_step_on_E", e.sup_two_step_on_E},
        {"holds", e.holds},
        {"all_hold", e.all_hold},
    });
  }
  const Json j{
      {"eps", r.eps},
      {"grid_step", r.grid_step},
      {"F", r.F},
      {"tail_start", nullable(r.tail_start)},
      {"entries", entries},
  };
  return detail::dump_canonical(j);
}

std::string to_json(const WitnessReport& r) { return detail::dump_canonical(witness_json(r)); }

std::string to_json(const ScanResult& scan) {
  Json reports = Json::array();
  for (const ScanEntry& e : scan.entries) {
    reports.push_back(e.report ? witness_json(*e.report)
                               : Json{{"n", e.n}, {"degenerate", true}});
  }
  const Json j{{"first_stable_n", nullable(scan.first_stable_n)}, {"reports", reports}};
  return detail::dump_canonical(j);
}

std::string to_csv(const CorollaryReport& r) {
  std::ostringstream os;
  os << "n,value_a,value_b,value_c\n";
  for (std::size_t i = 0; i < r.value_a.size(); ++i) {
    os << (i + 1) << ',' << format_number(r.value_a[i]) << ','
       << format_number(r.value_b[i]) << ',' << format_number(r.value_c[i]) << '\n';
  }
  return os.str();
}

std::string to_csv(const ScanResult& scan) {
  std::ostringstream os;
  os << "n,lambda,dist_phi,dist_target,success\n";
  for (const ScanEntry& e : scan.entries) {
    os << e.n << ',';
    if (e.report) {
      os << format_number(e.report->lambda) << ',' << format_number(e.report->dist_phi_to_mu)
         << ',' << format_number(e.report->dist_scaled_cosine_to_nu) << ','
         << (e.report->success ? "true" : "false");
    } else {
      os << ",,,false";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace cosdyn
