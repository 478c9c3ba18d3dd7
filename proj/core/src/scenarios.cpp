#include "cosdyn/scenarios.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cosdyn/errors.hpp"
#include "json_writer.hpp"

namespace cosdyn {
namespace {

using detail::Json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + "." + key + ": missing");
  return *it;
}

double number(const Json& j, const std::string& field) {
  if (!j.is_number()) throw ParseError(field + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(field + ": must be finite");
  return x;
}

std::pair<double, double> number_pair(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) throw ParseError(field + ": expected [number, number]");
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot write");
  out << text;
}

}  // namespace

void ExampleParams::validate() const {
  if (!std::isfinite(M) || !(M > 0.0)) throw ValidationError("M", "must be positive");
  if (!std::isfinite(delta) || !(delta >= 1.0)) throw ValidationError("delta", "must be >= 1");
  if (!(M >= 2.0 + 2.0 * delta)) throw ValidationError("M", "must satisfy M >= 2 + 2*delta");
}

CosineSystem build_example(const ExampleParams& params) {
  params.validate();
  const double right = 1.0 + params.delta;
  return {Homeomorphism::translation(1.0),
          WeightFunction({{-1.0, params.M}, {1.0, right}}, params.M, right)};
}

AtomicMeasure parse_measure(std::string_view text) {
  const Json j = parse_json(text);
  const Json& atoms = member(j, "atoms", "measure");
  if (!atoms.is_array()) throw ParseError("measure.atoms: expected an array");
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto [pos, mass] = number_pair(atoms[i], "atoms[" + std::to_string(i) + "]");
    out.push_back({pos, mass});
  }
  return AtomicMeasure(std::move(out));
}

std::string serialize_measure(const AtomicMeasure& m) {
  Json atoms = Json::array();
  for (const Atom& a : m.atoms()) atoms.push_back(Json::array({a.position, a.mass}));
  return detail::dump_canonical(Json{{"atoms", atoms}});
}

CosineSystem parse_system(std::string_view text) {
  const Json j = parse_json(text);
  const Json& alpha = member(j, "alpha", "system");
  const Json& kind = member(alpha, "kind", "alpha");
  if (!kind.is_string()) throw ParseError("alpha.kind: expected a string");

  std::optional<Homeomorphism> h;
  if (kind == "translation") {
    h = Homeomorphism::translation(number(member(alpha, "b", "alpha"), "alpha.b"));
  } else if (kind == "affine") {
    h = Homeomorphism::affine(number(member(alpha, "a", "alpha"), "alpha.a"),
                              number(member(alpha, "b", "alpha"), "alpha.b"));
  } else {
    throw ValidationError("alpha.kind", "must be \"translation\" or \"affine\"");
  }

  const Json& weight = member(j, "weight", "system");
  const Json& bps = member(weight, "breakpoints", "weight");
  if (!bps.is_array()) throw ParseError("weight.breakpoints: expected an array");
  std::vector<Breakpoint> points;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const auto [x, y] = number_pair(bps[i], "weight.breakpoints[" + std::to_string(i) + "]");
    points.push_back({x, y});
  }
  const double left = number(member(weight, "left_tail", "weight"), "weight.left_tail");
  const double right = number(member(weight, "right_tail", "weight"), "weight.right_tail");
  try {
    return {*h, WeightFunction(std::move(points), left, right)};
  } catch (const ValidationError& e) {
    throw ValidationError("weight." + e.field(), e.what());
  }
}

std::string serialize_system(const CosineSystem& sys) {
  Json alpha;
  if (sys.alpha.kind() == Homeomorphism::Kind::translation) {
    alpha = Json{{"kind", "translation"}, {"b", sys.alpha.offset()}};
  } else {
    alpha = Json{{"kind", "affine"}, {"a", sys.alpha.slope()}, {"b", sys.alpha.offset()}};
  }
  Json bps = Json::array();
  for (const Breakpoint& b : sys.weight.shape().breakpoints()) {
    bps.push_back(Json::array({b.x, b.y}));
  }
  const Json j{{"alpha", alpha},
               {"weight",
                {{"breakpoints", bps},
                 {"left_tail", sys.weight.shape().left_tail()},
                 {"right_tail", sys.weight.shape().right_tail()}}}};
  return detail::dump_canonical(j);
}

AtomicMeasure load_measure(const std::filesystem::path& path) {
  return parse_measure(read_file(path));
}

CosineSystem load_system(const std::filesystem::path& path) {
  return parse_system(read_file(path));
}

void save_measure(const std::filesystem::path& path, const AtomicMeasure& m) {
  write_file(path, serialize_measure(m));
}

void save_system(const std::filesystem::path& path, const CosineSystem& sys) {
  write_file(path, serialize_system(sys));
}

WitnessCase parse_witness_case(std::string_view name) {
  if (name == "d-equals-k") return WitnessCase::d_equals_k;
  if (name == "e-equals-k") return WitnessCase::e_equals_k;
  throw ValidationError("case", "must be \"d-equals-k\" or \"e-equals-k\"");
}

std::string_view to_string(WitnessCase c) noexcept {
  switch (c) {
    case WitnessCase::d_equals_k:
      return "d-equals-k";
    case WitnessCase::e_equals_k:
      return "e-equals-k";
    case WitnessCase::custom:
      return "custom";
  }
  return "custom";
}

RunConfig parse_run_config(std::string_view text, const std::filesystem::path& base_dir) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("config: expected an object");

  auto resolve = [&](const Json& v, const std::string& field) {
    if (!v.is_string()) throw ParseError(field + ": expected a path string");
    std::filesystem::path p = v.get<std::string>();
    return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
  };

  RunConfig c;
  if (j.contains("system")) c.system = resolve(j["system"], "system");
  if (j.contains("measures")) {
    const Json& ms = j["measures"];
    if (!ms.is_array()) throw ParseError("measures: expected an array");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      c.measures.push_back(resolve(ms[i], "measures[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("window")) {
    const auto [lo, hi] = number_pair(j["window"], "window");
    if (lo > hi) throw ValidationError("window", "requires lo <= hi");
    c.window = CompactWindow(lo, hi);
  }
  if (j.contains("horizon")) {
    if (!j["horizon"].is_number_integer()) throw ParseError("horizon: expected an integer");
    c.horizon = j["horizon"].get<int>();
    if (*c.horizon < 1) throw ValidationError("horizon", "must be >= 1");
  }
  auto positive = [&](const char* key) -> std::optional<double> {
    if (!j.contains(key)) return std::nullopt;
    const double x = number(j[key], key);
    if (!(x > 0.0)) throw ValidationError(key, "must be positive");
    return x;
  };
  c.tol = positive("tol");
  c.radius = positive("radius");
  c.grid_step = positive("grid_step");
  if (j.contains("case")) {
    if (!j["case"].is_string()) throw ParseError("case: expected a string");
    c.witness_case = parse_witness_case(j["case"].get<std::string>());
  }
  if (j.contains("out")) c.out = resolve(j["out"], "out");
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  return parse_run_config(read_file(path), path.parent_path());
}

}  // namespace cosdyn
