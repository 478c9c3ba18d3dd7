#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cosdyn/dynamics.hpp"
#include "cosdyn/measure.hpp"
#include "cosdyn/witness.hpp"

namespace cosdyn {

/// Constants of the shifted ramp example. Requires M >= 2 + 2·delta and
/// delta >= 1.
struct ExampleParams {
  double M = 4.0;
  double delta = 1.0;

  /// Throws ValidationError naming the violated constraint.
  void validate() const;
};

/// α(t) = t + 1 and w = M on (-inf, -1], the linear ramp from M to 1 + delta
/// on [-1, 1], and 1 + delta on [1, inf).
CosineSystem build_example(const ExampleParams& params);

// Measure files: {"atoms": [[position, mass], ...]}.
// System files: {"alpha": {"kind": "translation", "b": x} or
//                          {"kind": "affine", "a": x, "b": y},
//                "weight": {"breakpoints": [[x, y], ...],
//                           "left_tail": x, "right_tail": y}}.
// Parsing throws ParseError for malformed text and ValidationError for
// invariant violations. Output is canonical: normalized atoms, numbers with
// 17 significant digits, so load-then-save of a canonical file is byte-stable.

AtomicMeasure parse_measure(std::string_view text);
std::string serialize_measure(const AtomicMeasure& m);
CosineSystem parse_system(std::string_view text);
std::string serialize_system(const CosineSystem& sys);

AtomicMeasure load_measure(const std::filesystem::path& path);
CosineSystem load_system(const std::filesystem::path& path);
void save_measure(const std::filesystem::path& path, const AtomicMeasure& m);
void save_system(const std::filesystem::path& path, const CosineSystem& sys);

/// A run-configuration file bundling the inputs of one command. Every field
/// is optional so command-line flags can fill in or override. Relative paths
/// are resolved against the configuration file's directory.
///
///   {"system": "example.json", "measures": ["mu.json", "nu.json"],
///    "window": [-5, 5], "horizon": 60, "tol": 1e-6, "radius": 0.25,
///    "case": "e-equals-k", "grid_step": 0.001, "out": "report.json"}
struct RunConfig {
  std::optional<std::filesystem::path> system;
  std::vector<std::filesystem::path> measures;
  std::optional<CompactWindow> window;
  std::optional<int> horizon;
  std::optional<double> tol;
  std::optional<double> radius;
  std::optional<WitnessCase> witness_case;
  std::optional<double> grid_step;
  std::optional<std::filesystem::path> out;
};

RunConfig parse_run_config(std::string_view text,
                           const std::filesystem::path& base_dir = {});
RunConfig load_run_config(const std::filesystem::path& path);

/// "d-equals-k" / "e-equals-k". Throws ValidationError otherwise.
WitnessCase parse_witness_case(std::string_view name);
std::string_view to_string(WitnessCase c) noexcept;

}  // namespace cosdyn
