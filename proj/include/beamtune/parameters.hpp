#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "beamtune/lattice.hpp"

namespace beamtune {

// Malformed parameter files and CSV logs.
class InputFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParamKind { K1, Hkick, Vkick, Fse };

std::string_view param_name(ParamKind kind);

// Physical tuning ranges: K1 in [-25, 25] m^-2, kicks and FSE in [-0.005, 0.005].
double param_limit(ParamKind kind);

// One scalar of the flat tuning vector. Ordering follows the beamline: each
// quadrupole contributes K1, HKICK, VKICK and each dipole FSE.
struct ParameterSpec {
  std::size_t position = 0;  // index into the graph's elements
  std::string element;       // unique label: name, or name#k for the k-th reuse
  ParamKind kind = ParamKind::K1;

  double lower() const { return -param_limit(kind); }
  double upper() const { return param_limit(kind); }
  std::string label() const { return element + "." + std::string(param_name(kind)); }
};

std::vector<ParameterSpec> parameter_specs(const BeamlineGraph& graph);

std::vector<double> read_parameters(const BeamlineGraph& graph, std::span<const ParameterSpec> specs);
void write_parameters(BeamlineGraph& graph, std::span<const ParameterSpec> specs, std::span<const double> values);

// Sets K1, HKICK, VKICK and FSE of every tunable element to zero.
void zero_tunables(BeamlineGraph& graph);

// Parameter export file, one assignment per line:
//
//   # comment
//   Q1.K1 = 12.5
//   B1.FSE = -0.001
//
// Parameters not listed default to zero. Unknown or repeated labels and
// values outside the tuning range are errors.
std::string format_parameter_file(std::span<const ParameterSpec> specs, std::span<const double> values);
std::vector<double> parse_parameter_file(std::string_view text, std::span<const ParameterSpec> specs);

void save_parameter_file(const std::string& path, std::span<const ParameterSpec> specs,
                         std::span<const double> values);
std::vector<double> load_parameter_file(const std::string& path, std::span<const ParameterSpec> specs);

}  // namespace beamtune
