#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bifurcato/dynamics.hpp"
#include "bifurcato/focus.hpp"
#include "bifurcato/model.hpp"
#include "bifurcato_cli/serialize.hpp"

namespace bifurcato::cli {

enum class OptType { Real, Int, Bool, Text };

struct OptSpec {
  std::string name;  // config key; the flag is --name with '_' -> '-'
  OptType type = OptType::Real;
  json def;          // null means "derived from the parameters"
  std::string help;
};

struct Context {
  DimensionlessParams p;
  std::optional<DimensionalParams> dim;
  json opt;  // resolved options
  std::uint64_t seed = 0;
  std::string target;  // repro example name
};

struct Output {
  json results;
  std::optional<CsvTable> csv;
};

struct Command {
  std::string name;
  std::string help;
  bool takes_params = true;
  bool has_csv = false;
  std::vector<OptSpec> opts;
  Output (*run)(const Context&);
};

const std::vector<Command>& commands();

// Shared by the command bodies.
json params_json(const DimensionlessParams& p);
json dimensional_json(const DimensionalParams& p);
double opt_real(const json& opt, const std::string& key);
std::size_t opt_positive(const json& opt, const std::string& key);
bool opt_is_null(const json& opt, const std::string& key);
std::vector<double> linspace(double lo, double hi, std::size_t n);

json focus_report_json(const FocusReport& f);
json codim_json(const CodimJacobian& J);
json cycle_json(const LimitCycle& c, bool with_loop);
CsvTable cycles_csv(const std::vector<LimitCycle>& cycles);

Output run_repro(const Context& ctx);

}  // namespace bifurcato::cli
