#include "bifurcato_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "bifurcato/error.hpp"
#include "commands.hpp"

namespace bifurcato::cli {

namespace {

// Usage problems found after CLI11 has parsed the flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* const kDimensionless[] = {"a", "b", "c", "m", "n"};
const char* const kDimensional[] = {"Lambda", "d", "mu", "delta", "kappa", "beta", "gamma"};

std::string flag_name(const std::string& key) {
  std::string f = key;
  for (auto& ch : f)
    if (ch == '_') ch = '-';
  return "--" + f;
}

struct Parsed {
  std::string config_path;
  std::string out_path;
  std::string csv_path;
  std::string seed;
  std::string target;
  std::map<std::string, std::string> params;  // flag values as typed
  std::map<std::string, std::string> options;
  std::map<std::string, bool> switches;
};

double parse_real(const std::string& flag, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError(flag + ": not a number: " + text);
  return v;
}

json load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::IoError, "cannot read config " + path);
  json doc;
  try {
    f >> doc;
  } catch (const json::exception& e) {
    throw UsageError("--config: " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw UsageError("--config: " + path + ": not a JSON object");
  // accept a previous output document and reuse its config
  if (doc.contains("config") && doc.contains("schema_version")) return doc.at("config");
  return doc;
}

// Defaults < config file < flags.
json resolve(const Command& cmd, const Parsed& a) {
  json file = a.config_path.empty() ? json::object() : load_config(a.config_path);
  json cfg = json::object();

  if (cmd.takes_params) {
    json params = file.value("params", json::object());
    json dimless = params.value("dimensionless", json());
    json dim = params.value("dimensional", json());
    for (const auto& [k, v] : a.params) {
      const bool is_dim = std::find(std::begin(kDimensional), std::end(kDimensional), k) != std::end(kDimensional);
      json& target = is_dim ? dim : dimless;
      if (target.is_null()) target = json::object();
      target[k] = parse_real("--" + k, v);
    }
    if (!dimless.is_null() && !dim.is_null())
      throw UsageError("parameters must be either dimensionless (a b c m n) or dimensional, not both");
    json out = json::object();
    if (!dim.is_null()) {
      const DimensionalParams d{};
      json full = dimensional_json(d);
      for (auto it = dim.begin(); it != dim.end(); ++it) {
        if (!full.contains(it.key())) throw UsageError("unknown dimensional parameter " + it.key());
        full[it.key()] = it.value();
      }
      out["dimensional"] = full;
    } else {
      json full = params_json(DimensionlessParams{});
      if (!dimless.is_null())
        for (auto it = dimless.begin(); it != dimless.end(); ++it) {
          if (!full.contains(it.key())) throw UsageError("unknown parameter " + it.key());
          full[it.key()] = it.value();
        }
      out["dimensionless"] = full;
    }
    cfg["params"] = out;
  }

  json file_opts = file.value("options", json::object());
  json opts = json::object();
  for (const auto& spec : cmd.opts) {
    json v = spec.def;
    if (file_opts.contains(spec.name)) v = file_opts.at(spec.name);
    const std::string flag = flag_name(spec.name);
    if (spec.type == OptType::Bool) {
      if (auto it = a.switches.find(spec.name); it != a.switches.end()) v = it->second;
      if (!v.is_boolean()) throw UsageError(flag + ": expected true or false");
    } else if (auto it = a.options.find(spec.name); it != a.options.end()) {
      if (spec.type == OptType::Text)
        v = it->second;
      else if (spec.type == OptType::Int)
        v = static_cast<std::int64_t>(parse_real(flag, it->second));
      else
        v = parse_real(flag, it->second);
    }
    opts[spec.name] = v;
  }
  for (auto it = file_opts.begin(); it != file_opts.end(); ++it)
    if (!opts.contains(it.key())) throw UsageError("unknown option in config: " + it.key());
  cfg["options"] = opts;

  std::uint64_t seed = file.value("seed", std::uint64_t{0});
  if (!a.seed.empty()) {
    std::size_t used = 0;
    try {
      seed = std::stoull(a.seed, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != a.seed.size()) throw UsageError("--seed: not an unsigned integer: " + a.seed);
  }
  cfg["seed"] = seed;
  if (!a.target.empty()) cfg["example"] = a.target;
  return cfg;
}

Context make_context(const Command& cmd, const json& cfg) {
  Context ctx;
  ctx.opt = cfg.at("options");
  ctx.seed = cfg.at("seed").get<std::uint64_t>();
  ctx.target = cfg.value("example", std::string{});
  if (cmd.takes_params) {
    const json& params = cfg.at("params");
    if (params.contains("dimensional")) {
      const json& d = params.at("dimensional");
      DimensionalParams dp;
      dp.Lambda = opt_real(d, "Lambda");
      dp.d = opt_real(d, "d");
      dp.mu = opt_real(d, "mu");
      dp.delta = opt_real(d, "delta");
      dp.kappa = opt_real(d, "kappa");
      dp.beta = opt_real(d, "beta");
      dp.gamma = opt_real(d, "gamma");
      ctx.dim = dp;
      ctx.p = nondimensionalize(dp);
    } else {
      const json& d = params.at("dimensionless");
      ctx.p = {opt_real(d, "a"), opt_real(d, "b"), opt_real(d, "c"), opt_real(d, "m"), opt_real(d, "n")};
    }
  }
  return ctx;
}

void write_out(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bifurcation workbench for an SIRS model with cubic saturated incidence", "bifurcato"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Parsed parsed;
  std::map<std::string, CLI::App*> subs;
  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    subs[cmd.name] = sub;
    sub->add_option("--config", parsed.config_path, "JSON config file (flags take precedence)");
    sub->add_option("--out", parsed.out_path, "JSON output path (default: stdout)");
    sub->add_option("--seed", parsed.seed, "seed for randomized runs");
    if (cmd.has_csv) sub->add_option("--csv", parsed.csv_path, "CSV output path");
    if (cmd.name == "repro")
      sub->add_option("example", parsed.target, "fig5a, fig7a, fig7b, fig8, ex51 or ex52")
          ->required()
          ->check(CLI::IsMember({"fig5a", "fig7a", "fig7b", "fig8", "ex51", "ex52"}));
    if (cmd.takes_params) {
      for (const char* k : kDimensionless)
        sub->add_option_function<std::string>(
            std::string("--") + k, [&parsed, k](const std::string& v) { parsed.params[k] = v; },
            "dimensionless parameter");
      for (const char* k : kDimensional)
        sub->add_option_function<std::string>(
            std::string("--") + k, [&parsed, k](const std::string& v) { parsed.params[k] = v; },
            "dimensional parameter");
    }
    for (const auto& spec : cmd.opts) {
      const std::string name = spec.name;
      if (spec.type == OptType::Bool) {
        sub->add_flag_function(
            flag_name(name), [&parsed, name](std::int64_t c) { parsed.switches[name] = c > 0; },
            spec.help);
        sub->add_flag_function(
            "--no-" + flag_name(name).substr(2), [&parsed, name](std::int64_t) { parsed.switches[name] = false; },
            "");
      } else {
        sub->add_option_function<std::string>(
            flag_name(name), [&parsed, name](const std::string& v) { parsed.options[name] = v; }, spec.help);
      }
    }
  }

  if (args.empty()) {
    err << app.help();
    return 2;
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const Command* cmd = nullptr;
  for (const auto& c : commands())
    if (subs.at(c.name)->parsed()) cmd = &c;

  try {
    const json cfg = resolve(*cmd, parsed);
    const Context ctx = make_context(*cmd, cfg);
    Output result = cmd->run(ctx);

    json doc = {{"schema_version", "1"}, {"command", cmd->name}, {"config", cfg}, {"results", result.results}};
    const auto hits = sanitize_nonfinite(doc);
    doc["nonfinite"] = !hits.empty();
    doc["warnings"] = json::array();
    for (const auto& h : hits) doc["warnings"].push_back("non-finite value at " + h);
    for (const auto& h : hits) err << "warning: non-finite value at " << h << "\n";

    if (result.csv && !parsed.csv_path.empty()) {
      std::ostringstream os;
      write_csv(os, *result.csv);
      write_text_file(parsed.csv_path, os.str());
    }
    write_out(parsed.out_path, dump_json(doc), out);
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bifurcato::cli
