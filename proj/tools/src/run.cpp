#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "steercorr/error.hpp"
#include "steercorr_app/app.hpp"

namespace steercorr::app {

namespace {

struct Flags {
  std::string config_path;
  std::string input;
  std::string c;
  std::size_t samples = 0;
  int grid = 0;
  std::uint64_t seed = 0;
  std::string format;
  std::string out;
  std::string family;
  double p_start = 0.0;
  double p_end = 0.0;
  double p_step = 0.0;
  std::string axis;
};

struct Bound {
  CLI::Option* config = nullptr;
  CLI::Option* input = nullptr;
  CLI::Option* c = nullptr;
  CLI::Option* samples = nullptr;
  CLI::Option* grid = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* family = nullptr;
  CLI::Option* p_start = nullptr;
  CLI::Option* p_end = nullptr;
  CLI::Option* p_step = nullptr;
  CLI::Option* axis = nullptr;
};

Bound add_options(CLI::App& sub, Flags& f) {
  Bound b;
  b.config = sub.add_option("--config", f.config_path, "JSON config file; flags override its values");
  b.input = sub.add_option("--input", f.input, "state file: {\"c\": [...]} or {\"matrix\": ...}");
  b.c = sub.add_option("--c", f.c, "inline correlation vector \"c1,c2,c3\"");
  b.samples = sub.add_option("--samples", f.samples, "number of sampled states")->check(CLI::PositiveNumber);
  b.grid = sub.add_option("--grid", f.grid, "grid size");
  b.seed = sub.add_option("--seed", f.seed, "random seed (default 0)");
  b.format = sub.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  b.out = sub.add_option("--out", f.out, "write output to this path");
  b.family = sub.add_option("--family", f.family, "werner, grid or random")
                 ->check(CLI::IsMember({"werner", "grid", "random"}));
  b.p_start = sub.add_option("--p-start", f.p_start, "Werner sweep start");
  b.p_end = sub.add_option("--p-end", f.p_end, "Werner sweep end");
  b.p_step = sub.add_option("--p-step", f.p_step, "Werner sweep step");
  b.axis = sub.add_option("--axis", f.axis, "grid family: all, c1, c2 or c3")
               ->check(CLI::IsMember({"all", "c1", "c2", "c3"}));
  return b;
}

Vector3 parse_c(const std::string& text) {
  std::stringstream ss(text);
  std::string item;
  std::vector<double> values;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "--c expects three comma-separated numbers, got \"" + text + "\"");
    }
  }
  if (values.size() != 3) {
    throw Error(ErrorCode::ParseError, "--c expects three comma-separated numbers, got \"" + text + "\"");
  }
  return Vector3(values[0], values[1], values[2]);
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw Error(ErrorCode::ParseError, "format must be csv or json");
}

Family parse_family(const std::string& s) {
  if (s == "werner") return Family::Werner;
  if (s == "grid") return Family::Grid;
  if (s == "random") return Family::Random;
  throw Error(ErrorCode::ParseError, "family must be werner, grid or random");
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open config " + path);
  nlohmann::json doc;
  try {
    in >> doc;
    if (doc.contains("input")) cfg.input_path = doc.at("input").get<std::string>();
    if (doc.contains("c")) {
      const auto v = doc.at("c").get<std::vector<double>>();
      if (v.size() != 3) throw Error(ErrorCode::ParseError, "config \"c\" needs three numbers");
      cfg.inline_c = Vector3(v[0], v[1], v[2]);
    }
    if (doc.contains("samples")) cfg.samples = doc.at("samples").get<std::size_t>();
    if (doc.contains("grid")) cfg.grid = doc.at("grid").get<int>();
    if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("format")) cfg.format = parse_format(doc.at("format").get<std::string>());
    if (doc.contains("out")) cfg.out_path = doc.at("out").get<std::string>();
    if (doc.contains("family")) cfg.family = parse_family(doc.at("family").get<std::string>());
    if (doc.contains("p_start")) cfg.p_start = doc.at("p_start").get<double>();
    if (doc.contains("p_end")) cfg.p_end = doc.at("p_end").get<double>();
    if (doc.contains("p_step")) cfg.p_step = doc.at("p_step").get<double>();
    if (doc.contains("axis")) cfg.axis = doc.at("axis").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

RunConfig build_config(Command command, const Flags& f, const Bound& b) {
  RunConfig cfg;
  cfg.command = command;
  if (*b.config) apply_config_file(f.config_path, cfg);
  if (*b.input) cfg.input_path = f.input;
  if (*b.c) cfg.inline_c = parse_c(f.c);
  if (*b.samples) cfg.samples = f.samples;
  if (*b.grid) cfg.grid = f.grid;
  if (*b.seed) cfg.seed = f.seed;
  if (*b.format) cfg.format = parse_format(f.format);
  if (*b.out) cfg.out_path = f.out;
  if (*b.family) cfg.family = parse_family(f.family);
  if (*b.p_start) cfg.p_start = f.p_start;
  if (*b.p_end) cfg.p_end = f.p_end;
  if (*b.p_step) cfg.p_step = f.p_step;
  if (*b.axis) cfg.axis = f.axis;
  return cfg;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ConvergenceFailure: return kConvergenceFailed;
    case ErrorCode::MonotonicityViolation: return kVerificationFailed;
    default: return kInvalidInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steering and simultaneous-correlation measures for two-qubit states", "steercorr"};
  app.require_subcommand(1);

  struct Entry {
    Command command;
    CLI::App* sub;
    Flags flags;
    Bound bound;
  };
  std::vector<Entry> entries;
  entries.reserve(4);
  const std::pair<Command, const char*> commands[] = {
      {Command::Analyze, "analyze"}, {Command::Sweep, "sweep"},
      {Command::Verify, "verify"}, {Command::Oracle, "oracle"}};
  const char* descriptions[] = {
      "F, S and C measures for one state",
      "closed-form measures and relation residuals over a family of Bell-diagonal states",
      "relation identities, monotonicity and normalization checks",
      "numeric optimizers versus closed forms on Bell-diagonal states"};
  for (std::size_t i = 0; i < 4; ++i) {
    Entry& e = entries.emplace_back();
    e.command = commands[i].first;
    e.sub = app.add_subcommand(commands[i].second, descriptions[i]);
    e.bound = add_options(*e.sub, e.flags);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    for (const Entry& e : entries) {
      if (!e.sub->parsed()) continue;
      const RunConfig cfg = build_config(e.command, e.flags, e.bound);
      CommandOutput result;
      switch (cfg.command) {
        case Command::Analyze: result = analyze(cfg); break;
        case Command::Sweep: result = sweep(cfg); break;
        case Command::Verify: result = verify(cfg); break;
        case Command::Oracle: result = oracle(cfg); break;
      }
      if (cfg.out_path) {
        std::ofstream file(*cfg.out_path, std::ios::binary);
        if (!file) throw Error(ErrorCode::ParseError, "cannot write " + *cfg.out_path);
        file << result.payload;
      } else {
        out << result.payload;
      }
      err << result.log;
      return result.exit_code;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kInvalidInput;
}

}  // namespace steercorr::app
