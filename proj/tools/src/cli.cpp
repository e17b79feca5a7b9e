#include "ipx/cli.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ipx/catalog.hpp"
#include "ipx/identities.hpp"
#include "ipx/search.hpp"

namespace ipx::cli {

namespace {

struct Record {
  std::string id;
  std::string quote;
  std::uint64_t samples = 0;
  double max_excess = 0.0;
  double max_tightness = 0.0;
  bool pass = true;
};

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool glob_match(const std::string& pattern, const std::string& id) { return fnmatch(pattern.c_str(), id.c_str(), 0) == 0; }

std::string command_name(Command c) {
  switch (c) {
    case Command::Identities:
      return "identities";
    case Command::Verify:
      return "verify";
    case Command::Search:
      return "search";
    case Command::List:
      return "list";
  }
  return "?";
}

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

std::vector<const InequalityEntry*> select_entries(const RunConfig& cfg) {
  std::vector<const InequalityEntry*> out;
  for (const auto& e : list_entries()) {
    if (glob_match(cfg.entries, e.id)) out.push_back(&e);
  }
  if (cfg.with_synthetic_violation && glob_match(cfg.entries, synthetic_violation_entry().id)) {
    out.push_back(&synthetic_violation_entry());
  }
  if (out.empty()) throw ConfigError("unknown entry id in filter: " + cfg.entries);
  return out;
}

std::vector<std::size_t> feasible_dims(const InequalityEntry& e, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out;
  for (auto d : dims) {
    if (dim_feasible(e, d)) out.push_back(d);
  }
  if (out.empty()) throw ConfigError("no requested dimension is feasible for " + e.id);
  return out;
}

std::vector<Record> run_identities(const RunConfig& cfg, const TolerancePolicy& policy) {
  std::vector<Record> records;
  for (auto id : kAllIdentities) {
    const std::string name(to_string(id));
    if (!glob_match(cfg.entries, name)) continue;
    Record r{name, "instance-wise exact identity check", 0, -std::numeric_limits<double>::infinity(), 0.0, true};
    for (std::size_t k = 0; k < cfg.dims.size(); ++k) {
      const std::size_t dim = cfg.dims[k];
      Rng rng(derive_seed(derive_seed(cfg.seed, static_cast<std::uint64_t>(id)), dim));
      for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        const auto inst = random_exact_instance(id, dim, rng);
        const auto exact = check_identity(id, inst);
        const auto fl = check_identity(id, to_float(inst), policy);
        ++r.samples;
        r.max_excess = std::max(r.max_excess, fl.residual - policy.tolerance(fl.scale));
        if (fl.scale > 0.0) r.max_tightness = std::max(r.max_tightness, fl.residual / fl.scale);
        r.pass = r.pass && exact.exact_pass && fl.pass;
      }
    }
    records.push_back(std::move(r));
  }
  if (records.empty()) throw ConfigError("unknown identity in filter: " + cfg.entries);
  return records;
}

std::vector<Record> run_verify(const RunConfig& cfg, const TolerancePolicy& policy) {
  std::vector<Record> records;
  for (const auto* e : select_entries(cfg)) {
    const auto dims = feasible_dims(*e, cfg.dims);
    const FuzzSummary s = fuzz(*e, cfg.samples, dims, cfg.seed, policy, cfg.threads);
    records.push_back({e->id, e->quote, s.samples, s.max_excess, s.max_tightness, s.pass});
  }
  return records;
}

std::vector<Record> run_search(const RunConfig& cfg, const TolerancePolicy& policy) {
  std::vector<Record> records;
  SearchOptions opt;
  opt.threads = cfg.threads;
  for (const auto* e : select_entries(cfg)) {
    const std::size_t link = cfg.link.value_or(e->principal_link);
    Record r{e->id, e->quote, 0, -std::numeric_limits<double>::infinity(), 0.0, true};
    for (auto d : feasible_dims(*e, cfg.dims)) {
      SearchResult res;
      try {
        res = tightness_search(*e, link, d, cfg.budget, cfg.seed, opt);
      } catch (const std::invalid_argument& ex) {
        throw ConfigError(ex.what());
      }
      const CheckResult check = evaluate(*e, res.argmax, policy);
      r.samples += res.iterations;
      r.max_tightness = std::max(r.max_tightness, res.best_tightness);
      for (std::size_t i = 0; i + 1 < check.values.size(); ++i) {
        r.max_excess = std::max(r.max_excess, check.values[i] - check.values[i + 1]);
      }
      r.pass = r.pass && check.pass;
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<Record> run_list(const RunConfig& cfg) {
  std::vector<Record> records;
  for (const auto* e : select_entries(cfg)) records.push_back({e->id, e->quote, 0, 0.0, 0.0, true});
  return records;
}

nlohmann::ordered_json config_echo(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = command_name(cfg.command);
  j["entries"] = cfg.entries;
  j["samples"] = cfg.samples;
  j["dims"] = cfg.dims;
  j["seed"] = cfg.seed;
  j["eps_rel"] = cfg.eps_rel;
  j["eps_abs"] = cfg.eps_abs;
  j["format"] = cfg.format == Format::Json ? "json" : "csv";
  if (cfg.command == Command::Search) {
    j["budget"] = cfg.budget;
    if (cfg.link) j["link"] = *cfg.link;
  }
  if (cfg.with_synthetic_violation) j["with_synthetic_violation"] = true;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_number(const nlohmann::ordered_json& v) { return v.is_null() ? "" : v.dump(); }

std::string render(const nlohmann::ordered_json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::ostringstream os;
  os << "id,quote,samples,max_excess,max_tightness,pass\n";
  for (const auto& e : report["entries"]) {
    os << csv_field(e["id"].get<std::string>()) << ',' << csv_field(e["quote"].get<std::string>()) << ','
       << e["samples"].dump() << ',' << csv_number(e["max_excess"]) << ',' << csv_number(e["max_tightness"]) << ','
       << (e["pass"].get<bool>() ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace

std::vector<std::size_t> parse_dims(const std::string& text) {
  auto to_dim = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid dims: " + text);
    }
    if (used != s.size() || v < 1) throw std::invalid_argument("invalid dims: " + text);
    return static_cast<std::size_t>(v);
  };
  std::vector<std::size_t> dims;
  if (auto pos = text.find(".."); pos != std::string::npos) {
    const std::size_t lo = to_dim(text.substr(0, pos));
    const std::size_t hi = to_dim(text.substr(pos + 2));
    if (lo > hi) throw std::invalid_argument("invalid dims: " + text);
    for (std::size_t d = lo; d <= hi; ++d) dims.push_back(d);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) dims.push_back(to_dim(item));
  }
  if (dims.empty()) throw std::invalid_argument("invalid dims: " + text);
  return dims;
}

Command parse_command(const std::string& text) {
  if (text == "identities") return Command::Identities;
  if (text == "verify") return Command::Verify;
  if (text == "search") return Command::Search;
  if (text == "list") return Command::List;
  throw std::invalid_argument("unknown command: " + text);
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format: " + text);
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env) {
  if (flag) return *flag;
  if (env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const auto v = std::stoull(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("IPX_SEED is not an unsigned integer: ") + env);
  }
  return 42;
}

Outcome run(const RunConfig& cfg) {
  Outcome out;
  try {
    if (cfg.samples < 1) throw ConfigError("samples must be at least 1");
    if (cfg.dims.empty()) throw ConfigError("dims must be nonempty");
    if (cfg.budget < 1) throw ConfigError("budget must be at least 1");
    TolerancePolicy policy{cfg.eps_rel, cfg.eps_abs};
    try {
      policy.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }

    std::vector<Record> records;
    switch (cfg.command) {
      case Command::Identities:
        records = run_identities(cfg, policy);
        break;
      case Command::Verify:
        records = run_verify(cfg, policy);
        break;
      case Command::Search:
        records = run_search(cfg, policy);
        break;
      case Command::List:
        records = run_list(cfg);
        break;
    }

    bool pass = true;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      pass = pass && r.pass;
      nlohmann::ordered_json e;
      e["id"] = r.id;
      e["quote"] = r.quote;
      e["samples"] = r.samples;
      e["max_excess"] = number(r.max_excess);
      e["max_tightness"] = number(r.max_tightness);
      e["pass"] = r.pass;
      entries.push_back(std::move(e));
    }
    out.report["version"] = IPX_VERSION;
    out.report["config"] = config_echo(cfg);
    out.report["entries"] = std::move(entries);
    out.report["pass"] = pass;
    out.rendered = render(out.report, cfg.format);
    out.exit_code = pass ? kExitPass : kExitViolation;

    if (cfg.out) {
      std::ofstream f(*cfg.out, std::ios::binary | std::ios::trunc);
      if (!f) throw ConfigError("cannot write output file: " + *cfg.out);
      f << out.rendered;
      f.close();
      if (!f) throw ConfigError("cannot write output file: " + *cfg.out);
    }
  } catch (const std::exception& e) {
    out.exit_code = kExitConfig;
    out.error = e.what();
  }
  return out;
}

}  // namespace ipx::cli
