#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "ipx/cli.hpp"

int main(int argc, char** argv) {
  using namespace ipx::cli;

  CLI::App app{"ipx: inequality verification toolkit"};
  app.set_version_flag("--version", IPX_VERSION);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string dims = "1..8";
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::size_t> link;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--entries", cfg.entries, "Glob over entry ids")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "Samples per dimension (identities: instances per dimension)")
        ->capture_default_str();
    sub->add_option("--dims", dims, "Dimensions as a..b or a,b,c")->capture_default_str();
    sub->add_option("--seed", seed, "Seed (default: $IPX_SEED, else 42)");
    sub->add_option("--eps-rel", cfg.eps_rel, "Relative tolerance")->capture_default_str();
    sub->add_option("--eps-abs", cfg.eps_abs, "Absolute tolerance")->capture_default_str();
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--out", out, "Write the report here instead of stdout");
    sub->add_option("--threads", threads, "Worker threads")->capture_default_str();
    sub->add_flag("--with-synthetic-violation", cfg.with_synthetic_violation,
                  "Also register an entry whose chain is false");
  };

  auto* identities = app.add_subcommand("identities", "Exact and float identity checks");
  auto* verify = app.add_subcommand("verify", "Fuzz catalogue entries");
  auto* search = app.add_subcommand("search", "Tightness search per entry");
  auto* list = app.add_subcommand("list", "Print the registry");
  for (auto* sub : {identities, verify, search, list}) add_common(sub);
  search->add_option("--budget", cfg.budget, "Random starts")->capture_default_str();
  search->add_option("--link", link, "Chain link (default: the entry's principal link)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    cfg.command = parse_command(app.get_subcommands().front()->get_name());
    cfg.dims = parse_dims(dims);
    cfg.format = parse_format(format);
    cfg.seed = resolve_seed(seed, std::getenv("IPX_SEED"));
  } catch (const std::exception& e) {
    std::cerr << "ipx: " << e.what() << '\n';
    return kExitConfig;
  }
  cfg.out = out;
  cfg.link = link;
  cfg.threads = threads;

  const Outcome result = run(cfg);
  if (result.exit_code == kExitConfig) {
    std::cerr << "ipx: " << result.error << '\n';
    return kExitConfig;
  }
  if (!cfg.out) std::cout << result.rendered;
  return result.exit_code;
}
