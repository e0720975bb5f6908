#include <iostream>

#include <CLI11.hpp>

#include "skewspan/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Verify, extract and build skew monoidales in the bicategory of spans"};
  app.require_subcommand(1);

  skewspan::CliOptions opts;
  std::string path;
  std::string format = "text";

  for (const auto& name : skewspan::cli_commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("file", path, "instance file")->required();
    sub->add_option("--depth", opts.depth, "nerve depth");
    sub->add_option("--cap", opts.cap, "enumeration cap");
    sub->add_option("--seed", opts.seed, "fuzz seed");
    sub->add_option("--count", opts.count, "fuzz mutations");
    sub->add_option("--out", opts.out, "write the resulting instance here");
    sub->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--restricted", opts.restricted, "from-category: use the unit 1 <- C -> C");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : skewspan::kExitInput;
  }
  opts.structured = format == "structured";
  auto* sub = app.get_subcommands().front();
  return skewspan::run_command(sub->get_name(), path, opts, std::cout, std::cerr);
}
