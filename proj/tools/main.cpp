#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

int main(int argc, char** argv) {
  using subcur::cli::Format;
  subcur::cli::RunConfig config;
  std::string out_path;

  CLI::App app{"subgroup graphs, fiber products and rational subset currents of free groups"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"tsv", Format::Tsv}, {"json", Format::Json}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--rank", config.rank, "rank N of the free group")->check(CLI::Range(2, 1 << 20));
    sub->add_option("--seed", config.seed, "RNG seed");
    sub->add_option("--format", config.format, "tsv or json")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    return sub;
  };

  auto* core = common(app.add_subcommand("core", "Stallings graph of a subgroup file"));
  core->add_option("--dot", config.dot, "also write a DOT rendering");
  core->add_option("subgroup", config.inputs, "generator file")->required()->expected(1);

  auto* product = common(app.add_subcommand("product", "N(H, K) by three routes"));
  product->add_option("--dot", config.dot, "also write a DOT rendering of the product");
  product->add_option("subgroups", config.inputs, "H file, K file")->required()->expected(2);

  auto* scan = common(app.add_subcommand("shnc-scan", "random pairs against rk(H) rk(K)"));
  scan->add_option("--samples", config.samples)->check(CLI::PositiveNumber);
  scan->add_option("--max-gens", config.max_gens)->check(CLI::PositiveNumber);
  scan->add_option("--max-gen-len", config.max_gen_len)->check(CLI::PositiveNumber);
  scan->add_flag("--diagonal", config.diagonal, "sample pairs (H, H)");

  auto* converge = common(app.add_subcommand("converge", "(1/n) eta of <a^n b> against eta of <a>"));
  converge->add_option("--n-max", config.n_max)->check(CLI::PositiveNumber);
  converge->add_option("--grade", config.grade)->check(CLI::PositiveNumber);

  auto* intersect = common(app.add_subcommand("intersect", "pushforward of (eta_H, eta_K)"));
  intersect->add_option("subgroups", config.inputs, "H file, K file")->required()->expected(2);

  auto* cylinders = common(app.add_subcommand("cylinders", "cylinder values of eta_H"));
  cylinders->add_option("subgroup", config.inputs, "generator file")->required()->expected(1);
  cylinders->add_option("--grade", config.grade)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : subcur::cli::kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "shnc-scan" || command == "converge") {
    if (app.get_subcommands().front()->get_option("--format")->count() == 0) config.format = Format::Tsv;
  }
  if (out_path.empty()) return subcur::cli::run(command, config, std::cout, std::cerr);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return subcur::cli::kUsage;
  }
  return subcur::cli::run(command, config, out, std::cerr);
}
