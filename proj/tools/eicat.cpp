#include "eicat/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of finite categories and finite groups"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  auto* validate = app.add_subcommand("validate", "Check a category file against the category laws");
  std::string validate_path;
  validate->add_option("path", validate_path, "Category JSON file")->required();

  auto* euler = app.add_subcommand("euler", "Euler characteristics, Moebius matrices and weightings");
  std::string euler_path;
  eicat::EulerOptions euler_opts;
  std::string cells_path;
  std::size_t max_chain = 0;
  euler->add_option("path", euler_path, "Category JSON file")->required();
  auto* cells_opt = euler->add_option("--cells", cells_path, "Cell structure JSON file");
  auto* chain_opt = euler->add_option("--max-chain-length", max_chain, "Skip chains longer than this");

  auto* group = app.add_subcommand("group", "Subgroup data, tables of marks and orbit categories");
  std::string group_sub, group_arg;
  eicat::GroupOptions group_opts;
  std::string xi;
  std::uint64_t seed = 0;
  group->add_option("subcommand", group_sub, "marks, nu, burnside, orbitcat or equivariant")
      ->required()
      ->check(CLI::IsMember({"marks", "nu", "burnside", "orbitcat", "equivariant"}));
  group->add_option("group", group_arg, "Group spec (e.g. cyclic:5, sym:3, cyclic:2xcyclic:2), group JSON file, "
                                        "or cell list file for equivariant")
      ->required();
  auto* xi_opt = group->add_option("--xi", xi, "Comma separated integers indexed by subgroup classes");
  group->add_option("--cap", group_opts.cap, "Largest allowed group order");
  auto* seed_opt = group->add_option("--seed", seed, "Seed for --random");
  group->add_option("--random", group_opts.random, "Number of random G-sets to check");

  auto* examples = app.add_subcommand("examples", "Built-in example categories");
  examples->require_subcommand(1);
  examples->add_subcommand("list", "List example names");
  auto* emit = examples->add_subcommand("emit", "Print an example category as JSON");
  std::string emit_name;
  std::size_t q = 2;
  emit->add_option("name", emit_name, "Example name")->required();
  auto* q_opt = emit->add_option("--q", q, "Parameter of subsets-q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return eicat::kExitUsage;
  }

  eicat::CommandResult result;
  if (*validate) {
    result = eicat::cmd_validate(validate_path);
  } else if (*euler) {
    if (*cells_opt) euler_opts.cells_path = cells_path;
    if (*chain_opt) euler_opts.max_chain_length = max_chain;
    result = eicat::cmd_euler(euler_path, euler_opts);
  } else if (*group) {
    if (*xi_opt) group_opts.xi = xi;
    if (*seed_opt) group_opts.seed = seed;
    result = eicat::cmd_group(group_sub, group_arg, group_opts);
  } else if (examples->got_subcommand("list")) {
    result = eicat::cmd_examples_list();
  } else {
    result = eicat::cmd_examples_emit(emit_name, *q_opt ? std::optional<std::size_t>(q) : std::nullopt);
  }
  std::cout << eicat::render(result.output, pretty) << '\n';
  if (!result.error.empty()) std::cerr << result.error << '\n';
  return result.exit_code;
}
