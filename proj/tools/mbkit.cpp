#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "mbkit/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "exact integer checks for critical-set descriptors, twisted cell "
      "homology, and flow-line chain complexes"};
  app.require_subcommand(1);

  std::vector<std::string> verify_paths;
  mbkit::VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand(
      "verify", "check the factorization identity for descriptor files");
  verify->add_option("paths", verify_paths, "descriptor JSON files")
      ->required();
  verify->add_flag("--corollary", verify_opts.corollary,
                   "check the relative-homology identity instead");
  verify->add_flag("--via-morsification", verify_opts.via_morsification,
                   "reconstruct the quotient from per-piece surpluses");
  verify->add_option("--choices", verify_opts.choices_path,
                     "JSON map of per-piece count vectors");
  verify->add_option("--format", verify_opts.format,
                     "output format: md (default) or json");

  std::string homology_path, twist_path;
  CLI::App* homology = app.add_subcommand(
      "homology", "integral homology of a cell model, optionally twisted");
  homology->add_option("path", homology_path, "cell model JSON file")
      ->required();
  homology->add_option("--twist", twist_path,
                       "JSON object with an edge_signs list of [u, v, sign] "
                       "triples");

  std::string morsify_path, choices_path;
  CLI::App* morsify = app.add_subcommand(
      "morsify", "spread a descriptor into per-degree point counts");
  morsify->add_option("path", morsify_path, "descriptor JSON file")
      ->required();
  morsify->add_option("--choices", choices_path,
                      "JSON map of per-piece count vectors");

  std::string catalog_action, catalog_name;
  CLI::App* catalog =
      app.add_subcommand("catalog", "built-in worked examples");
  catalog->add_option("action", catalog_action, "list, show, or run")
      ->required();
  catalog->add_option("name", catalog_name, "entry name (for show)");

  std::string flow_path, expect_poly, restricted_path;
  CLI::App* flow = app.add_subcommand(
      "flow", "audit a flow-line dataset and its chain complex");
  flow->add_option("path", flow_path, "flow dataset JSON file")->required();
  flow->add_option("--expect", expect_poly,
                   "expected free-rank polynomial as a JSON coefficient "
                   "list, e.g. [1,0,1]");
  flow->add_option("--restricted", restricted_path,
                   "within-block dataset JSON file for the sign-transport "
                   "audit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // fold usage mistakes into the documented input-error code; --help
    // still exits 0
    return app.exit(e) == 0 ? 0 : 2;
  }

  mbkit::CommandResult result;
  if (verify->parsed())
    result = mbkit::cmd_verify(verify_paths, verify_opts);
  else if (homology->parsed())
    result = mbkit::cmd_homology(homology_path, twist_path);
  else if (morsify->parsed())
    result = mbkit::cmd_morsify(morsify_path, choices_path);
  else if (catalog->parsed())
    result = mbkit::cmd_catalog(catalog_action, catalog_name);
  else if (flow->parsed())
    result = mbkit::cmd_flow(flow_path, expect_poly, restricted_path);

  std::cout << result.output;
  return result.exit_code;
}
