// sigcirc: analysis and exhaustive verification of signed-circuit covers
// on small signed graphs.  See README.md for the file format and the
// catalogue of sweep properties.

#include <CLI11.hpp>

#include "sigcirc/cli.hpp"

namespace {

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format: text or json")->default_val("text");
}

void add_input(CLI::App* cmd, std::string& input) {
  cmd->add_option("input", input, "input graph file ('-' for stdin)")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed graph circuit-cover toolkit"};
  app.require_subcommand(1);

  sigcirc::CommandRequest req;
  std::string format = "text", input;

  auto* analyze = app.add_subcommand("analyze", "balance, Eulerian, flow-admissibility, coloops");
  add_input(analyze, input);
  add_format(analyze, format);

  auto* circuits = app.add_subcommand("circuits", "list every circuit with its balance");
  add_input(circuits, input);
  add_format(circuits, format);

  auto* signed_circuits =
      app.add_subcommand("signed-circuits", "list balanced circuits and barbells");
  add_input(signed_circuits, input);
  add_format(signed_circuits, format);

  int cover_k = 1;
  std::uint64_t budget = 50'000'000;
  auto* cover = app.add_subcommand("cover", "find an exact k-cover");
  add_input(cover, input);
  add_format(cover, format);
  cover->add_option("--k", cover_k, "cover multiplicity")->required();
  cover->add_option("--budget", budget, "search node budget");

  int min_max = 6;
  auto* min_cover = app.add_subcommand("min-cover", "least k with a k-cover");
  add_input(min_cover, input);
  add_format(min_cover, format);
  min_cover->add_option("--max", min_max, "largest k to try")->default_val(6);
  min_cover->add_option("--budget", budget, "search node budget");

  bool opt_optimal = false, opt_all = false;
  auto* decompose = app.add_subcommand("decompose", "circuit decompositions of an Eulerian graph");
  add_input(decompose, input);
  add_format(decompose, format);
  decompose->add_flag("--optimal", opt_optimal, "maximize unbalanced circuits, then circuit count");
  decompose->add_flag("--all", opt_all, "list every decomposition");

  bool neck_detect = false, neck_build = false;
  int neck_k = 3, neg_bead = 0;
  std::string lengths;
  auto* necklace = app.add_subcommand("necklace", "detect or build necklaces");
  necklace->add_option("input", input, "input graph file for --detect ('-' for stdin)");
  add_format(necklace, format);
  necklace->add_flag("--detect", neck_detect, "detect necklace structure");
  necklace->add_flag("--build", neck_build, "emit a necklace in edge-list format");
  necklace->add_option("--k", neck_k, "necklace length for --build");
  necklace->add_option("--lengths", lengths, "comma-separated 2k path lengths (default all 1)");
  necklace->add_option("--neg-bead", neg_bead, "bead carrying the negative pair")->default_val(0);

  std::string property, lemma_name;
  int max_v = -1, max_e = -1, jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "run a property over generated instances");
  add_format(sweep, format);
  sweep->add_option("--property", property, "property name (see README)")->required();
  sweep->add_option("--max-v", max_v, "vertex bound");
  sweep->add_option("--max-e", max_e, "edge bound");
  sweep->add_option("--jobs", jobs, "worker threads")->default_val(1);
  sweep->add_option("--budget", budget, "per-instance search node budget");

  auto* lemma = app.add_subcommand("lemma", "run one structural-fact check at default bounds");
  add_format(lemma, format);
  lemma->add_option("name", lemma_name, "property name")->required();
  lemma->add_option("--max-v", max_v, "vertex bound");
  lemma->add_option("--max-e", max_e, "edge bound");
  lemma->add_option("--jobs", jobs, "worker threads")->default_val(1);
  lemma->add_option("--budget", budget, "per-instance search node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : sigcirc::kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  req.subcommand = sub->get_name();
  req.input_path = input;
  req.options["format"] = format;
  if (req.subcommand == "cover") {
    req.options["k"] = std::to_string(cover_k);
    req.options["budget"] = std::to_string(budget);
  }
  if (req.subcommand == "min-cover") {
    req.options["max"] = std::to_string(min_max);
    req.options["budget"] = std::to_string(budget);
  }
  if (req.subcommand == "decompose") {
    if (opt_optimal) req.options["optimal"] = "1";
    if (opt_all) req.options["all"] = "1";
  }
  if (req.subcommand == "necklace") {
    if (neck_detect) req.options["detect"] = "1";
    if (neck_build) req.options["build"] = "1";
    if (necklace->count("--k")) req.options["k"] = std::to_string(neck_k);
    if (!lengths.empty()) req.options["lengths"] = lengths;
    req.options["neg-bead"] = std::to_string(neg_bead);
  }
  if (req.subcommand == "sweep" || req.subcommand == "lemma") {
    req.options[req.subcommand == "sweep" ? "property" : "name"] =
        req.subcommand == "sweep" ? property : lemma_name;
    if (max_v >= 0) req.options["max-v"] = std::to_string(max_v);
    if (max_e >= 0) req.options["max-e"] = std::to_string(max_e);
    req.options["jobs"] = std::to_string(jobs);
    req.options["budget"] = std::to_string(budget);
  }

  return sigcirc::run_command(req, std::cin, std::cout, std::cerr);
}
