// lcubes: command-line front end for little-cubes tensor words.
//
// Exit codes: 0 success, 2 invalid input, 3 not decomposable (factor) or no
// decomposable contraction on the grid (threshold), 4 suite failure.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "lcubes/factorization.hpp"
#include "lcubes/generate.hpp"
#include "lcubes/homotopy.hpp"
#include "lcubes/json_io.hpp"
#include "lcubes/suites.hpp"
#include "lcubes/svg.hpp"

namespace {

using lcubes::json_io::json;

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kNotDecomposable = 3;
constexpr int kSuiteFailed = 4;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lcubes::InvalidInput("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lcubes::InvalidInput("cannot write '" + path + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

lcubes::Configuration read_config(const std::string& path) {
  return lcubes::json_io::decode_configuration(lcubes::json_io::parse(read_input(path)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Little cubes: tensor words, evaluation, factorization and contraction"};
  app.require_subcommand(1);

  std::string blocks_text = "1,1";
  std::uint64_t seed = 7;
  std::string out_path;
  std::string in_path = "-";

  auto add_blocks = [&](CLI::App* cmd) { cmd->add_option("--blocks", blocks_text, "axis block sizes, e.g. 1,1 or 2,3"); };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "output file (default: stdout)"); };
  auto add_in = [&](CLI::App* cmd) { cmd->add_option("input", in_path, "input JSON file, '-' for stdin"); };

  lcubes::GenParams gen;
  auto* gen_word = app.add_subcommand("gen-word", "random tensor word");
  add_blocks(gen_word);
  add_out(gen_word);
  gen_word->add_option("--seed", seed);
  gen_word->add_option("--max-generators", gen.max_generators);
  gen_word->add_option("--max-arity", gen.max_arity_per_generator);
  gen_word->add_option("--denominator", gen.coordinate_denominator_bound, "coordinate denominator bound");
  gen_word->add_option("--max-leaves", gen.max_leaves);
  gen_word->add_flag("--allow-nullary", gen.allow_nullary);

  std::size_t dim = 2;
  std::size_t cubes = 4;
  bool use_pinwheel = false;
  auto* gen_config = app.add_subcommand("gen-config", "random configuration or the pinwheel preset");
  add_out(gen_config);
  gen_config->add_option("--seed", seed);
  gen_config->add_option("--dim", dim);
  gen_config->add_option("--j", cubes, "number of cubes");
  gen_config->add_flag("--pinwheel", use_pinwheel);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a word to a configuration");
  add_in(eval_cmd);
  add_blocks(eval_cmd);
  add_out(eval_cmd);

  auto* factor_cmd = app.add_subcommand("factor", "canonical word of a decomposable configuration");
  add_in(factor_cmd);
  add_blocks(factor_cmd);
  add_out(factor_cmd);

  std::string t_text = "0";
  auto* contract_cmd = app.add_subcommand("contract", "shrink every cube about its center by 1 - t");
  add_in(contract_cmd);
  add_out(contract_cmd);
  contract_cmd->add_option("--t", t_text, "contraction parameter, rational in [0,1)");

  std::size_t grid = 64;
  auto* threshold_cmd = app.add_subcommand("threshold", "first grid contraction that is decomposable");
  add_in(threshold_cmd);
  add_blocks(threshold_cmd);
  add_out(threshold_cmd);
  threshold_cmd->add_option("--grid", grid);

  std::string suite = "all";
  std::size_t trials = 0;
  auto* check_cmd = app.add_subcommand("check", "run a property suite (or all)");
  add_blocks(check_cmd);
  check_cmd->add_option("--suite", suite);
  check_cmd->add_option("--trials", trials, "trials (default depends on suite)");
  check_cmd->add_option("--seed", seed);

  bool no_strips = false;
  auto* render_cmd = app.add_subcommand("render", "SVG drawing of a 2-dimensional configuration");
  add_in(render_cmd);
  add_blocks(render_cmd);
  add_out(render_cmd);
  render_cmd->add_flag("--no-strips", no_strips, "omit strip overlays");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    const lcubes::AxisBlocks blocks = lcubes::AxisBlocks::parse(blocks_text);

    if (*gen_word) {
      gen.seed = seed;
      gen.blocks = blocks;
      write_output(out_path, dump(lcubes::json_io::encode(lcubes::gen_word(gen))));
    } else if (*gen_config) {
      write_output(out_path, dump(lcubes::json_io::encode(lcubes::gen_config(seed, dim, cubes, use_pinwheel))));
    } else if (*eval_cmd) {
      const auto word = lcubes::json_io::decode_word(lcubes::json_io::parse(read_input(in_path)));
      write_output(out_path, dump(lcubes::json_io::encode(lcubes::eval(word, blocks))));
    } else if (*factor_cmd) {
      const auto result = lcubes::factor(read_config(in_path), blocks);
      if (!result.decomposable()) {
        write_output(out_path, dump(lcubes::json_io::encode(result.witness(), blocks)));
        return kNotDecomposable;
      }
      write_output(out_path, dump(lcubes::json_io::encode(result.word())));
    } else if (*contract_cmd) {
      const auto t = lcubes::json_io::decode_rational(json(t_text));
      write_output(out_path, dump(lcubes::json_io::encode(lcubes::contract(read_config(in_path), t))));
    } else if (*threshold_cmd) {
      try {
        const auto report = lcubes::decomposability_threshold(read_config(in_path), blocks, grid);
        write_output(out_path, dump(lcubes::json_io::encode(report)));
      } catch (const lcubes::ThresholdNotFound& e) {
        std::cerr << "lcubes: " << e.what() << "\n";
        return kNotDecomposable;
      }
    } else if (*check_cmd) {
      std::vector<std::string> names;
      if (suite == "all") {
        names = lcubes::suite_names();
      } else {
        names.push_back(suite);
      }
      bool ok = true;
      json reports = json::array();
      for (const auto& name : names) {
        const std::size_t n = trials ? trials : (name == "oracle" || name == "contraction" || name == "bruteforce" ? 100 : 500);
        const auto report = lcubes::run_suite(name, n, seed, blocks);
        ok = ok && report.passed();
        reports.push_back(lcubes::encode_report(report));
      }
      std::cout << dump(names.size() == 1 ? reports.front() : reports);
      return ok ? kOk : kSuiteFailed;
    } else if (*render_cmd) {
      const auto config = read_config(in_path);
      std::vector<lcubes::StripGrouping> overlays;
      if (!no_strips && config.arity() > 0 && config.dim() == blocks.dim()) {
        for (std::size_t b = 0; b < blocks.count(); ++b) overlays.push_back(lcubes::strip_grouping(config, blocks, b));
      }
      write_output(out_path, lcubes::render_svg(config, blocks, overlays));
    }
  } catch (const lcubes::InvalidInput& e) {
    std::cerr << "lcubes: invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lcubes: invalid input: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
