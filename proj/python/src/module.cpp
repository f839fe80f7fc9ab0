// Python bindings. Values cross the boundary as JSON text in the same
// encoding the CLI reads and writes; the lcubes package wraps them in dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcubes/factorization.hpp"
#include "lcubes/generate.hpp"
#include "lcubes/homotopy.hpp"
#include "lcubes/json_io.hpp"
#include "lcubes/oracle.hpp"
#include "lcubes/suites.hpp"
#include "lcubes/svg.hpp"

namespace py = pybind11;
using lcubes::json_io::json;

namespace {

lcubes::Configuration config(const std::string& text) {
  return lcubes::json_io::decode_configuration(lcubes::json_io::parse(text));
}

lcubes::TensorWord word(const std::string& text, const lcubes::AxisBlocks& blocks) {
  auto w = lcubes::json_io::decode_word(lcubes::json_io::parse(text));
  lcubes::validate(w, blocks);
  return w;
}

std::string factor_json(const std::string& c, const std::string& blocks) {
  const auto b = lcubes::AxisBlocks::parse(blocks);
  const auto r = lcubes::factor(config(c), b);
  return (r.decomposable() ? lcubes::json_io::encode(r.word()) : lcubes::json_io::encode(r.witness(), b)).dump();
}

}  // namespace

PYBIND11_MODULE(_lcubes, m) {
  m.doc() = "Little cubes: tensor words, evaluation, factorization and contraction";

  py::register_exception<lcubes::ThresholdNotFound>(m, "ThresholdNotFound", PyExc_RuntimeError);

  m.def("eval_word", [](const std::string& w, const std::string& blocks) {
    const auto b = lcubes::AxisBlocks::parse(blocks);
    return lcubes::json_io::encode(lcubes::eval(word(w, b), b)).dump();
  });
  m.def("factor", &factor_json);
  m.def("is_decomposable", [](const std::string& c, const std::string& blocks) {
    return lcubes::is_decomposable(config(c), lcubes::AxisBlocks::parse(blocks));
  });
  m.def("brute_force_decomposable", [](const std::string& c, const std::string& blocks, std::size_t max_cubes) {
    return lcubes::brute_force_decomposable(config(c), lcubes::AxisBlocks::parse(blocks), max_cubes);
  });
  m.def("normalize_gen_pos", [](const std::string& w, const std::string& blocks) {
    const auto b = lcubes::AxisBlocks::parse(blocks);
    return lcubes::json_io::encode(lcubes::normalize_gen_pos(word(w, b), b)).dump();
  });
  m.def("word_equal", [](const std::string& w1, const std::string& w2, const std::string& blocks, std::size_t depth) {
    const auto b = lcubes::AxisBlocks::parse(blocks);
    const auto r = lcubes::word_equal_oracle(word(w1, b), word(w2, b), b, {depth, 4000});
    return std::make_pair(r.verdict == lcubes::OracleVerdict::Equal, r.moves);
  });
  m.def("contract", [](const std::string& c, const std::string& t) {
    return lcubes::json_io::encode(lcubes::contract(config(c), lcubes::Rational::parse(t))).dump();
  });
  m.def("threshold", [](const std::string& c, const std::string& blocks, std::size_t grid) {
    return lcubes::json_io::encode(lcubes::decomposability_threshold(config(c), lcubes::AxisBlocks::parse(blocks), grid))
        .dump();
  });
  m.def("render_svg", [](const std::string& c, const std::string& blocks, bool strips) {
    const auto conf = config(c);
    const auto b = lcubes::AxisBlocks::parse(blocks);
    std::vector<lcubes::StripGrouping> overlays;
    if (strips && conf.arity() > 0 && conf.dim() == b.dim()) {
      for (std::size_t i = 0; i < b.count(); ++i) overlays.push_back(lcubes::strip_grouping(conf, b, i));
    }
    return lcubes::render_svg(conf, b, overlays);
  });
  m.def("gen_word", [](std::uint64_t seed, const std::string& blocks, std::size_t max_generators, std::size_t max_arity,
                       std::size_t denominator, std::size_t max_leaves, bool allow_nullary) {
    lcubes::GenParams p;
    p.seed = seed;
    p.blocks = lcubes::AxisBlocks::parse(blocks);
    p.max_generators = max_generators;
    p.max_arity_per_generator = max_arity;
    p.coordinate_denominator_bound = denominator;
    p.max_leaves = max_leaves;
    p.allow_nullary = allow_nullary;
    return lcubes::json_io::encode(lcubes::gen_word(p)).dump();
  });
  m.def("gen_config", [](std::uint64_t seed, std::size_t dim, std::size_t j, bool pinwheel) {
    return lcubes::json_io::encode(lcubes::gen_config(seed, dim, j, pinwheel)).dump();
  });
  m.def("run_suite", [](const std::string& name, std::size_t trials, std::uint64_t seed, const std::string& blocks) {
    return lcubes::encode_report(lcubes::run_suite(name, trials, seed, lcubes::AxisBlocks::parse(blocks))).dump();
  });
  m.def("suite_names", &lcubes::suite_names);
}
