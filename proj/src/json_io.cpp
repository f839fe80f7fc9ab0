#include "lcubes/json_io.hpp"

namespace lcubes::json_io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t positive_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw InvalidInput(std::string(what) + " must be a positive integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

json encode(const Rational& r) { return r.str(); }

json encode(const Box& b) {
  json ivs = json::array();
  for (const auto& iv : b.intervals()) ivs.push_back({{"lo", iv.lo().str()}, {"hi", iv.hi().str()}});
  return {{"intervals", std::move(ivs)}};
}

json encode(const Configuration& c) {
  json cubes = json::array();
  for (const auto& b : c.cubes()) cubes.push_back(encode(b));
  return {{"dim", c.dim()}, {"cubes", std::move(cubes)}};
}

json encode(const AxisBlocks& blocks) { return {{"blocks", blocks.sizes()}}; }

json encode(const TensorWord& w) {
  if (w.is_leaf()) return {{"leaf", w.label() + 1}};
  json kids = json::array();
  for (const auto& c : w.children()) kids.push_back(encode(c));
  return {{"gen", {{"block", w.generator().block + 1}, {"op", encode(w.generator().op)}}}, {"children", std::move(kids)}};
}

json encode(const StripGrouping& g) {
  json groups = json::array();
  for (const auto& grp : g.groups) {
    json labels = json::array();
    for (auto l : grp) labels.push_back(l + 1);
    groups.push_back(std::move(labels));
  }
  json hulls = json::array();
  for (const auto& h : g.hulls) hulls.push_back(encode(h));
  return {{"block", g.block + 1}, {"groups", std::move(groups)}, {"hulls", std::move(hulls)}};
}

json encode(const NotDecomposable& nd, const AxisBlocks& blocks) {
  json singles = json::array();
  for (const auto& g : nd.single_groups) singles.push_back(encode(g));
  json labels = json::array();
  for (auto l : nd.labels) labels.push_back(l + 1);
  return {{"decomposable", false},
          {"blocks", blocks.sizes()},
          {"single_groups", std::move(singles)},
          {"stuck_labels", std::move(labels)},
          {"stuck", encode(nd.stuck)}};
}

json encode(const ContractionReport& r) {
  return {{"threshold", r.threshold.str()}, {"grid", r.grid}, {"certificate", encode(r.certificate)}};
}

Rational decode_rational(const json& j) {
  if (!j.is_string()) throw InvalidInput("rational must be a string \"num/den\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

Configuration decode_configuration(const json& j) {
  const auto& dim_j = field(j, "dim");
  const std::size_t dim = positive_index(dim_j, "dim");
  const auto& cubes_j = field(j, "cubes");
  if (!cubes_j.is_array()) throw InvalidInput("'cubes' must be an array");
  std::vector<Box> cubes;
  for (const auto& cube : cubes_j) {
    const auto& ivs_j = field(cube, "intervals");
    if (!ivs_j.is_array()) throw InvalidInput("'intervals' must be an array");
    std::vector<Interval> ivs;
    for (const auto& iv : ivs_j) ivs.emplace_back(decode_rational(field(iv, "lo")), decode_rational(field(iv, "hi")));
    if (ivs.size() != dim) throw InvalidInput("cube with " + std::to_string(ivs.size()) + " intervals in dimension " + std::to_string(dim));
    cubes.emplace_back(std::move(ivs));
  }
  return Configuration(dim, std::move(cubes));
}

AxisBlocks decode_blocks(const json& j) {
  const json& arr = j.is_object() ? field(j, "blocks") : j;
  if (!arr.is_array()) throw InvalidInput("blocks must be an array of positive integers");
  std::vector<std::size_t> sizes;
  for (const auto& k : arr) sizes.push_back(positive_index(k, "block size"));
  return AxisBlocks(std::move(sizes));
}

TensorWord decode_word(const json& j) {
  if (!j.is_object()) throw InvalidInput("word node must be an object");
  if (j.contains("leaf")) return TensorWord::leaf(positive_index(j.at("leaf"), "leaf label") - 1);
  const auto& gen = field(j, "gen");
  const std::size_t block = positive_index(field(gen, "block"), "generator block") - 1;
  Configuration op = decode_configuration(field(gen, "op"));
  const auto& kids_j = field(j, "children");
  if (!kids_j.is_array()) throw InvalidInput("'children' must be an array");
  std::vector<TensorWord> kids;
  for (const auto& k : kids_j) kids.push_back(decode_word(k));
  return TensorWord::node(Generator{block, std::move(op)}, std::move(kids));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace lcubes::json_io
