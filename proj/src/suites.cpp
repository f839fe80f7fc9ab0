#include "lcubes/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#include "lcubes/factorization.hpp"
#include "lcubes/generate.hpp"
#include "lcubes/homotopy.hpp"
#include "lcubes/json_io.hpp"
#include "lcubes/oracle.hpp"

namespace lcubes {

namespace {

using nlohmann::json;

class TrialContext {
 public:
  void input(const json& j) { digest_ = fnv1a_hex(j.dump()); }
  void fail(std::string message) {
    if (!failure_) failure_ = std::move(message);
  }
  void count(const std::string& name) { ++counters_[name]; }

  const std::string& digest() const { return digest_; }
  const std::optional<std::string>& failure() const { return failure_; }
  std::map<std::string, std::size_t>& counters() { return counters_; }

 private:
  std::string digest_ = fnv1a_hex("");
  std::optional<std::string> failure_;
  std::map<std::string, std::size_t> counters_;
};

using Trial = std::function<void(SplitMix64&, const AxisBlocks&, TrialContext&)>;

bool has_identity_generator(const TensorWord& w) {
  if (w.is_leaf()) return false;
  if (w.generator().op.is_identity()) return true;
  for (const auto& c : w.children()) {
    if (has_identity_generator(c)) return true;
  }
  return false;
}

AxisBlocks all_ones(std::size_t n) { return AxisBlocks(std::vector<std::size_t>(n, 1)); }

void roundtrip_trial(SplitMix64& rng, const AxisBlocks& blocks, TrialContext& ctx) {
  GenParams p;
  p.blocks = blocks;
  p.max_generators = 6;
  p.max_arity_per_generator = 3;
  p.max_leaves = 8;
  p.allow_nullary = rng.below(4) == 0;
  const TensorWord w = gen_word(rng, p);
  ctx.input(json_io::encode(w));
  const Configuration c = eval(w, blocks);
  const FactorResult r = factor(c, blocks);
  if (!r.decomposable()) return ctx.fail("factor rejected an evaluated word");
  validate(r.word(), blocks);
  if (!(eval(r.word(), blocks) == c)) return ctx.fail("eval(factor(eval(w))) differs from eval(w)");
  if (c.arity() >= 2 && !is_gen_pos_normal(r.word())) return ctx.fail("canonical word is not in general position");
  if (has_identity_generator(r.word())) return ctx.fail("canonical word contains an identity generator");
  ctx.count("arity_" + std::to_string(c.arity()));
}

void interchange_trial(SplitMix64& rng, const AxisBlocks& blocks, TrialContext& ctx) {
  if (blocks.count() < 2) return ctx.fail("interchange needs at least two blocks");
  std::size_t b1 = rng.below(blocks.count());
  std::size_t b2 = rng.below(blocks.count() - 1);
  if (b2 >= b1) ++b2;
  if (b1 > b2) std::swap(b1, b2);
  const Generator p{b1, random_op(rng, blocks.size(b1), rng.between(1, 3), 8)};
  const Generator q{b2, random_op(rng, blocks.size(b2), rng.between(1, 3), 8)};
  const std::size_t a = p.op.arity();
  const std::size_t b = q.op.arity();
  std::vector<TensorWord> rows;
  for (std::size_t i = 0; i < a; ++i) {
    std::vector<TensorWord> leaves;
    for (std::size_t k = 0; k < b; ++k) leaves.push_back(TensorWord::leaf(i * b + k));
    rows.push_back(TensorWord::node(q, std::move(leaves)));
  }
  const TensorWord lhs = TensorWord::node(p, std::move(rows));
  std::vector<TensorWord> cols;
  for (std::size_t k = 0; k < b; ++k) {
    std::vector<TensorWord> leaves;
    for (std::size_t i = 0; i < a; ++i) leaves.push_back(TensorWord::leaf(i * b + k));
    cols.push_back(TensorWord::node(p, std::move(leaves)));
  }
  const TensorWord rhs = TensorWord::node(q, std::move(cols));
  ctx.input(json{json_io::encode(lhs), json_io::encode(rhs)});
  if (!(eval(lhs, blocks) == eval(rhs, blocks))) return ctx.fail("interchange sides evaluate differently");
  const TensorWord fwd = apply_move(lhs, RewriteMove{MoveKind::InterchangeForward, {}}, blocks);
  if (!(fwd == rhs)) return ctx.fail("interchange-forward did not produce the transposed grid");
  if (!(apply_move(fwd, RewriteMove{MoveKind::InterchangeBackward, {}}, blocks) == lhs)) {
    return ctx.fail("interchange-backward did not undo interchange-forward");
  }
}

void genpos_trial(SplitMix64& rng, const AxisBlocks& blocks, TrialContext& ctx) {
  GenParams p;
  p.blocks = blocks;
  p.max_generators = 6;
  p.allow_nullary = rng.coin();
  TensorWord w = gen_word(rng, p);
  for (int tries = 0; w.arity() < 2 && tries < 100; ++tries) w = gen_word(rng, p);
  ctx.input(json_io::encode(w));
  if (w.arity() < 2) return ctx.fail("could not draw a word of arity >= 2");
  const TensorWord n = normalize_gen_pos(w, blocks);
  validate(n, blocks);
  if (!is_gen_pos_normal(n)) return ctx.fail("normal form has a unary head or a nullary child");
  if (!(eval(n, blocks) == eval(w, blocks))) return ctx.fail("normal form evaluates differently");
  if (w.generator().op.arity() < 2) ctx.count("rewritten_head");
}

Configuration random_config_for(SplitMix64& rng, const AxisBlocks& blocks, std::size_t max_cubes) {
  if (rng.coin()) {
    GenParams p;
    p.blocks = blocks;
    p.max_leaves = max_cubes;
    return eval(gen_word(rng, p), blocks);
  }
  if (blocks.dim() == 2 && max_cubes >= 4 && rng.coin()) return gen_mixed_config(rng, max_cubes);
  return gen_config(rng, blocks.dim(), rng.between(1, max_cubes));
}

void equivariance_trial(SplitMix64& rng, const AxisBlocks& blocks, TrialContext& ctx) {
  const Configuration c = random_config_for(rng, blocks, 6);
  const Permutation sigma = random_permutation(rng, c.arity());
  ctx.input(json{json_io::encode(c), sigma.images()});
  const FactorResult base = factor(c, blocks);
  const FactorResult moved = factor(act(c, sigma), blocks);
  if (base.decomposable() != moved.decomposable()) return ctx.fail("relabeling changed decomposability");
  if (!base.decomposable()) {
    ctx.count("not_decomposable");
    return;
  }
  const auto inv = sigma.inverse();
  const TensorWord expected = order_by_cubes(relabel(base.word(), inv.images()));
  if (!(order_by_cubes(moved.word()) == expected)) return ctx.fail("factor(act(c, s)) is not factor(c) relabeled by s");
  ctx.count("decomposable");
}

void oracle_trial(SplitMix64& rng, const AxisBlocks& blocks, TrialContext& ctx) {
  GenParams p;
  p.blocks = blocks;
  p.max_generators = 4;
  const TensorWord w = gen_word(rng, p);
  ctx.input(json_io::encode(w));
  const Configuration c = eval(w, blocks);
  const FactorResult r = factor(c, blocks);
  if (!r.decomposable()) return ctx.fail("factor rejected an evaluated word");
  if (!(eval(r.word(), blocks) == c)) return ctx.fail("eval mismatch between w and factor(eval(w))");
  const OracleResult forward = word_equal_oracle(w, r.word(), blocks);
  const OracleResult backward = word_equal_oracle(r.word(), w, blocks);
  if (forward.verdict != backward.verdict) return ctx.fail("oracle verdict is not symmetric");
  if (forward.verdict == OracleVerdict::Equal) {
    ctx.count("equal");
  } else {
    ctx.count("inconclusive");
  }
}

void contraction_trial(SplitMix64& rng, const AxisBlocks&, TrialContext& ctx) {
  static const std::vector<AxisBlocks> choices{AxisBlocks({1, 1}), AxisBlocks({2}), AxisBlocks({1, 1, 1}),
                                               AxisBlocks({1, 2}), AxisBlocks({2, 1})};
  const AxisBlocks& blocks = choices[rng.below(choices.size())];
  const Configuration c =
      blocks.dim() == 2 && rng.coin() ? gen_mixed_config(rng, 5) : gen_config(rng, blocks.dim(), rng.between(1, 6));
  ctx.input(json{json_io::encode(c), json_io::encode(blocks)});
  const ContractionReport report = decomposability_threshold(c, blocks, 256);
  if (!(report.threshold < Rational(1))) return ctx.fail("threshold is not below 1");
  const Configuration contracted = contract(c, report.threshold);
  if (!(eval(report.certificate, blocks) == contracted)) return ctx.fail("certificate does not evaluate to the contraction");
  const Rational expected = pow(Rational(1) - report.threshold, static_cast<unsigned>(c.dim())) * min_cube_volume(c);
  if (!(min_cube_volume(contracted) == expected)) return ctx.fail("volume law violated");
  ctx.count(report.threshold == Rational(0) ? "threshold_zero" : "threshold_positive");
  ctx.count("dim_" + std::to_string(blocks.dim()));
}

void bruteforce_trial(SplitMix64& rng, const AxisBlocks& blocks, TrialContext& ctx) {
  const Configuration c = random_config_for(rng, blocks, 5);
  ctx.input(json_io::encode(c));
  const bool fast = is_decomposable(c, blocks);
  const bool slow = brute_force_decomposable(c, blocks);
  if (fast != slow) {
    return ctx.fail(std::string("factor says ") + (fast ? "decomposable" : "not decomposable") + ", brute force disagrees");
  }
  ctx.count(fast ? "decomposable" : "not_decomposable");
}

void algebra_trial(SplitMix64& rng, const AxisBlocks&, TrialContext& ctx) {
  const std::size_t d = rng.between(1, 3);
  const Configuration outer = random_op(rng, d, rng.between(1, 3), 8);
  std::vector<Configuration> inners;
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < outer.arity(); ++i) {
    inners.push_back(random_op(rng, d, rng.between(0, 3), 8));
    sizes.push_back(inners.back().arity());
  }
  const Configuration mid = compose(outer, inners);
  std::vector<Configuration> leaves;
  for (std::size_t i = 0; i < mid.arity(); ++i) leaves.push_back(random_op(rng, d, rng.between(0, 2), 8));
  json in = json::array();
  in.push_back(json_io::encode(outer));
  for (const auto& c : inners) in.push_back(json_io::encode(c));
  for (const auto& c : leaves) in.push_back(json_io::encode(c));
  ctx.input(in);

  const Configuration left = compose(mid, leaves);
  std::vector<Configuration> grouped;
  std::size_t pos = 0;
  for (const auto& inner : inners) {
    std::vector<Configuration> slice(leaves.begin() + static_cast<std::ptrdiff_t>(pos),
                                     leaves.begin() + static_cast<std::ptrdiff_t>(pos + inner.arity()));
    pos += inner.arity();
    grouped.push_back(compose(inner, slice));
  }
  const Configuration right = compose(outer, grouped);
  if (!(left == right)) return ctx.fail("associativity violated");
  for (const auto* c : {&mid, &left, &right}) {
    if (auto err = check_configuration(c->dim(), c->cubes()); !err.empty()) return ctx.fail("composite invalid: " + err);
  }

  const Configuration unit = identity(d);
  if (!(compose(unit, std::vector{outer}) == outer)) return ctx.fail("left unit law violated");
  if (!(compose(outer, std::vector<Configuration>(outer.arity(), unit)) == outer)) return ctx.fail("right unit law violated");

  const Permutation sigma = random_permutation(rng, outer.arity());
  std::vector<Configuration> permuted;
  for (std::size_t i = 0; i < outer.arity(); ++i) permuted.push_back(inners[sigma(i)]);
  if (!(compose(act(outer, sigma), permuted) == act(mid, block_permutation(sigma, sizes)))) {
    return ctx.fail("equivariance violated");
  }
  const Permutation tau = random_permutation(rng, mid.arity());
  if (!(act(act(mid, tau), tau.inverse()) == mid)) return ctx.fail("action is not invertible");
}

struct SuiteSpec {
  Trial trial;
  std::function<AxisBlocks(const AxisBlocks&)> blocks_for;
};

const std::map<std::string, SuiteSpec, std::less<>>& registry() {
  static const auto* suites = [] {
    auto identity_blocks = [](const AxisBlocks& b) { return b; };
    auto* m = new std::map<std::string, SuiteSpec, std::less<>>{
        {"roundtrip", {roundtrip_trial, identity_blocks}},
        {"interchange", {interchange_trial, identity_blocks}},
        {"genpos", {genpos_trial, identity_blocks}},
        {"equivariance", {equivariance_trial, identity_blocks}},
        {"oracle", {oracle_trial, identity_blocks}},
        {"contraction", {contraction_trial, identity_blocks}},
        {"multifactor", {roundtrip_trial, [](const AxisBlocks& b) { return b.count() >= 3 ? b : all_ones(3); }}},
        {"bruteforce", {bruteforce_trial, identity_blocks}},
        {"algebra", {algebra_trial, identity_blocks}},
    };
    return m;
  }();
  return *suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roundtrip", "interchange", "genpos", "equivariance", "oracle",
                                              "contraction", "multifactor", "bruteforce", "algebra"};
  return names;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SuiteReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed, const AxisBlocks& blocks) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) throw InvalidInput("unknown suite '" + std::string(name) + "'");
  const AxisBlocks used = it->second.blocks_for(blocks);

  SuiteReport report;
  report.name = std::string(name);
  report.trials = trials;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t);
    SplitMix64 rng(trial_seed);
    TrialContext ctx;
    try {
      it->second.trial(rng, used, ctx);
    } catch (const std::exception& e) {
      ctx.fail(std::string("exception: ") + e.what());
    }
    if (ctx.failure()) report.failures.push_back({t, trial_seed, ctx.digest(), *ctx.failure()});
    for (const auto& [k, v] : ctx.counters()) report.counters[k] += v;
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json encode_report(const SuiteReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"trial", f.trial}, {"seed", f.seed}, {"input_digest", f.digest}, {"message", f.message}});
  }
  return {{"suite", report.name},
          {"trials", report.trials},
          {"failures", std::move(failures)},
          {"counters", report.counters},
          {"elapsed_ms", report.elapsed_ms},
          {"passed", report.passed()}};
}

}  // namespace lcubes
