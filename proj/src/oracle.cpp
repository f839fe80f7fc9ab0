#include "lcubes/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <unordered_map>

#include "lcubes/factorization.hpp"

namespace lcubes {

namespace {

struct Neighbor {
  TensorWord word;
  std::size_t moves;
};

void collect_paths(const TensorWord& w, Path& prefix, std::vector<Path>& out) {
  if (w.is_leaf()) return;
  out.push_back(prefix);
  for (std::size_t i = 0; i < w.children().size(); ++i) {
    prefix.push_back(i);
    collect_paths(w.children()[i], prefix, out);
    prefix.pop_back();
  }
}

// Splits every child of `node` along the common grouping of their cubes
// (head-splits and nullary-grafts), then interchanges the resulting grid.
std::optional<Neighbor> split_and_interchange(const TensorWord& node, const AxisBlocks& blocks) {
  if (node.is_leaf() || node.children().empty()) return std::nullopt;
  const auto& top = node.generator();
  const auto& first = node.children().front();
  if (first.is_leaf()) return std::nullopt;
  const std::size_t b = first.generator().block;
  if (b == top.block) return std::nullopt;

  std::vector<Box> all;
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  for (std::size_t k = 0; k < node.children().size(); ++k) {
    const auto& c = node.children()[k];
    if (c.is_leaf() || c.generator().block != b || c.generator().op.arity() == 0) return std::nullopt;
    for (std::size_t i = 0; i < c.generator().op.arity(); ++i) {
      all.push_back(c.generator().op[i]);
      origin.emplace_back(k, i);
    }
  }
  std::vector<std::vector<std::size_t>> singletons(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) singletons[i] = {i};
  const auto groups = close_groups(all, std::move(singletons));
  std::vector<Box> hulls;
  for (const auto& g : groups) {
    std::vector<Box> members;
    for (auto m : g) members.push_back(all[m]);
    hulls.push_back(bounding_box(members));
  }
  if (hulls.size() == 1 && hulls.front().is_full()) return std::nullopt;

  std::vector<std::size_t> group_of(all.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (auto m : groups[g]) group_of[m] = g;
  }

  std::size_t moves = 1;  // the interchange itself
  std::vector<std::vector<TensorWord>> grid(groups.size());
  std::size_t flat = 0;
  for (std::size_t k = 0; k < node.children().size(); ++k) {
    const auto& c = node.children()[k];
    const auto& op = c.generator().op;
    std::vector<std::vector<Box>> cubes(groups.size());
    std::vector<std::vector<TensorWord>> kids(groups.size());
    for (std::size_t i = 0; i < op.arity(); ++i, ++flat) {
      const auto g = group_of[flat];
      cubes[g].push_back(box_unapply(hulls[g], op[i]));
      kids[g].push_back(c.children()[i]);
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (cubes[g].empty()) {
        ++moves;  // nullary-graft
        grid[g].push_back(TensorWord::nullary(b, blocks.size(b)));
      } else if (cubes[g].size() == 1 && cubes[g].front().is_full()) {
        grid[g].push_back(std::move(kids[g].front()));
      } else {
        ++moves;  // head-split
        grid[g].push_back(TensorWord::node(Generator{b, Configuration(op.dim(), std::move(cubes[g]), unchecked)},
                                           std::move(kids[g])));
      }
    }
  }
  std::vector<TensorWord> columns;
  columns.reserve(groups.size());
  for (auto& row : grid) columns.push_back(TensorWord::node(top, std::move(row)));
  return Neighbor{TensorWord::node(Generator{b, Configuration(blocks.size(b), std::move(hulls), unchecked)},
                                   std::move(columns)),
                  moves};
}

using Settled = std::unordered_map<std::string, std::size_t>;

Settled explore(const TensorWord& start, const AxisBlocks& blocks, const OracleLimits& limits) {
  std::size_t initial = 0;
  TensorWord s = canonicalize(start, blocks, initial);
  Settled settled;
  if (initial > limits.depth) return settled;

  using Entry = std::pair<std::size_t, std::string>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::map<std::string, TensorWord> pending;
  std::unordered_map<std::string, std::size_t> tentative;
  const auto push = [&](TensorWord w, std::size_t cost) {
    std::string k = key(w);
    if (settled.contains(k)) return;
    auto it = tentative.find(k);
    if (it != tentative.end() && it->second <= cost) return;
    tentative[k] = cost;
    pending.insert_or_assign(k, std::move(w));
    frontier.emplace(cost, std::move(k));
  };
  push(std::move(s), initial);

  while (!frontier.empty() && settled.size() < limits.max_states_per_side) {
    auto [cost, k] = frontier.top();
    frontier.pop();
    if (settled.contains(k) || tentative[k] != cost) continue;
    settled.emplace(k, cost);
    TensorWord current = std::move(pending.at(k));
    pending.erase(k);

    std::vector<Path> paths;
    Path prefix;
    collect_paths(current, prefix, paths);
    for (const auto& path : paths) {
      auto next = split_and_interchange(subtree(current, path), blocks);
      if (!next) continue;
      std::size_t extra = next->moves;
      TensorWord w = canonicalize(replace_subtree(current, path, std::move(next->word)), blocks, extra);
      if (cost + extra <= limits.depth) push(std::move(w), cost + extra);
    }
  }
  return settled;
}

}  // namespace

TensorWord canonicalize(const TensorWord& w, const AxisBlocks& blocks, std::size_t& moves) {
  if (w.is_leaf()) return w;
  const auto& g = w.generator();
  if (w.arity() == 0) {
    moves += generator_count(w) - 1;
    return TensorWord::nullary(g.block, blocks.size(g.block));
  }
  std::vector<std::pair<Box, TensorWord>> items;
  for (std::size_t i = 0; i < w.children().size(); ++i) {
    const auto& child = w.children()[i];
    if (child.arity() == 0) {
      moves += generator_count(child);
      continue;
    }
    TensorWord c = canonicalize(child, blocks, moves);
    if (!c.is_leaf() && c.generator().block == g.block) {
      ++moves;  // head-merge
      const auto& cop = c.generator().op;
      for (std::size_t k = 0; k < cop.arity(); ++k) items.emplace_back(box_apply(g.op[i], cop[k]), c.children()[k]);
    } else {
      items.emplace_back(g.op[i], std::move(c));
    }
  }
  if (items.size() == 1 && items.front().first.is_full()) {
    ++moves;  // unit-delete
    return std::move(items.front().second);
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Box> cubes;
  std::vector<TensorWord> kids;
  for (auto& [box, kid] : items) {
    cubes.push_back(std::move(box));
    kids.push_back(std::move(kid));
  }
  return TensorWord::node(Generator{g.block, Configuration(g.op.dim(), std::move(cubes), unchecked)},
                          std::move(kids));
}

OracleResult word_equal_oracle(const TensorWord& w1, const TensorWord& w2, const AxisBlocks& blocks,
                               OracleLimits limits) {
  validate(w1, blocks);
  validate(w2, blocks);
  if (w1.arity() != w2.arity()) return {OracleVerdict::NotFound};
  // Arity zero: the tensor product has a single nullary operation.
  if (w1.arity() == 0) return {OracleVerdict::Equal, 0, 0};

  const Settled a = explore(w1, blocks, limits);
  const Settled b = explore(w2, blocks, limits);
  const Settled& small = a.size() <= b.size() ? a : b;
  const Settled& large = a.size() <= b.size() ? b : a;
  std::optional<std::size_t> best;
  for (const auto& [k, cost] : small) {
    auto it = large.find(k);
    if (it == large.end()) continue;
    const auto total = cost + it->second;
    if (total <= limits.depth && (!best || total < *best)) best = total;
  }
  const std::size_t states = a.size() + b.size();
  if (best) return {OracleVerdict::Equal, *best, states};
  return {OracleVerdict::NotFound, 0, states};
}

}  // namespace lcubes
