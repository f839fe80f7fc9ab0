#include "lcubes/words.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace lcubes {

AxisBlocks::AxisBlocks(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InvalidInput("axis blocks: need at least one block");
  offsets_.assign(1, 0);
  for (auto k : sizes_) {
    if (k == 0) throw InvalidInput("axis blocks: block sizes must be positive");
    offsets_.push_back(offsets_.back() + k);
  }
}

AxisBlocks AxisBlocks::parse(std::string_view text) {
  std::vector<std::size_t> sizes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto part = text.substr(pos, comma - pos);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size()) {
      throw InvalidInput("malformed block list '" + std::string(text) + "'");
    }
    sizes.push_back(value);
    pos = comma + 1;
  }
  return AxisBlocks(std::move(sizes));
}

std::string AxisBlocks::str() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

TensorWord TensorWord::leaf(std::size_t label) {
  TensorWord w;
  w.label_ = label;
  return w;
}

TensorWord TensorWord::node(Generator gen, std::vector<TensorWord> children) {
  if (gen.op.arity() != children.size()) {
    throw InvalidInput("generator of arity " + std::to_string(gen.op.arity()) + " has " +
                       std::to_string(children.size()) + " children");
  }
  TensorWord w;
  w.gen_.emplace(std::move(gen));
  w.children_ = std::move(children);
  return w;
}

TensorWord TensorWord::nullary(std::size_t block, std::size_t block_dim) {
  return node(Generator{block, Configuration::nullary(block_dim)}, {});
}

std::size_t TensorWord::arity() const {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.arity();
  return n;
}

namespace {

void validate_rec(const TensorWord& w, const AxisBlocks& blocks, std::vector<std::size_t>& labels) {
  if (w.is_leaf()) {
    labels.push_back(w.label());
    return;
  }
  const auto& g = w.generator();
  if (g.block >= blocks.count()) {
    throw InvalidInput("generator block " + std::to_string(g.block + 1) + " out of range for blocks " + blocks.str());
  }
  if (g.op.dim() != blocks.size(g.block)) {
    throw InvalidInput("generator in block " + std::to_string(g.block + 1) + " has dimension " +
                       std::to_string(g.op.dim()) + ", expected " + std::to_string(blocks.size(g.block)));
  }
  if (g.op.arity() != w.children().size()) throw InvalidInput("generator arity does not match child count");
  for (const auto& c : w.children()) validate_rec(c, blocks, labels);
}

void labels_rec(const TensorWord& w, std::vector<std::size_t>& out) {
  if (w.is_leaf()) {
    out.push_back(w.label());
    return;
  }
  for (const auto& c : w.children()) labels_rec(c, out);
}

void append_interval(std::string& out, const Interval& iv) {
  out += iv.lo().str();
  out += ':';
  out += iv.hi().str();
}

void key_rec(const TensorWord& w, std::string& out) {
  if (w.is_leaf()) {
    out += 'L';
    out += std::to_string(w.label());
    return;
  }
  const auto& g = w.generator();
  out += 'G';
  out += std::to_string(g.block);
  out += '{';
  for (std::size_t i = 0; i < g.op.arity(); ++i) {
    if (i) out += ';';
    for (std::size_t a = 0; a < g.op.dim(); ++a) {
      if (a) out += '|';
      append_interval(out, g.op[i][a]);
    }
  }
  out += "}(";
  for (std::size_t i = 0; i < w.children().size(); ++i) {
    if (i) out += ',';
    key_rec(w.children()[i], out);
  }
  out += ')';
}

Box embed_box(const Box& block_box, std::size_t block, const AxisBlocks& blocks) {
  std::vector<Interval> ivs(blocks.dim(), Interval::full());
  for (std::size_t a = 0; a < block_box.dim(); ++a) ivs[blocks.offset(block) + a] = block_box[a];
  return Box(std::move(ivs));
}

void eval_rec(const TensorWord& w, const AxisBlocks& blocks, const Box& current, std::vector<std::optional<Box>>& out) {
  if (w.is_leaf()) {
    out[w.label()] = current;
    return;
  }
  const auto& g = w.generator();
  for (std::size_t i = 0; i < g.op.arity(); ++i) {
    eval_rec(w.children()[i], blocks, box_apply(current, embed_box(g.op[i], g.block, blocks)), out);
  }
}

std::vector<Box> rescaled_into(const Box& hull, std::span<const Box> cubes) {
  std::vector<Box> out;
  out.reserve(cubes.size());
  for (const auto& c : cubes) out.push_back(box_unapply(hull, c));
  return out;
}

[[noreturn]] void not_applicable(const RewriteMove& m, const std::string& why) {
  throw NotApplicable(std::string(to_string(m.kind)) + ": " + why);
}

TensorWord interchange(const TensorWord& node, const RewriteMove& m) {
  if (node.is_leaf()) not_applicable(m, "position is a leaf");
  const auto& head = node.generator();
  if (node.children().empty()) not_applicable(m, "head generator is nullary");
  const auto& first = node.children().front();
  if (first.is_leaf()) not_applicable(m, "child is a leaf");
  const auto& inner = first.generator();
  if (inner.block == head.block) not_applicable(m, "children are in the head's block");
  const bool forward = m.kind == MoveKind::InterchangeForward;
  if (forward != (head.block < inner.block)) {
    not_applicable(m, forward ? "forward interchange needs a higher child block" : "backward interchange needs a lower child block");
  }
  if (inner.op.arity() == 0) not_applicable(m, "children are nullary");
  for (const auto& c : node.children()) {
    if (c.is_leaf() || !(c.generator() == inner)) not_applicable(m, "children do not form a full grid of one generator");
  }
  std::vector<TensorWord> columns;
  columns.reserve(inner.op.arity());
  for (std::size_t k = 0; k < inner.op.arity(); ++k) {
    std::vector<TensorWord> row;
    row.reserve(node.children().size());
    for (const auto& c : node.children()) row.push_back(c.children()[k]);
    columns.push_back(TensorWord::node(head, std::move(row)));
  }
  return TensorWord::node(inner, std::move(columns));
}

TensorWord head_merge(const TensorWord& node, const RewriteMove& m) {
  if (node.is_leaf()) not_applicable(m, "position is a leaf");
  if (m.slot >= node.children().size()) not_applicable(m, "slot out of range");
  const auto& head = node.generator();
  const auto& child = node.children()[m.slot];
  if (child.is_leaf() || child.generator().block != head.block) not_applicable(m, "child is not a generator of the same block");
  Configuration merged = compose_at(head.op, m.slot, child.generator().op);
  std::vector<TensorWord> kids;
  kids.reserve(merged.arity());
  for (std::size_t i = 0; i < node.children().size(); ++i) {
    if (i == m.slot) {
      kids.insert(kids.end(), child.children().begin(), child.children().end());
    } else {
      kids.push_back(node.children()[i]);
    }
  }
  return TensorWord::node(Generator{head.block, std::move(merged)}, std::move(kids));
}

TensorWord head_split(const TensorWord& node, const RewriteMove& m) {
  if (node.is_leaf()) not_applicable(m, "position is a leaf");
  const auto& head = node.generator();
  const std::size_t a = head.op.arity();
  if (m.count == 0 || m.slot + m.count > a) not_applicable(m, "child range out of range");
  if (!m.box || m.box->dim() != head.op.dim()) not_applicable(m, "missing or mis-dimensioned hull box");
  const Box& hull = *m.box;
  std::vector<Box> outer;
  std::vector<Box> moved;
  for (std::size_t i = 0; i < a; ++i) {
    if (i == m.slot) outer.push_back(hull);
    if (i >= m.slot && i < m.slot + m.count) {
      if (!hull.contains(head.op[i])) not_applicable(m, "hull does not contain a grouped cube");
      moved.push_back(head.op[i]);
    } else {
      if (hull.overlaps(head.op[i])) not_applicable(m, "hull meets a cube outside the group");
      outer.push_back(head.op[i]);
    }
  }
  std::vector<TensorWord> grouped(node.children().begin() + static_cast<std::ptrdiff_t>(m.slot),
                                  node.children().begin() + static_cast<std::ptrdiff_t>(m.slot + m.count));
  TensorWord inner = TensorWord::node(
      Generator{head.block, Configuration(head.op.dim(), rescaled_into(hull, moved), unchecked)}, std::move(grouped));
  std::vector<TensorWord> kids;
  kids.reserve(a - m.count + 1);
  for (std::size_t i = 0; i < m.slot; ++i) kids.push_back(node.children()[i]);
  kids.push_back(std::move(inner));
  for (std::size_t i = m.slot + m.count; i < a; ++i) kids.push_back(node.children()[i]);
  return TensorWord::node(Generator{head.block, Configuration(head.op.dim(), std::move(outer), unchecked)},
                          std::move(kids));
}

TensorWord nullary_strip(const TensorWord& node, const RewriteMove& m) {
  if (node.is_leaf()) not_applicable(m, "position is a leaf");
  if (m.slot >= node.children().size()) not_applicable(m, "slot out of range");
  if (!node.children()[m.slot].is_nullary_generator()) not_applicable(m, "child is not a nullary generator");
  const auto& head = node.generator();
  std::vector<Box> cubes;
  std::vector<TensorWord> kids;
  for (std::size_t i = 0; i < head.op.arity(); ++i) {
    if (i == m.slot) continue;
    cubes.push_back(head.op[i]);
    kids.push_back(node.children()[i]);
  }
  return TensorWord::node(Generator{head.block, Configuration(head.op.dim(), std::move(cubes), unchecked)},
                          std::move(kids));
}

TensorWord nullary_graft(const TensorWord& node, const RewriteMove& m, const AxisBlocks& blocks) {
  if (node.is_leaf()) not_applicable(m, "position is a leaf");
  const auto& head = node.generator();
  if (m.slot > head.op.arity()) not_applicable(m, "slot out of range");
  if (!m.box || m.box->dim() != head.op.dim()) not_applicable(m, "missing or mis-dimensioned cube");
  if (m.block >= blocks.count()) not_applicable(m, "block out of range");
  for (const auto& cube : head.op.cubes()) {
    if (cube.overlaps(*m.box)) not_applicable(m, "grafted cube meets an existing cube");
  }
  std::vector<Box> cubes = head.op.cubes();
  cubes.insert(cubes.begin() + static_cast<std::ptrdiff_t>(m.slot), *m.box);
  std::vector<TensorWord> kids = node.children();
  kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(m.slot), TensorWord::nullary(m.block, blocks.size(m.block)));
  return TensorWord::node(Generator{head.block, Configuration(head.op.dim(), std::move(cubes), unchecked)},
                          std::move(kids));
}

bool is_unit_generator(const TensorWord& w) { return !w.is_leaf() && w.generator().op.is_identity(); }

}  // namespace

void validate(const TensorWord& w, const AxisBlocks& blocks) {
  std::vector<std::size_t> labels;
  validate_rec(w, blocks, labels);
  std::vector<bool> seen(labels.size(), false);
  for (auto l : labels) {
    if (l >= labels.size() || seen[l]) {
      throw InvalidInput("leaf labels must be exactly 1.." + std::to_string(labels.size()));
    }
    seen[l] = true;
  }
}

std::size_t generator_count(const TensorWord& w) {
  if (w.is_leaf()) return 0;
  std::size_t n = 1;
  for (const auto& c : w.children()) n += generator_count(c);
  return n;
}

std::string key(const TensorWord& w) {
  std::string out;
  key_rec(w, out);
  return out;
}

std::vector<std::size_t> leaf_labels(const TensorWord& w) {
  std::vector<std::size_t> out;
  labels_rec(w, out);
  return out;
}

TensorWord relabel(const TensorWord& w, std::span<const std::size_t> map) {
  if (w.is_leaf()) return TensorWord::leaf(map[w.label()]);
  std::vector<TensorWord> kids;
  kids.reserve(w.children().size());
  for (const auto& c : w.children()) kids.push_back(relabel(c, map));
  return TensorWord::node(w.generator(), std::move(kids));
}

TensorWord order_by_cubes(const TensorWord& w) {
  if (w.is_leaf()) return w;
  const auto& g = w.generator();
  std::vector<std::pair<Box, TensorWord>> items;
  for (std::size_t i = 0; i < w.children().size(); ++i) items.emplace_back(g.op[i], order_by_cubes(w.children()[i]));
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Box> cubes;
  std::vector<TensorWord> kids;
  for (auto& [box, kid] : items) {
    cubes.push_back(std::move(box));
    kids.push_back(std::move(kid));
  }
  return TensorWord::node(Generator{g.block, Configuration(g.op.dim(), std::move(cubes), unchecked)}, std::move(kids));
}

const TensorWord& subtree(const TensorWord& w, const Path& path) {
  const TensorWord* cur = &w;
  for (auto i : path) {
    if (cur->is_leaf() || i >= cur->children().size()) throw NotApplicable("path does not name a node");
    cur = &cur->children()[i];
  }
  return *cur;
}

TensorWord replace_subtree(const TensorWord& w, const Path& path, TensorWord replacement) {
  if (path.empty()) return replacement;
  if (w.is_leaf() || path.front() >= w.children().size()) throw NotApplicable("path does not name a node");
  std::vector<TensorWord> kids = w.children();
  kids[path.front()] = replace_subtree(kids[path.front()], Path(path.begin() + 1, path.end()), std::move(replacement));
  return TensorWord::node(w.generator(), std::move(kids));
}

Configuration mu_embed(const Generator& g, const AxisBlocks& blocks) {
  if (g.block >= blocks.count()) throw InvalidInput("mu_embed: block index out of range");
  if (g.op.dim() != blocks.size(g.block)) throw InvalidInput("mu_embed: op dimension does not match block size");
  std::vector<Box> cubes;
  cubes.reserve(g.op.arity());
  for (const auto& c : g.op.cubes()) cubes.push_back(embed_box(c, g.block, blocks));
  return Configuration(blocks.dim(), std::move(cubes), unchecked);
}

Configuration eval(const TensorWord& w, const AxisBlocks& blocks) {
  validate(w, blocks);
  std::vector<std::optional<Box>> slots(w.arity());
  eval_rec(w, blocks, Box::full(blocks.dim()), slots);
  std::vector<Box> cubes;
  cubes.reserve(slots.size());
  for (auto& s : slots) cubes.push_back(std::move(*s));
  return Configuration(blocks.dim(), std::move(cubes), unchecked);
}

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::InterchangeForward: return "interchange-forward";
    case MoveKind::InterchangeBackward: return "interchange-backward";
    case MoveKind::HeadMerge: return "head-merge";
    case MoveKind::HeadSplit: return "head-split";
    case MoveKind::NullaryStrip: return "nullary-strip";
    case MoveKind::NullaryGraft: return "nullary-graft";
    case MoveKind::UnitInsert: return "unit-insert";
    case MoveKind::UnitDelete: return "unit-delete";
  }
  return "unknown";
}

TensorWord apply_move(const TensorWord& w, const RewriteMove& m, const AxisBlocks& blocks) {
  const TensorWord& node = subtree(w, m.position);
  switch (m.kind) {
    case MoveKind::InterchangeForward:
    case MoveKind::InterchangeBackward:
      return replace_subtree(w, m.position, interchange(node, m));
    case MoveKind::HeadMerge:
      return replace_subtree(w, m.position, head_merge(node, m));
    case MoveKind::HeadSplit:
      return replace_subtree(w, m.position, head_split(node, m));
    case MoveKind::NullaryStrip:
      return replace_subtree(w, m.position, nullary_strip(node, m));
    case MoveKind::NullaryGraft:
      return replace_subtree(w, m.position, nullary_graft(node, m, blocks));
    case MoveKind::UnitInsert: {
      if (m.block >= blocks.count()) not_applicable(m, "block out of range");
      return replace_subtree(
          w, m.position, TensorWord::node(Generator{m.block, Configuration::identity(blocks.size(m.block))}, {node}));
    }
    case MoveKind::UnitDelete:
      if (!is_unit_generator(node)) not_applicable(m, "node is not an identity generator");
      return replace_subtree(w, m.position, node.children().front());
  }
  not_applicable(m, "unknown move");
}

namespace {

TensorWord strip_root_nullaries(const TensorWord& w) {
  const auto& head = w.generator();
  std::vector<Box> cubes;
  std::vector<TensorWord> kids;
  for (std::size_t i = 0; i < head.op.arity(); ++i) {
    if (w.children()[i].arity() == 0) continue;
    cubes.push_back(head.op[i]);
    kids.push_back(w.children()[i]);
  }
  if (kids.size() == w.children().size()) return w;
  return TensorWord::node(Generator{head.block, Configuration(head.op.dim(), std::move(cubes), unchecked)},
                          std::move(kids));
}

TensorWord gen_pos_rec(const TensorWord& w, const AxisBlocks& blocks) {
  TensorWord cur = strip_root_nullaries(w);
  const auto& head = cur.generator();
  if (head.op.arity() >= 2) return cur;
  if (head.op.is_identity()) return gen_pos_rec(cur.children().front(), blocks);
  TensorWord child = gen_pos_rec(cur.children().front(), blocks);
  if (child.generator().block == head.block) {
    return head_merge(TensorWord::node(head, {std::move(child)}), RewriteMove{MoveKind::HeadMerge, {}, 0});
  }
  const auto kind = head.block < child.generator().block ? MoveKind::InterchangeForward : MoveKind::InterchangeBackward;
  return interchange(TensorWord::node(head, {std::move(child)}), RewriteMove{kind, {}});
}

}  // namespace

TensorWord normalize_gen_pos(const TensorWord& w, const AxisBlocks& blocks) {
  validate(w, blocks);
  if (w.arity() < 2) throw InvalidInput("normalize_gen_pos: word arity must be at least 2");
  return gen_pos_rec(w, blocks);
}

bool is_gen_pos_normal(const TensorWord& w) {
  if (w.is_leaf() || w.generator().op.arity() < 2) return false;
  return std::none_of(w.children().begin(), w.children().end(), [](const TensorWord& c) { return c.arity() == 0; });
}

}  // namespace lcubes
