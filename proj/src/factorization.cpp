#include "lcubes/factorization.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace lcubes {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void canonical_order(std::vector<std::vector<std::size_t>>& groups) {
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

Box hull_of(std::span<const Box> projections, const std::vector<std::size_t>& members) {
  std::vector<Box> boxes;
  boxes.reserve(members.size());
  for (auto m : members) boxes.push_back(projections[m]);
  return bounding_box(boxes);
}

std::vector<Box> project_all(std::span<const Box> cubes, const AxisBlocks& blocks, std::size_t block) {
  std::vector<Box> out;
  out.reserve(cubes.size());
  for (const auto& c : cubes) out.push_back(c.project(blocks.offset(block), blocks.size(block)));
  return out;
}

std::vector<std::vector<std::size_t>> group_projections(std::span<const Box> projections) {
  DisjointSets sets(projections.size());
  for (std::size_t i = 0; i < projections.size(); ++i) {
    for (std::size_t k = i + 1; k < projections.size(); ++k) {
      if (projections[i].overlaps(projections[k])) sets.unite(i, k);
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(projections.size(), projections.size());
  for (std::size_t i = 0; i < projections.size(); ++i) {
    const auto root = sets.find(i);
    if (slot[root] == projections.size()) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  return close_groups(projections, std::move(groups));
}

Box replace_block(const Box& cube, const Box& block_box, const AxisBlocks& blocks, std::size_t block) {
  std::vector<Interval> ivs = cube.intervals();
  for (std::size_t a = 0; a < block_box.dim(); ++a) ivs[blocks.offset(block) + a] = block_box[a];
  return Box(std::move(ivs));
}

struct Factorizer {
  const AxisBlocks& blocks;
  std::optional<NotDecomposable> failure;

  TensorWord unary_chain(const Box& cube, std::size_t label) const {
    TensorWord w = TensorWord::leaf(label);
    for (std::size_t b = blocks.count(); b-- > 0;) {
      Box proj = cube.project(blocks.offset(b), blocks.size(b));
      if (proj.is_full()) continue;
      w = TensorWord::node(Generator{b, Configuration(blocks.size(b), {std::move(proj)}, unchecked)}, {std::move(w)});
    }
    return w;
  }

  std::optional<TensorWord> run(const std::vector<Box>& cubes, const std::vector<std::size_t>& labels) {
    if (cubes.empty()) return TensorWord::nullary(0, blocks.size(0));
    if (cubes.size() == 1) return unary_chain(cubes.front(), labels.front());

    std::vector<StripGrouping> singles;
    for (std::size_t b = 0; b < blocks.count(); ++b) {
      const auto projections = project_all(cubes, blocks, b);
      auto groups = group_projections(projections);
      if (groups.size() < 2) {
        singles.push_back(StripGrouping{b, groups, {hull_of(projections, groups.front())}});
        continue;
      }
      std::vector<Box> hulls;
      std::vector<TensorWord> children;
      for (const auto& g : groups) {
        hulls.push_back(hull_of(projections, g));
        std::vector<Box> sub;
        std::vector<std::size_t> sub_labels;
        for (auto m : g) {
          sub.push_back(replace_block(cubes[m], box_unapply(hulls.back(), projections[m]), blocks, b));
          sub_labels.push_back(labels[m]);
        }
        auto child = run(sub, sub_labels);
        if (!child) return std::nullopt;
        children.push_back(std::move(*child));
      }
      return TensorWord::node(Generator{b, Configuration(blocks.size(b), std::move(hulls), unchecked)},
                              std::move(children));
    }
    failure = NotDecomposable{Configuration::nullary(blocks.dim()), labels,
                              Configuration(blocks.dim(), cubes, unchecked), std::move(singles)};
    return std::nullopt;
  }
};

void check_dim(const Configuration& c, const AxisBlocks& blocks) {
  if (c.dim() != blocks.dim()) {
    throw InvalidInput("configuration of dimension " + std::to_string(c.dim()) + " does not match blocks " +
                       blocks.str() + " (dimension " + std::to_string(blocks.dim()) + ")");
  }
}

bool hulls_disjoint(const std::vector<Box>& hulls) {
  for (std::size_t i = 0; i < hulls.size(); ++i) {
    for (std::size_t k = i + 1; k < hulls.size(); ++k) {
      if (hulls[i].overlaps(hulls[k])) return false;
    }
  }
  return true;
}

// Memoized search over subsets (bit masks) of the cubes.
class BruteForce {
 public:
  BruteForce(const Configuration& c, const AxisBlocks& blocks) {
    for (std::size_t b = 0; b < blocks.count(); ++b) projections_.push_back(project_all(c.cubes(), blocks, b));
  }

  bool decomposable(std::uint32_t mask) {
    if (std::popcount(mask) <= 1) return true;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < 32; ++i) {
      if (mask & (1u << i)) members.push_back(i);
    }
    bool found = false;
    for (std::size_t b = 0; b < projections_.size() && !found; ++b) {
      std::vector<std::size_t> assignment(members.size(), 0);
      found = search_partitions(b, members, assignment, 1, 1);
    }
    memo_[mask] = found;
    return found;
  }

 private:
  // Enumerates set partitions as restricted growth strings.
  bool search_partitions(std::size_t block, const std::vector<std::size_t>& members,
                         std::vector<std::size_t>& assignment, std::size_t pos, std::size_t used) {
    if (pos == members.size()) {
      if (used < 2) return false;
      std::vector<std::uint32_t> group_masks(used, 0);
      for (std::size_t i = 0; i < members.size(); ++i) group_masks[assignment[i]] |= 1u << members[i];
      std::vector<Box> hulls;
      for (auto gm : group_masks) {
        std::vector<Box> boxes;
        for (std::size_t i = 0; i < 32; ++i) {
          if (gm & (1u << i)) boxes.push_back(projections_[block][i]);
        }
        hulls.push_back(bounding_box(boxes));
      }
      if (!hulls_disjoint(hulls)) return false;
      return std::all_of(group_masks.begin(), group_masks.end(), [this](std::uint32_t gm) { return decomposable(gm); });
    }
    for (std::size_t g = 0; g <= used && g < members.size(); ++g) {
      assignment[pos] = g;
      if (search_partitions(block, members, assignment, pos + 1, std::max(used, g + 1))) return true;
    }
    return false;
  }

  std::vector<std::vector<Box>> projections_;
  std::unordered_map<std::uint32_t, bool> memo_;
};

// Interior containment relative to the open unit cube: faces on the boundary
// of ]0,1[^k may coincide.
bool holds_in_interior(const Box& outer, const Box& inner) {
  for (std::size_t a = 0; a < outer.dim(); ++a) {
    const auto& o = outer[a];
    const auto& i = inner[a];
    const bool lo_ok = o.lo() < i.lo() || (o.lo() == i.lo() && o.lo() == 0);
    const bool hi_ok = i.hi() < o.hi() || (o.hi() == i.hi() && o.hi() == 1);
    if (!lo_ok || !hi_ok) return false;
  }
  return true;
}

std::size_t unique_holder(const Configuration& head, const Box& proj, std::size_t label, const char* name) {
  std::optional<std::size_t> found;
  for (std::size_t k = 0; k < head.arity(); ++k) {
    if (!holds_in_interior(head[k], proj)) continue;
    if (found) throw InvalidInput(std::string("common_refinement: projection of cube ") + std::to_string(label + 1) +
                                  " lies in two cubes of " + name);
    found = k;
  }
  if (!found) {
    throw InvalidInput(std::string("common_refinement: projection of cube ") + std::to_string(label + 1) +
                       " is not interior to a cube of " + name);
  }
  return *found;
}

Box intersect(const Box& a, const Box& b) {
  std::vector<Interval> ivs;
  for (std::size_t ax = 0; ax < a.dim(); ++ax) {
    ivs.emplace_back(std::max(a[ax].lo(), b[ax].lo()), std::min(a[ax].hi(), b[ax].hi()));
  }
  return Box(std::move(ivs));
}

std::pair<std::vector<Configuration>, Permutation> refinement_witness(const Configuration& head,
                                                                      const std::vector<Box>& wedge,
                                                                      const std::vector<std::size_t>& owner) {
  std::vector<std::vector<Box>> parts(head.arity());
  std::vector<std::vector<std::size_t>> members(head.arity());
  for (std::size_t w = 0; w < wedge.size(); ++w) {
    parts[owner[w]].push_back(box_unapply(head[owner[w]], wedge[w]));
    members[owner[w]].push_back(w);
  }
  // composed position -> wedge index; invert to get wedge index -> composed position
  std::vector<std::size_t> images(wedge.size());
  std::size_t pos = 0;
  for (const auto& m : members) {
    for (auto w : m) images[w] = pos++;
  }
  std::vector<Configuration> configs;
  for (auto& p : parts) configs.emplace_back(head.dim(), std::move(p), unchecked);
  return {std::move(configs), Permutation(std::move(images))};
}

}  // namespace

std::vector<std::vector<std::size_t>> close_groups(std::span<const Box> projections,
                                                   std::vector<std::vector<std::size_t>> groups) {
  bool merged = true;
  while (merged) {
    merged = false;
    std::vector<Box> hulls;
    for (const auto& g : groups) hulls.push_back(hull_of(projections, g));
    for (std::size_t i = 0; i < groups.size() && !merged; ++i) {
      for (std::size_t k = i + 1; k < groups.size() && !merged; ++k) {
        if (!hulls[i].overlaps(hulls[k])) continue;
        groups[i].insert(groups[i].end(), groups[k].begin(), groups[k].end());
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(k));
        merged = true;
      }
    }
  }
  canonical_order(groups);
  return groups;
}

StripGrouping strip_grouping(const Configuration& c, const AxisBlocks& blocks, std::size_t block) {
  check_dim(c, blocks);
  if (block >= blocks.count()) throw InvalidInput("strip_grouping: block index out of range");
  if (c.arity() == 0) throw InvalidInput("strip_grouping: configuration has no cubes");
  const auto projections = project_all(c.cubes(), blocks, block);
  StripGrouping out{block, group_projections(projections), {}};
  for (const auto& g : out.groups) out.hulls.push_back(hull_of(projections, g));
  assert(hulls_disjoint(out.hulls));
  return out;
}

FactorResult factor(const Configuration& c, const AxisBlocks& blocks) {
  check_dim(c, blocks);
  std::vector<std::size_t> labels(c.arity());
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  Factorizer f{blocks, std::nullopt};
  if (auto w = f.run(c.cubes(), labels)) return FactorResult(std::move(*w));
  f.failure->config = c;
  return FactorResult(std::move(*f.failure));
}

bool is_decomposable(const Configuration& c, const AxisBlocks& blocks) { return factor(c, blocks).decomposable(); }

bool brute_force_decomposable(const Configuration& c, const AxisBlocks& blocks, std::size_t max_cubes) {
  check_dim(c, blocks);
  if (c.arity() > max_cubes || c.arity() > 31) {
    throw InvalidInput("brute_force_decomposable: " + std::to_string(c.arity()) + " cubes exceed the bound " +
                       std::to_string(max_cubes));
  }
  BruteForce search(c, blocks);
  return search.decomposable(static_cast<std::uint32_t>((std::uint64_t{1} << c.arity()) - 1));
}

Refinement common_refinement(const Configuration& p, const Configuration& pbar, const Configuration& c,
                             const AxisBlocks& blocks, std::size_t block) {
  check_dim(c, blocks);
  if (block >= blocks.count()) throw InvalidInput("common_refinement: block index out of range");
  if (p.dim() != blocks.size(block) || pbar.dim() != blocks.size(block)) {
    throw InvalidInput("common_refinement: heads must have the block's dimension");
  }
  const auto projections = project_all(c.cubes(), blocks, block);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t l = 0; l < projections.size(); ++l) {
    const std::pair cell{unique_holder(p, projections[l], l, "p"), unique_holder(pbar, projections[l], l, "pbar")};
    if (std::find(cells.begin(), cells.end(), cell) == cells.end()) cells.push_back(cell);
  }
  std::vector<Box> wedge;
  std::vector<std::size_t> p_owner;
  std::vector<std::size_t> pbar_owner;
  for (const auto& [k, kbar] : cells) {
    wedge.push_back(intersect(p[k], pbar[kbar]));
    p_owner.push_back(k);
    pbar_owner.push_back(kbar);
  }
  auto [p_parts, p_order] = refinement_witness(p, wedge, p_owner);
  auto [pbar_parts, pbar_order] = refinement_witness(pbar, wedge, pbar_owner);
  return Refinement{Configuration(p.dim(), std::move(wedge), unchecked), std::move(p_parts), std::move(p_order),
                    std::move(pbar_parts), std::move(pbar_order)};
}

}  // namespace lcubes
