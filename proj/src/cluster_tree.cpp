#include "fdhelm/cluster_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdhelm {

namespace {
constexpr double kRootPadding = 1e-12;  // relative, lower faces only
}

ClusterTree::ClusterTree(std::span<const Point3> points, const AxisBox& root, int n_max,
                         int depth_cap)
    : n_max_(n_max) {
    if (points.empty()) throw std::invalid_argument("cluster tree: empty point set");
    if (n_max < 1) throw std::invalid_argument("cluster tree: n_max must be >= 1");
    if (!root.valid()) throw std::invalid_argument("cluster tree: invalid root box");

    // Expand the lower faces so points sitting exactly on the lower boundary
    // lie strictly inside the half-open root.
    root_box_ = root;
    for (int a = 0; a < 3; ++a) {
        root_box_.lower[a] -= kRootPadding * (root.upper[a] - root.lower[a]);
    }
    for (const Point3& p : points) {
        if (!root_box_.contains(p)) throw std::invalid_argument("cluster tree: point outside root box");
    }

    points_.assign(points.begin(), points.end());
    perm_.resize(points_.size());
    for (std::uint32_t s = 0; s < perm_.size(); ++s) perm_[s] = s;

    level_sides_.push_back(root_box_.side_lengths());
    level_diam_.push_back(norm(level_sides_[0]));
    levels_.emplace_back();

    ClusterNode root_node;
    root_node.coord = {0, 0, 0, 0};
    root_node.begin = 0;
    root_node.end = static_cast<std::uint32_t>(points_.size());
    nodes_.push_back(root_node);
    levels_[0].push_back(0);

    refine(0, depth_cap);

    for (auto& lvl : levels_) {
        std::sort(lvl.begin(), lvl.end(),
                  [&](std::int32_t a, std::int32_t b) { return nodes_[a].coord < nodes_[b].coord; });
    }
    for (int lvl = 0; lvl <= depth_; ++lvl) {
        for (std::int32_t id : levels_[lvl]) {
            if (nodes_[id].leaf) leaves_.push_back(id);
        }
    }
}

void ClusterTree::refine(std::int32_t id, int depth_cap) {
    const int level = nodes_[id].coord.level;
    if (nodes_[id].point_count() <= static_cast<std::uint32_t>(n_max_)) return;
    if (level >= depth_cap) {
        ++oversized_leaves_;
        return;
    }

    if (static_cast<int>(level_sides_.size()) <= level + 1) {
        level_sides_.push_back(0.5 * level_sides_[level]);
        level_diam_.push_back(norm(level_sides_[level + 1]));
        levels_.emplace_back();
    }

    // Subdivision midpoints derived from the lattice coordinate, so all boxes
    // of a level share bitwise identical side lengths.
    const GridCoord c = nodes_[id].coord;
    const Point3 child_side = level_sides_[level + 1];
    const Point3 mid{root_box_.lower.x + (2 * c.i + 1) * child_side.x,
                     root_box_.lower.y + (2 * c.j + 1) * child_side.y,
                     root_box_.lower.z + (2 * c.k + 1) * child_side.z};

    const std::uint32_t begin = nodes_[id].begin;
    const std::uint32_t end = nodes_[id].end;

    std::array<std::uint32_t, 8> count{};
    std::vector<int> oct(end - begin);
    for (std::uint32_t s = begin; s < end; ++s) {
        const Point3& p = points_[s];
        const int o = 4 * (p.x > mid.x) + 2 * (p.y > mid.y) + (p.z > mid.z);
        oct[s - begin] = o;
        ++count[o];
    }

    std::array<std::uint32_t, 8> offset{};
    std::uint32_t acc = begin;
    for (int o = 0; o < 8; ++o) {
        offset[o] = acc;
        acc += count[o];
    }

    {
        std::vector<Point3> tmp_pts(end - begin);
        std::vector<std::uint32_t> tmp_perm(end - begin);
        std::array<std::uint32_t, 8> cursor = offset;
        for (std::uint32_t s = begin; s < end; ++s) {
            const std::uint32_t dst = cursor[oct[s - begin]]++ - begin;
            tmp_pts[dst] = points_[s];
            tmp_perm[dst] = perm_[s];
        }
        std::copy(tmp_pts.begin(), tmp_pts.end(), points_.begin() + begin);
        std::copy(tmp_perm.begin(), tmp_perm.end(), perm_.begin() + begin);
    }

    nodes_[id].leaf = false;
    depth_ = std::max(depth_, level + 1);

    for (int o = 0; o < 8; ++o) {
        if (count[o] == 0) continue;
        ClusterNode child;
        child.coord = {level + 1, 2 * c.i + ((o >> 2) & 1), 2 * c.j + ((o >> 1) & 1),
                       2 * c.k + (o & 1)};
        child.parent = id;
        child.begin = offset[o];
        child.end = offset[o] + count[o];
        const auto child_id = static_cast<std::int32_t>(nodes_.size());
        nodes_.push_back(child);
        nodes_[id].children[o] = child_id;
        levels_[level + 1].push_back(child_id);
        refine(child_id, depth_cap);
    }
}

AxisBox ClusterTree::box(const ClusterNode& n) const {
    const Point3 side = level_sides_[n.coord.level];
    AxisBox b;
    b.lower = {root_box_.lower.x + n.coord.i * side.x, root_box_.lower.y + n.coord.j * side.y,
               root_box_.lower.z + n.coord.k * side.z};
    b.upper = {root_box_.lower.x + (n.coord.i + 1) * side.x,
               root_box_.lower.y + (n.coord.j + 1) * side.y,
               root_box_.lower.z + (n.coord.k + 1) * side.z};
    return b;
}

std::optional<std::int32_t> ClusterTree::node_at(const GridCoord& c) const {
    if (c.level < 0 || c.level > depth_) return std::nullopt;
    const auto& lvl = levels_[c.level];
    const auto it = std::lower_bound(lvl.begin(), lvl.end(), c, [&](std::int32_t id, const GridCoord& q) {
        return nodes_[id].coord < q;
    });
    if (it == lvl.end() || !(nodes_[*it].coord == c)) return std::nullopt;
    return *it;
}

}  // namespace fdhelm
