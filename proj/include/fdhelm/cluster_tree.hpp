#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fdhelm/geometry.hpp"

namespace fdhelm {

/// Lattice coordinate of a box in the uniform octree: the box lower corner is
/// root.lower + (i, j, k) * root_side / 2^level.
struct GridCoord {
    int level = 0;
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t k = 0;

    friend bool operator==(const GridCoord&, const GridCoord&) = default;
    // Lexicographic in (level, i, j, k).
    friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

struct ClusterNode {
    GridCoord coord;
    std::int32_t parent = -1;
    std::array<std::int32_t, 8> children{-1, -1, -1, -1, -1, -1, -1, -1};
    // Contiguous slot range of the node's points in the permuted order.
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
    bool leaf = true;

    std::uint32_t point_count() const { return end - begin; }
};

/// Uniform box cluster tree over one point set. Nodes are subdivided while
/// they hold more than n_max points; only nonempty children are created, so
/// boxes at one level are identical up to translation. Points are reordered
/// internally so every node owns a contiguous slot range; the permutation maps
/// slots back to the caller's indices.
class ClusterTree {
public:
    /// depth_cap bounds the recursion when more than n_max coincident points
    /// exist; a node at the cap stays a leaf regardless of its point count.
    ClusterTree(std::span<const Point3> points, const AxisBox& root, int n_max, int depth_cap = 30);

    const std::vector<ClusterNode>& nodes() const { return nodes_; }
    const ClusterNode& node(std::int32_t id) const { return nodes_[id]; }
    const ClusterNode& root() const { return nodes_[0]; }

    int depth() const { return depth_; }
    int n_max() const { return n_max_; }

    /// Node ids at one level, sorted by lattice coordinate.
    const std::vector<std::int32_t>& level_nodes(int level) const { return levels_[level]; }
    /// Leaf node ids sorted by (level, coordinate).
    const std::vector<std::int32_t>& leaves() const { return leaves_; }

    /// The (padded) root box actually used for the subdivision.
    const AxisBox& root_box() const { return root_box_; }
    /// Side lengths of boxes at a level: root sides / 2^level.
    Point3 level_sides(int level) const { return level_sides_[level]; }
    /// Diameter of boxes at a level.
    double level_diameter(int level) const { return level_diam_[level]; }

    /// Box of a node, derived from its lattice coordinate.
    AxisBox box(const ClusterNode& n) const;
    AxisBox box(std::int32_t id) const { return box(nodes_[id]); }

    std::optional<std::int32_t> node_at(const GridCoord& c) const;

    /// Points in permuted (slot) order.
    std::span<const Point3> slot_points() const { return points_; }
    std::span<const Point3> slot_points(const ClusterNode& n) const {
        return std::span<const Point3>(points_).subspan(n.begin, n.point_count());
    }
    /// Original index of the point stored in a slot.
    std::uint32_t original_index(std::uint32_t slot) const { return perm_[slot]; }
    std::size_t point_count() const { return points_.size(); }

    /// Leaves that exceed n_max because the depth cap was reached.
    int oversized_leaf_count() const { return oversized_leaves_; }

private:
    void refine(std::int32_t id, int depth_cap);

    std::vector<ClusterNode> nodes_;
    std::vector<std::vector<std::int32_t>> levels_;
    std::vector<std::int32_t> leaves_;
    std::vector<Point3> points_;
    std::vector<std::uint32_t> perm_;
    AxisBox root_box_;
    std::vector<Point3> level_sides_;
    std::vector<double> level_diam_;
    int n_max_ = 0;
    int depth_ = 0;
    int oversized_leaves_ = 0;
};

}  // namespace fdhelm
