#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fdhelm/geometry.hpp"

namespace fdhelm {

/// Number of tensor interpolation nodes for degree m: (m+1)^3.
inline int tensor_node_count(int m) {
    const int n = m + 1;
    return n * n * n;
}

/// 1D Chebyshev nodes of order m+1 mapped to (a, b):
/// (a+b)/2 + (b-a)/2 * cos((2*nu - 1) * pi / (2*(m+1))), nu = 1..m+1.
std::vector<double> chebyshev_nodes(double a, double b, int m);

/// Value of the idx-th Lagrange cardinal polynomial for the given nodes at x.
double lagrange_eval(std::span<const double> nodes, int idx, double x);

/// Tensor-product Chebyshev grid of a box. Flat node order is lexicographic in
/// the per-axis indices (nu1, nu2, nu3) with nu3 fastest; the same order is
/// used for interpolation matrices, transfer matrices and coupling matrices.
class TensorGrid {
public:
    TensorGrid(const AxisBox& box, int m);

    int degree() const { return m_; }
    int node_count() const { return tensor_node_count(m_); }
    Point3 node(int flat) const;
    const std::array<std::vector<double>, 3>& axis_nodes() const { return axis_nodes_; }

private:
    int m_;
    std::array<std::vector<double>, 3> axis_nodes_;
};

/// Real tensor Lagrange matrix: entry (j, k) is the k-th tensor cardinal
/// polynomial of the box evaluated at pts[j].
Eigen::MatrixXd build_lagrange_matrix(std::span<const Point3> pts, const AxisBox& box, int m);

/// Directional interpolation matrix: entry (j, k) is
/// L_k(pts[j]) * exp(i kappa <pts[j], c>).
Eigen::MatrixXcd build_interp_matrix(std::span<const Point3> pts, const AxisBox& box, Point3 c,
                                     double kappa, int m);

/// The 8 non-directional parent-to-child transfer matrices in a reference
/// configuration; entry (j, k) of E[oct] is the k-th parent cardinal polynomial
/// evaluated at the j-th tensor node of child octant oct. Octant bits are
/// (x, y, z) with z fastest, i.e. oct = 4*bx + 2*by + bz where bit 1 selects
/// the upper half. By affine invariance the matrices apply to every box of
/// every level.
struct TransferRef {
    int m = 0;
    std::array<Eigen::MatrixXd, 8> E;
};

TransferRef build_transfer_reference(int m);

/// Diagonal plane-wave factor of a transfer matrix: entries
/// exp(i kappa <xi_child_nu, c - c_child>) over the child box tensor nodes.
Eigen::VectorXcd build_directional_diag(const AxisBox& child_box, Point3 c, Point3 c_child,
                                        double kappa, int m);

}  // namespace fdhelm
