#include "fdhelm/interpolation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fdhelm {

std::vector<double> chebyshev_nodes(double a, double b, int m) {
    if (!(a < b)) throw std::invalid_argument("chebyshev_nodes: degenerate interval");
    if (m < 0) throw std::invalid_argument("chebyshev_nodes: negative degree");
    const int n = m + 1;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::vector<double> nodes(n);
    for (int nu = 1; nu <= n; ++nu) {
        nodes[nu - 1] = mid + half * std::cos((2.0 * nu - 1.0) * std::numbers::pi / (2.0 * n));
    }
    return nodes;
}

double lagrange_eval(std::span<const double> nodes, int idx, double x) {
    double value = 1.0;
    for (int j = 0; j < static_cast<int>(nodes.size()); ++j) {
        if (j == idx) continue;
        value *= (x - nodes[j]) / (nodes[idx] - nodes[j]);
    }
    return value;
}

TensorGrid::TensorGrid(const AxisBox& box, int m) : m_(m) {
    for (int a = 0; a < 3; ++a) {
        axis_nodes_[a] = chebyshev_nodes(box.lower[a], box.upper[a], m);
    }
}

Point3 TensorGrid::node(int flat) const {
    const int n = m_ + 1;
    const int nu3 = flat % n;
    const int nu2 = (flat / n) % n;
    const int nu1 = flat / (n * n);
    return {axis_nodes_[0][nu1], axis_nodes_[1][nu2], axis_nodes_[2][nu3]};
}

namespace {

// Per-axis cardinal values for one evaluation point.
void cardinal_values(const std::vector<double>& nodes, double x, std::vector<double>& out) {
    const int n = static_cast<int>(nodes.size());
    out.resize(n);
    for (int i = 0; i < n; ++i) out[i] = lagrange_eval(nodes, i, x);
}

}  // namespace

Eigen::MatrixXd build_lagrange_matrix(std::span<const Point3> pts, const AxisBox& box, int m) {
    const TensorGrid grid(box, m);
    const int n = m + 1;
    Eigen::MatrixXd L(static_cast<Eigen::Index>(pts.size()), tensor_node_count(m));
    std::vector<double> c1, c2, c3;
    for (Eigen::Index j = 0; j < L.rows(); ++j) {
        cardinal_values(grid.axis_nodes()[0], pts[j].x, c1);
        cardinal_values(grid.axis_nodes()[1], pts[j].y, c2);
        cardinal_values(grid.axis_nodes()[2], pts[j].z, c3);
        int flat = 0;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const double ab = c1[a] * c2[b];
                for (int c = 0; c < n; ++c) L(j, flat++) = ab * c3[c];
            }
        }
    }
    return L;
}

Eigen::MatrixXcd build_interp_matrix(std::span<const Point3> pts, const AxisBox& box, Point3 c,
                                     double kappa, int m) {
    const Eigen::MatrixXd L = build_lagrange_matrix(pts, box, m);
    Eigen::MatrixXcd out = L.cast<Complex>();
    if (!is_zero(c)) {
        for (Eigen::Index j = 0; j < out.rows(); ++j) {
            const double phase = kappa * dot(pts[j], c);
            out.row(j) *= Complex{std::cos(phase), std::sin(phase)};
        }
    }
    return out;
}

TransferRef build_transfer_reference(int m) {
    const int n = m + 1;
    const std::vector<double> parent = chebyshev_nodes(0.0, 1.0, m);
    // 1D child-to-parent matrices for the lower and upper half interval.
    std::array<Eigen::MatrixXd, 2> half;
    for (int h = 0; h < 2; ++h) {
        const std::vector<double> child = chebyshev_nodes(h == 0 ? 0.0 : 0.5, h == 0 ? 0.5 : 1.0, m);
        half[h].resize(n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) half[h](j, k) = lagrange_eval(parent, k, child[j]);
    }

    TransferRef ref;
    ref.m = m;
    const int nn = tensor_node_count(m);
    for (int oct = 0; oct < 8; ++oct) {
        const Eigen::MatrixXd& bx = half[(oct >> 2) & 1];
        const Eigen::MatrixXd& by = half[(oct >> 1) & 1];
        const Eigen::MatrixXd& bz = half[oct & 1];
        Eigen::MatrixXd& E = ref.E[oct];
        E.resize(nn, nn);
        for (int j = 0; j < nn; ++j) {
            const int j3 = j % n, j2 = (j / n) % n, j1 = j / (n * n);
            for (int k = 0; k < nn; ++k) {
                const int k3 = k % n, k2 = (k / n) % n, k1 = k / (n * n);
                E(j, k) = bx(j1, k1) * by(j2, k2) * bz(j3, k3);
            }
        }
    }
    return ref;
}

Eigen::VectorXcd build_directional_diag(const AxisBox& child_box, Point3 c, Point3 c_child,
                                        double kappa, int m) {
    const TensorGrid grid(child_box, m);
    const Point3 dc = c - c_child;
    Eigen::VectorXcd diag(grid.node_count());
    for (int j = 0; j < grid.node_count(); ++j) {
        const double phase = kappa * dot(grid.node(j), dc);
        diag(j) = Complex{std::cos(phase), std::sin(phase)};
    }
    return diag;
}

}  // namespace fdhelm
