#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace fdhelm {

using Complex = std::complex<double>;

inline constexpr double four_pi = 4.0 * 3.14159265358979323846;

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
    double& operator[](int axis) { return axis == 0 ? x : (axis == 1 ? y : z); }
};

inline Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator*(double s, Point3 p) { return {s * p.x, s * p.y, s * p.z}; }
inline bool operator==(Point3 a, Point3 b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Point3 p) { return std::sqrt(dot(p, p)); }
inline bool is_zero(Point3 p) { return p.x == 0.0 && p.y == 0.0 && p.z == 0.0; }

inline Point3 normalized(Point3 p) {
    const double n = norm(p);
    if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    return (1.0 / n) * p;
}

/// Wave number of the Helmholtz kernel, kappa > 0.
struct WaveNumber {
    explicit WaveNumber(double k) : kappa(k) {
        if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("wave number must be positive and finite");
    }
    double kappa;
};

/// Axis-parallel box, half-open per axis: (lower_i, upper_i].
struct AxisBox {
    Point3 lower;
    Point3 upper;

    Point3 midpoint() const { return 0.5 * (lower + upper); }
    Point3 side_lengths() const { return upper - lower; }

    bool contains(Point3 p) const {
        return p.x > lower.x && p.x <= upper.x && p.y > lower.y && p.y <= upper.y && p.z > lower.z &&
               p.z <= upper.z;
    }

    bool valid() const { return lower.x < upper.x && lower.y < upper.y && lower.z < upper.z; }
};

/// Euclidean diagonal of the box.
inline double box_diameter(const AxisBox& b) {
    const Point3 d = b.upper - b.lower;
    return std::sqrt(dot(d, d));
}

/// Distance between two boxes; 0 when they overlap or touch. The value equals
/// the distance of the closures, which is the infimum over the half-open sets.
inline double box_distance(const AxisBox& t, const AxisBox& s) {
    double acc = 0.0;
    for (int a = 0; a < 3; ++a) {
        const double gap = std::max(std::max(t.lower[a] - s.upper[a], s.lower[a] - t.upper[a]), 0.0);
        acc += gap * gap;
    }
    return std::sqrt(acc);
}

/// Helmholtz kernel evaluated at a difference vector d = x - y:
/// exp(i kappa |d|) / (4 pi |d|).
inline Complex kernel_diff(Point3 d, double kappa) {
    const double r = norm(d);
    if (r == 0.0) throw std::domain_error("Helmholtz kernel is singular at x == y");
    const double phase = kappa * r;
    const double w = 1.0 / (four_pi * r);
    return {w * std::cos(phase), w * std::sin(phase)};
}

inline Complex kernel(Point3 x, Point3 y, double kappa) { return kernel_diff(x - y, kappa); }

/// Directionally modulated kernel at a difference vector:
/// exp(i kappa (|d| - <d, c>)) / (4 pi |d|) with |c| = 1 or c = 0.
inline Complex kernel_directional_diff(Point3 d, Point3 c, double kappa) {
    const double r = norm(d);
    if (r == 0.0) throw std::domain_error("Helmholtz kernel is singular at x == y");
    const double phase = kappa * (r - dot(d, c));
    const double w = 1.0 / (four_pi * r);
    return {w * std::cos(phase), w * std::sin(phase)};
}

inline Complex kernel_directional(Point3 x, Point3 y, Point3 c, double kappa) {
    return kernel_directional_diff(x - y, c, kappa);
}

}  // namespace fdhelm
