#pragma once

#include <cmath>
#include <cstdint>

namespace anofol {

// Plane points/vectors and 2x2 real matrices. Everything in this library is
// 2-dimensional, so the linear algebra is written out by hand instead of
// pulling in a matrix library.

struct vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline vec2 operator+(vec2 a, vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline vec2 operator-(vec2 a, vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline vec2 operator-(vec2 a) { return {-a.x, -a.y}; }
inline vec2 operator*(double s, vec2 a) { return {s * a.x, s * a.y}; }

inline double dot(vec2 a, vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(vec2 a) { return std::hypot(a.x, a.y); }

struct ivec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;
};

inline vec2 to_vec2(ivec2 k) { return {static_cast<double>(k.x), static_cast<double>(k.y)}; }
inline vec2 operator+(vec2 a, ivec2 k) { return {a.x + static_cast<double>(k.x), a.y + static_cast<double>(k.y)}; }

// Row-major 2x2 matrix [[a,b],[c,d]].
struct mat2 {
    double a = 1.0, b = 0.0;
    double c = 0.0, d = 1.0;
};

inline vec2 operator*(const mat2& m, vec2 v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

inline mat2 operator*(const mat2& m, const mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

inline double det(const mat2& m) { return m.a * m.d - m.b * m.c; }
inline double trace(const mat2& m) { return m.a + m.d; }

// Spectral norm through the closed-form singular values of a 2x2 matrix.
inline double spectral_norm(const mat2& m) {
    const double t = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
    const double dd = det(m);
    const double disc = std::sqrt(std::max(t * t - 4.0 * dd * dd, 0.0));
    return std::sqrt(0.5 * (t + disc));
}

inline double smallest_singular_value(const mat2& m) {
    const double t = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
    const double dd = det(m);
    const double disc = std::sqrt(std::max(t * t - 4.0 * dd * dd, 0.0));
    const double low = 0.5 * (t - disc);
    return std::sqrt(std::max(low, 0.0));
}

// Axis-aligned rectangle, used for sampling windows.
struct rect {
    double x_min = -0.5, x_max = 0.5;
    double y_min = -0.5, y_max = 0.5;

    bool valid() const { return x_min < x_max && y_min < y_max; }
    vec2 center() const { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)}; }
};

// Fractional part in [0,1).
inline double fractional(double t) {
    double f = t - std::floor(t);
    if (f >= 1.0) f = 0.0;  // guards floor rounding at the seam
    return f;
}

inline vec2 fractional(vec2 v) { return {fractional(v.x), fractional(v.y)}; }

}  // namespace anofol
