#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clonesim {

// Planar position in meters within the deployment region.
struct Location {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Location& a, const Location& b) {
        return a.x == b.x && a.y == b.y;
    }
};

inline double distance_sq(const Location& a, const Location& b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    return dx * dx + dy * dy;
}

inline double distance(const Location& a, const Location& b) {
    return std::sqrt(distance_sq(a, b));
}

// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
    const double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a > std::numbers::pi) a -= two_pi;
    if (a <= -std::numbers::pi) a += two_pi;
    return a;
}

// Bearing of the vector from -> to, in (-pi, pi]. Coincident points have no
// direction; callers must not ask.
inline double direction(const Location& from, const Location& to) {
    if (from == to) {
        throw std::invalid_argument("direction: coincident points");
    }
    return wrap_angle(std::atan2(to.y - from.y, to.x - from.x));
}

// Wrapped difference a - b in (-pi, pi].
inline double angle_diff(double a, double b) {
    return wrap_angle(a - b);
}

}  // namespace clonesim
