#pragma once

// Signature-(2,2) linear algebra on E^4_2.
//
// Metric convention: <u, v> = -u1 v1 - u2 v2 + u3 v3 + u4 v4. The opposite
// global sign flips every inner product but no nullity condition; this sign is
// the one under which the canonical-form identities (notably the frame pairing
// <perp(gamma), gamma'> = 2 (1 + m^2) Omega) hold as written.

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <string_view>

#include "nullcone/error.hpp"
#include "nullcone/jet.hpp"

namespace nullcone {

inline constexpr std::string_view kMetricSignature = "(-,-,+,+)";

template <class T>
struct BasicVec4 {
    std::array<T, 4> c{};

    BasicVec4() = default;
    BasicVec4(T c1, T c2, T c3, T c4) : c{c1, c2, c3, c4} {}

    T& operator[](std::size_t i) { return c[i]; }
    const T& operator[](std::size_t i) const { return c[i]; }

    BasicVec4 operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

    friend BasicVec4 operator+(const BasicVec4& a, const BasicVec4& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
    }
    friend BasicVec4 operator-(const BasicVec4& a, const BasicVec4& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
    }
    template <class S>
    friend BasicVec4 operator*(const S& s, const BasicVec4& a) {
        return {s * a[0], s * a[1], s * a[2], s * a[3]};
    }
    template <class S>
    friend BasicVec4 operator/(const BasicVec4& a, const S& s) {
        return {a[0] / s, a[1] / s, a[2] / s, a[3] / s};
    }
    friend bool operator==(const BasicVec4&, const BasicVec4&) = default;
};

using Vec4 = BasicVec4<double>;
using Vec4Jet = BasicVec4<Jet>;

inline std::ostream& operator<<(std::ostream& os, const Vec4& v) {
    return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ')';
}

enum class CausalCharacter { Null, Spacelike, Timelike, Zero };
enum class PerpVariant { P13, P14 };

inline std::string_view to_string(CausalCharacter c) {
    switch (c) {
    case CausalCharacter::Null: return "null";
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Zero: return "zero";
    }
    return "?";
}

inline std::string_view to_string(PerpVariant p) { return p == PerpVariant::P13 ? "P13" : "P14"; }

inline constexpr double kDefaultCausalTol = 1e-9;

namespace detail {
inline bool finite_value(double x) { return std::isfinite(x); }
inline bool finite_value(const Jet& x) { return x.all_finite(); }

template <class T>
void require_finite(const BasicVec4<T>& v) {
    for (const auto& x : v.c)
        if (!finite_value(x)) throw InvalidInput("non-finite vector component");
}
} // namespace detail

template <class T>
T inner(const BasicVec4<T>& u, const BasicVec4<T>& v) {
    detail::require_finite(u);
    detail::require_finite(v);
    return -(u[0] * v[0]) - u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

/// Natural orthogonal null vector: P13 -> (v2, -v1, v4, -v3),
/// P14 -> (v2, -v1, -v4, v3). Linear, and <v, perp(v)> = 0 identically.
template <class T>
BasicVec4<T> perp(const BasicVec4<T>& v, PerpVariant variant) {
    if (variant == PerpVariant::P13) return {v[1], -v[0], v[3], -v[2]};
    return {v[1], -v[0], -v[3], v[2]};
}

inline CausalCharacter causal_character(const Vec4& v, double tol = kDefaultCausalTol) {
    if (!(tol > 0)) throw InvalidConfig("causal tolerance must be positive");
    detail::require_finite(v);
    double max_abs = 0;
    for (double x : v.c) max_abs = std::max(max_abs, std::abs(x));
    if (max_abs <= tol) return CausalCharacter::Zero;
    const double q = inner(v, v);
    if (std::abs(q) <= tol) return CausalCharacter::Null;
    return q > 0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

inline double max_abs_diff(const Vec4& a, const Vec4& b) {
    double m = 0;
    for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline Vec4 values(const Vec4Jet& v) { return {v[0].value(), v[1].value(), v[2].value(), v[3].value()}; }

inline Vec4Jet differentiate(const Vec4Jet& v) {
    return {v[0].differentiate(), v[1].differentiate(), v[2].differentiate(), v[3].differentiate()};
}

inline int order(const Vec4Jet& v) {
    return std::min(std::min(v[0].order(), v[1].order()), std::min(v[2].order(), v[3].order()));
}

} // namespace nullcone
