#pragma once

// Truncated Taylor arithmetic ("jets"): a value together with its first K
// derivatives at a point, propagated exactly through every operation.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "nullcone/error.hpp"

namespace nullcone {

inline constexpr int kMaxJetOrder = 4;

/// Jet of order K <= kMaxJetOrder. Stores normalized Taylor coefficients
/// c_k = f^(k)(t) / k!; binary operations truncate to the smaller order.
template <class T>
class BasicJet {
public:
    BasicJet() = default;

    static BasicJet constant(T value, int order = kMaxJetOrder) {
        BasicJet j(order);
        j.c_[0] = value;
        return j;
    }

    /// The identity function t -> t expanded at `t`.
    static BasicJet variable(T t, int order) {
        BasicJet j(order);
        j.c_[0] = t;
        if (order > 0) j.c_[1] = T(1);
        return j;
    }

    /// Builds a jet from derivative values (f, f', f'', ...).
    static BasicJet from_derivatives(const std::vector<T>& d) {
        if (d.empty() || static_cast<int>(d.size()) > kMaxJetOrder + 1)
            throw InvalidInput("jet needs between 1 and " + std::to_string(kMaxJetOrder + 1) + " derivatives");
        BasicJet j(static_cast<int>(d.size()) - 1);
        T fact = T(1);
        for (std::size_t k = 0; k < d.size(); ++k) {
            if (k > 0) fact *= T(k);
            j.c_[k] = d[k] / fact;
        }
        return j;
    }

    int order() const noexcept { return order_; }
    T value() const noexcept { return c_[0]; }
    T taylor(int k) const { return c_.at(static_cast<std::size_t>(k)); }

    /// j-th derivative value; j must not exceed the order.
    T derivative(int j) const {
        if (j < 0 || j > order_) throw InvalidInput("derivative index exceeds jet order");
        T fact = T(1);
        for (int i = 2; i <= j; ++i) fact *= T(i);
        return c_[j] * fact;
    }

    /// (value, 1st, ..., Kth derivative).
    std::vector<T> derivatives() const {
        std::vector<T> out;
        for (int j = 0; j <= order_; ++j) out.push_back(derivative(j));
        return out;
    }

    /// Jet of the derivative function; order drops by one.
    BasicJet differentiate() const {
        if (order_ == 0) throw InvalidInput("cannot differentiate an order-0 jet");
        BasicJet d(order_ - 1);
        for (int k = 0; k < order_; ++k) d.c_[k] = T(k + 1) * c_[k + 1];
        return d;
    }

    BasicJet truncated(int order) const {
        BasicJet r(std::min(order, order_));
        for (int k = 0; k <= r.order_; ++k) r.c_[k] = c_[k];
        return r;
    }

    bool all_finite() const {
        for (int k = 0; k <= order_; ++k)
            if (!std::isfinite(static_cast<double>(c_[k]))) return false;
        return true;
    }

    BasicJet operator-() const {
        BasicJet r(order_);
        for (int k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
        return r;
    }

    BasicJet& operator+=(const BasicJet& o) { return *this = *this + o; }
    BasicJet& operator-=(const BasicJet& o) { return *this = *this - o; }
    BasicJet& operator*=(const BasicJet& o) { return *this = *this * o; }
    BasicJet& operator/=(const BasicJet& o) { return *this = *this / o; }

    friend BasicJet operator+(const BasicJet& a, const BasicJet& b) {
        BasicJet r(std::min(a.order_, b.order_));
        for (int k = 0; k <= r.order_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend BasicJet operator-(const BasicJet& a, const BasicJet& b) {
        BasicJet r(std::min(a.order_, b.order_));
        for (int k = 0; k <= r.order_; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend BasicJet operator*(const BasicJet& a, const BasicJet& b) {
        BasicJet r(std::min(a.order_, b.order_));
        for (int k = 0; k <= r.order_; ++k) {
            T s = T(0);
            for (int i = 0; i <= k; ++i) s += a.c_[i] * b.c_[k - i];
            r.c_[k] = s;
        }
        return r;
    }
    friend BasicJet operator/(const BasicJet& a, const BasicJet& b) {
        if (b.c_[0] == T(0)) throw DomainError("division by zero");
        BasicJet r(std::min(a.order_, b.order_));
        for (int k = 0; k <= r.order_; ++k) {
            T s = a.c_[k];
            for (int i = 1; i <= k; ++i) s -= b.c_[i] * r.c_[k - i];
            r.c_[k] = s / b.c_[0];
        }
        return r;
    }

    friend BasicJet operator+(const BasicJet& a, T s) { BasicJet r = a; r.c_[0] += s; return r; }
    friend BasicJet operator+(T s, const BasicJet& a) { return a + s; }
    friend BasicJet operator-(const BasicJet& a, T s) { BasicJet r = a; r.c_[0] -= s; return r; }
    friend BasicJet operator-(T s, const BasicJet& a) { return -a + s; }
    friend BasicJet operator*(const BasicJet& a, T s) {
        BasicJet r = a;
        for (int k = 0; k <= r.order_; ++k) r.c_[k] *= s;
        return r;
    }
    friend BasicJet operator*(T s, const BasicJet& a) { return a * s; }
    friend BasicJet operator/(const BasicJet& a, T s) {
        if (s == T(0)) throw DomainError("division by zero");
        BasicJet r = a;
        for (int k = 0; k <= r.order_; ++k) r.c_[k] /= s;
        return r;
    }
    friend BasicJet operator/(T s, const BasicJet& a) { return constant(s, a.order_) / a; }

    friend BasicJet exp(const BasicJet& a) {
        BasicJet r(a.order_);
        r.c_[0] = std::exp(a.c_[0]);
        for (int k = 1; k <= a.order_; ++k) {
            T s = T(0);
            for (int i = 1; i <= k; ++i) s += T(i) * a.c_[i] * r.c_[k - i];
            r.c_[k] = s / T(k);
        }
        return r;
    }

    friend BasicJet sin(const BasicJet& a) { return sin_cos(a).first; }
    friend BasicJet cos(const BasicJet& a) { return sin_cos(a).second; }
    friend BasicJet sinh(const BasicJet& a) { return sinh_cosh(a).first; }
    friend BasicJet cosh(const BasicJet& a) { return sinh_cosh(a).second; }

    friend BasicJet sqrt(const BasicJet& a) {
        if (a.c_[0] < T(0)) throw DomainError("sqrt of negative value");
        if (a.c_[0] == T(0) && a.order_ > 0) throw DomainError("sqrt is not differentiable at zero");
        BasicJet r(a.order_);
        r.c_[0] = std::sqrt(a.c_[0]);
        for (int k = 1; k <= a.order_; ++k) {
            T s = a.c_[k];
            for (int i = 1; i < k; ++i) s -= r.c_[i] * r.c_[k - i];
            r.c_[k] = s / (T(2) * r.c_[0]);
        }
        return r;
    }

    /// Integer power by repeated squaring; negative exponents divide.
    friend BasicJet pow(const BasicJet& a, int n) {
        if (n < 0) return T(1) / pow(a, -n);
        BasicJet result = constant(T(1), a.order_);
        BasicJet base = a;
        while (n > 0) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return result;
    }

private:
    explicit BasicJet(int order) : order_(order) {
        if (order < 0 || order > kMaxJetOrder)
            throw InvalidInput("jet order must lie in [0, " + std::to_string(kMaxJetOrder) + "]");
    }

    static std::pair<BasicJet, BasicJet> sin_cos(const BasicJet& a) {
        BasicJet s(a.order_), c(a.order_);
        s.c_[0] = std::sin(a.c_[0]);
        c.c_[0] = std::cos(a.c_[0]);
        for (int k = 1; k <= a.order_; ++k) {
            T ss = T(0), cc = T(0);
            for (int i = 1; i <= k; ++i) {
                ss += T(i) * a.c_[i] * c.c_[k - i];
                cc -= T(i) * a.c_[i] * s.c_[k - i];
            }
            s.c_[k] = ss / T(k);
            c.c_[k] = cc / T(k);
        }
        return {s, c};
    }

    static std::pair<BasicJet, BasicJet> sinh_cosh(const BasicJet& a) {
        BasicJet s(a.order_), c(a.order_);
        s.c_[0] = std::sinh(a.c_[0]);
        c.c_[0] = std::cosh(a.c_[0]);
        for (int k = 1; k <= a.order_; ++k) {
            T ss = T(0), cc = T(0);
            for (int i = 1; i <= k; ++i) {
                ss += T(i) * a.c_[i] * c.c_[k - i];
                cc += T(i) * a.c_[i] * s.c_[k - i];
            }
            s.c_[k] = ss / T(k);
            c.c_[k] = cc / T(k);
        }
        return {s, c};
    }

    int order_ = 0;
    std::array<T, kMaxJetOrder + 1> c_{};
};

using Jet = BasicJet<double>;

} // namespace nullcone
