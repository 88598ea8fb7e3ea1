#ifndef DKP_MAT_HPP
#define DKP_MAT_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace dkp {

// Dense fixed-size square matrix. Element type stays generic so the flat
// beta-matrix algebra can run in exact integer arithmetic.
template <typename T, int N>
struct Mat {
    std::array<T, N * N> a{};

    static constexpr int size = N;

    constexpr T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * N + j]; }
    constexpr const T& operator()(int i, int j) const {
        return a[static_cast<std::size_t>(i) * N + j];
    }

    static constexpr Mat zero() { return Mat{}; }

    static constexpr Mat identity() {
        Mat m{};
        for (int i = 0; i < N; ++i) m(i, i) = T{1};
        return m;
    }

    friend constexpr Mat operator+(const Mat& x, const Mat& y) {
        Mat r{};
        for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
        return r;
    }

    friend constexpr Mat operator-(const Mat& x, const Mat& y) {
        Mat r{};
        for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
        return r;
    }

    friend constexpr Mat operator*(const Mat& x, const Mat& y) {
        Mat r{};
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                const T xik = x(i, k);
                if (xik == T{}) continue;
                for (int j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    friend constexpr Mat operator*(T s, const Mat& x) {
        Mat r{};
        for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = s * x.a[i];
        return r;
    }

    friend constexpr bool operator==(const Mat& x, const Mat& y) { return x.a == y.a; }
};

template <typename T, int N>
constexpr Mat<T, N> commutator(const Mat<T, N>& x, const Mat<T, N>& y) {
    return x * y - y * x;
}

template <typename T, int N>
double max_abs(const Mat<T, N>& x) {
    double m = 0.0;
    for (const T& v : x.a) m = std::max(m, std::abs(static_cast<double>(v)));
    return m;
}

template <typename T, int N>
double max_abs_diff(const Mat<T, N>& x, const Mat<T, N>& y) {
    return max_abs(x - y);
}

template <typename T, int N>
constexpr Mat<double, N> to_double(const Mat<T, N>& x) {
    Mat<double, N> r{};
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = static_cast<double>(x.a[i]);
    return r;
}

using Mat5 = Mat<double, 5>;
using Mat5i = Mat<long long, 5>;
using Mat4 = Mat<double, 4>;

}  // namespace dkp

#endif
