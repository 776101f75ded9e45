#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fdc {

/// Node-range selectors for discrete 1D domains:
/// Full = d_N (l = 0..N), TrimRight drops the last node (l = 0..N-1),
/// Interior drops both ends (l = 1..N-1).
enum class Domain { Full, TrimRight, Interior };

/// Values sampled on a uniform 1D grid of spacing h, nodes l = 0..N.
struct GridFunction1D {
    std::vector<double> v;
    double h = 0.0;

    GridFunction1D() = default;
    GridFunction1D(int node_count, double spacing, double fill = 0.0)
        : v(static_cast<std::size_t>(node_count), fill), h(spacing) {
        if (node_count < 1 || spacing <= 0.0)
            throw std::invalid_argument("GridFunction1D: need >=1 node and h > 0");
    }

    int n() const { return static_cast<int>(v.size()) - 1; }  // N
    double& operator[](int l) { return v[static_cast<std::size_t>(l)]; }
    double operator[](int l) const { return v[static_cast<std::size_t>(l)]; }
};

/// Values sampled on a uniform square grid of spacing h, nodes (l,m) in 0..N x 0..N.
/// Storage is row-major with l (the x index) major.
struct GridFunction2D {
    std::vector<double> v;
    double h = 0.0;
    int nn = 0;  // N

    GridFunction2D() = default;
    GridFunction2D(int n_per_axis, double spacing, double fill = 0.0)
        : v(static_cast<std::size_t>(n_per_axis + 1) * static_cast<std::size_t>(n_per_axis + 1),
            fill),
          h(spacing),
          nn(n_per_axis) {
        if (n_per_axis < 1 || spacing <= 0.0)
            throw std::invalid_argument("GridFunction2D: need N >= 1 and h > 0");
    }

    int n() const { return nn; }
    double& at(int l, int m) {
        return v[static_cast<std::size_t>(l) * static_cast<std::size_t>(nn + 1) +
                 static_cast<std::size_t>(m)];
    }
    double at(int l, int m) const {
        return v[static_cast<std::size_t>(l) * static_cast<std::size_t>(nn + 1) +
                 static_cast<std::size_t>(m)];
    }
};

inline void require_same_shape(const GridFunction1D& a, const GridFunction1D& b) {
    if (a.v.size() != b.v.size() || a.h != b.h)
        throw std::invalid_argument("grid function shape mismatch (1D)");
}

inline void require_same_shape(const GridFunction2D& a, const GridFunction2D& b) {
    if (a.nn != b.nn || a.h != b.h)
        throw std::invalid_argument("grid function shape mismatch (2D)");
}

}  // namespace fdc
