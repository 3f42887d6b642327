#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "turingflow/errors.hpp"

namespace turingflow {

/// Flat row-major 2D array. Index (i, j) maps to data[j*nx + i], so i is the
/// fast (x) direction. Row j = 0 is the bottom of the domain.
template <typename T>
class Field2D {
public:
    Field2D() = default;

    Field2D(int nx, int ny, T value = T{}) : nx_(nx), ny_(ny) {
        if (nx <= 0 || ny <= 0) {
            throw InvalidArgument("Field2D: dimensions must be positive");
        }
        data_.assign(static_cast<std::size_t>(nx) * ny, value);
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    std::size_t size() const { return data_.size(); }

    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }

    T& operator()(int i, int j) { return data_[idx(i, j)]; }
    const T& operator()(int i, int j) const { return data_[idx(i, j)]; }

    T& operator[](std::size_t k) { return data_[k]; }
    const T& operator[](std::size_t k) const { return data_[k]; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }

    auto begin() { return data_.begin(); }
    auto end() { return data_.end(); }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    void fill(T value) { std::fill(data_.begin(), data_.end(), value); }

    template <typename U>
    bool same_shape(const Field2D<U>& other) const {
        return nx_ == other.nx() && ny_ == other.ny();
    }

    bool all_finite() const {
        if constexpr (std::is_floating_point_v<T>) {
            for (T v : data_) {
                if (!std::isfinite(v)) return false;
            }
        }
        return true;
    }

private:
    int nx_ = 0;
    int ny_ = 0;
    std::vector<T> data_;
};

/// Bilinear sample of a cell-centered field at fractional cell coordinates
/// (x, y measured in cells from the lower-left cell center). Clamped at the
/// edges so queries just outside the field stay valid.
template <typename T>
double bilinear_at(const Field2D<T>& f, double x, double y) {
    const double cx = std::clamp(x, 0.0, static_cast<double>(f.nx() - 1));
    const double cy = std::clamp(y, 0.0, static_cast<double>(f.ny() - 1));
    const int i0 = std::min(static_cast<int>(cx), f.nx() - 2 >= 0 ? f.nx() - 2 : 0);
    const int j0 = std::min(static_cast<int>(cy), f.ny() - 2 >= 0 ? f.ny() - 2 : 0);
    const int i1 = std::min(i0 + 1, f.nx() - 1);
    const int j1 = std::min(j0 + 1, f.ny() - 1);
    const double tx = cx - i0;
    const double ty = cy - j0;
    return (1.0 - tx) * (1.0 - ty) * f(i0, j0) + tx * (1.0 - ty) * f(i1, j0) +
           (1.0 - tx) * ty * f(i0, j1) + tx * ty * f(i1, j1);
}

}  // namespace turingflow
