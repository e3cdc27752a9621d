#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace fdtd2d {

/**
 * Dense 2D array with (i, j) indexing, i along x and j along y.
 * Storage is i-major: row i is a contiguous run of ny values, which keeps
 * the inner solver loops over j on contiguous memory.
 */
template <typename T>
class Grid2D {
public:
    Grid2D() = default;
    Grid2D(std::size_t nx, std::size_t ny, T fill = T{})
        : nx_(nx), ny_(ny), data_(nx * ny, fill) {}

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < nx_ && j < ny_);
        return data_[i * ny_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < nx_ && j < ny_);
        return data_[i * ny_ + j];
    }

    T* row(std::size_t i) { return data_.data() + i * ny_; }
    const T* row(std::size_t i) const { return data_.data() + i * ny_; }

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    std::size_t size() const { return data_.size(); }

    std::vector<T>& raw() { return data_; }
    const std::vector<T>& raw() const { return data_; }

    void fill(T value) { data_.assign(data_.size(), value); }

    bool same_shape(const Grid2D& other) const {
        return nx_ == other.nx_ && ny_ == other.ny_;
    }

private:
    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    std::vector<T> data_;
};

}  // namespace fdtd2d
