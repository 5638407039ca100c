#pragma once

#include <cassert>
#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace plasmodium {

/// Width and height of a lattice in cells.
struct GridDims {
  int width = 0;
  int height = 0;

  [[nodiscard]] std::size_t cell_count() const noexcept {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  [[nodiscard]] std::size_t index(int col, int row) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(col);
  }
  friend bool operator==(const GridDims&, const GridDims&) = default;
};

/// Smallest lattice extent the 5x5 kernel fits in.
inline constexpr int kMinLatticeExtent = 5;

/// Throws ConfigError unless both extents are at least kMinLatticeExtent.
void validate_lattice_dims(const GridDims& dims);

/// Row-major dense 2D array. Column index is x, row index is y.
template <typename T>
class Grid {
 public:
  Grid() = default;
  explicit Grid(GridDims dims, T fill = T{})
      : dims_(dims), cells_(dims.cell_count(), fill) {}

  [[nodiscard]] const GridDims& dims() const noexcept { return dims_; }
  [[nodiscard]] int width() const noexcept { return dims_.width; }
  [[nodiscard]] int height() const noexcept { return dims_.height; }
  [[nodiscard]] std::size_t size() const noexcept { return cells_.size(); }

  T& at(int col, int row) noexcept {
    assert(col >= 0 && col < dims_.width && row >= 0 && row < dims_.height);
    return cells_[dims_.index(col, row)];
  }
  const T& at(int col, int row) const noexcept {
    assert(col >= 0 && col < dims_.width && row >= 0 && row < dims_.height);
    return cells_[dims_.index(col, row)];
  }
  T& operator[](std::size_t i) noexcept { return cells_[i]; }
  const T& operator[](std::size_t i) const noexcept { return cells_[i]; }

  [[nodiscard]] std::span<T> cells() noexcept { return cells_; }
  [[nodiscard]] std::span<const T> cells() const noexcept { return cells_; }

  void fill(const T& value) { std::fill(cells_.begin(), cells_.end(), value); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  GridDims dims_{};
  std::vector<T> cells_;
};

}  // namespace plasmodium
