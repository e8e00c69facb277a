#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "flowext/errors.hpp"
#include "flowext/network.hpp"

namespace flowext {

// Sorted, duplicate-free set of points of one dimension. Equality is exact.
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(std::size_t dimension, std::vector<Point> points = {})
      : dimension_(dimension), points_(std::move(points)) {
    for (const Point& p : points_) {
      if (p.size() != dimension_) {
        throw InputError("point of length " + std::to_string(p.size()) + " in a set of dimension " +
                         std::to_string(dimension_));
      }
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const Point& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

  bool operator==(const PointSet& other) const {
    return dimension_ == other.dimension_ && points_ == other.points_;
  }

 private:
  std::size_t dimension_ = 0;
  std::vector<Point> points_;
};

}  // namespace flowext
