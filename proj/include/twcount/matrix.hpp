#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "twcount/bigint.hpp"
#include "twcount/errors.hpp"

namespace twc {

// Dense square matrix of arbitrary-precision integers, row-major.
class SquareIntMatrix {
 public:
  SquareIntMatrix() = default;

  explicit SquareIntMatrix(std::size_t n) : n_(n), a_(n * n) {}

  SquareIntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    n_ = rows.size();
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_)
        fail(errc::invalid_argument, "matrix rows must all have length n");
      for (long v : row) a_.emplace_back(v);
    }
  }

  std::size_t size() const { return n_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool operator==(const SquareIntMatrix& o) const {
    return n_ == o.n_ && a_ == o.a_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Int> a_;
};

}  // namespace twc
