#pragma once

#include <span>
#include <string>
#include <vector>

namespace charlab {

using Vector = std::vector<double>;

// Row-major dense matrix of 64-bit floats. All kernels in this project
// run on the 64-bit reference path with a fixed summation order, so a
// given input always produces bit-identical output.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), 0.0) {}

  double& at(int r, int c) { return data[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
  double* row(int r) { return data.data() + static_cast<size_t>(r) * static_cast<size_t>(cols); }
  const double* row(int r) const { return data.data() + static_cast<size_t>(r) * static_cast<size_t>(cols); }
  size_t size() const { return data.size(); }
  void fill(double v) { std::fill(data.begin(), data.end(), v); }
};

}  // namespace charlab
