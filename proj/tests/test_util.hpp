#pragma once

// Shared helpers for the test suites: brute-force oracles kept independent
// of the library's permute/reshape/GEMM path, plus diff metrics.

#include <cstdint>
#include <vector>

#include "mgrow/tensor.hpp"

namespace testutil {

template <typename T>
double max_abs_diff(const mgrow::Tensor<T>& a, const mgrow::Tensor<T>& b) {
  if (a.shape() != b.shape()) return 1e300;
  double m = 0.0;
  for (int64_t i = 0; i < a.numel(); ++i)
    m = std::max(m, std::abs(static_cast<double>(a[i]) - static_cast<double>(b[i])));
  return m;
}

// max_i |a_i - b_i| / max(1, max_i |b_i|)
template <typename T>
double max_rel_diff(const mgrow::Tensor<T>& a, const mgrow::Tensor<T>& b) {
  if (a.shape() != b.shape()) return 1e300;
  double scale = 1.0;
  for (int64_t i = 0; i < b.numel(); ++i)
    scale = std::max(scale, std::abs(static_cast<double>(b[i])));
  return max_abs_diff(a, b) / scale;
}

template <typename T>
bool bitwise_equal(const mgrow::Tensor<T>& a, const mgrow::Tensor<T>& b) {
  if (a.shape() != b.shape()) return false;
  for (int64_t i = 0; i < a.numel(); ++i)
    if (std::memcmp(&a[i], &b[i], sizeof(T)) != 0) return false;
  return true;
}

// Literal nested-loop evaluation of the contraction index sum. Every output
// entry is a sum over all bound-index combinations of products; no reshaping
// or matrix multiplication is involved, so this is an independent oracle for
// mgrow::contract.
template <typename T>
mgrow::Tensor<T> oracle_contract(const mgrow::Tensor<T>& a,
                                 const std::vector<int>& modes_a,
                                 const mgrow::Tensor<T>& b,
                                 const std::vector<int>& modes_b) {
  using mgrow::Shape;
  std::vector<bool> bound_a(a.order(), false), bound_b(b.order(), false);
  for (int m : modes_a) bound_a[m] = true;
  for (int m : modes_b) bound_b[m] = true;
  std::vector<int> free_a, free_b;
  for (int d = 0; d < a.order(); ++d)
    if (!bound_a[d]) free_a.push_back(d);
  for (int d = 0; d < b.order(); ++d)
    if (!bound_b[d]) free_b.push_back(d);

  Shape out_shape;
  for (int d : free_a) out_shape.push_back(a.dim(d));
  for (int d : free_b) out_shape.push_back(b.dim(d));
  mgrow::Tensor<T> out(out_shape);

  Shape bound_dims;
  for (int m : modes_a) bound_dims.push_back(a.dim(m));
  const int64_t n_bound = mgrow::shape_numel(bound_dims);
  const auto sa = mgrow::row_major_strides(a.shape());
  const auto sb = mgrow::row_major_strides(b.shape());

  std::vector<int64_t> out_idx(out_shape.size(), 0);
  for (int64_t of = 0; of < out.numel(); ++of) {
    // decode output multi-index
    int64_t rem = of;
    for (int d = static_cast<int>(out_shape.size()) - 1; d >= 0; --d) {
      out_idx[d] = rem % out_shape[d];
      rem /= out_shape[d];
    }
    double acc = 0.0;
    for (int64_t bf = 0; bf < n_bound; ++bf) {
      int64_t remb = bf;
      std::vector<int64_t> bidx(bound_dims.size(), 0);
      for (int d = static_cast<int>(bound_dims.size()) - 1; d >= 0; --d) {
        bidx[d] = remb % bound_dims[d];
        remb /= bound_dims[d];
      }
      int64_t fa = 0, fb = 0;
      for (size_t d = 0; d < free_a.size(); ++d)
        fa += out_idx[d] * sa[free_a[d]];
      for (size_t p = 0; p < modes_a.size(); ++p) fa += bidx[p] * sa[modes_a[p]];
      for (size_t d = 0; d < free_b.size(); ++d)
        fb += out_idx[free_a.size() + d] * sb[free_b[d]];
      for (size_t p = 0; p < modes_b.size(); ++p) fb += bidx[p] * sb[modes_b[p]];
      acc += static_cast<double>(a[fa]) * static_cast<double>(b[fb]);
    }
    out[of] = static_cast<T>(acc);
  }
  return out;
}

}  // namespace testutil
