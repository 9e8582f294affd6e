#pragma once

// Dense N-order tensors with row-major flat storage (last index fastest)
// and the generic binary contraction primitive. Scalars are order-0 tensors.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mgrow/errors.hpp"
#include "mgrow/rng.hpp"

namespace mgrow {

using Shape = std::vector<int64_t>;

inline int64_t shape_numel(const Shape& shape) {
  int64_t n = 1;
  for (int64_t d : shape) n *= d;
  return n;
}

inline std::string shape_str(const Shape& shape) {
  std::string s = "(";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(shape[i]);
  }
  return s + ")";
}

inline std::vector<int64_t> row_major_strides(const Shape& shape) {
  std::vector<int64_t> strides(shape.size(), 1);
  for (int d = static_cast<int>(shape.size()) - 2; d >= 0; --d)
    strides[d] = strides[d + 1] * shape[d + 1];
  return strides;
}

template <typename T>
class Tensor {
 public:
  // Order-0 scalar, value 0.
  Tensor() : data_(1, T(0)) {}

  explicit Tensor(Shape shape) : shape_(std::move(shape)) {
    validate_shape();
    data_.assign(shape_numel(shape_), T(0));
  }

  Tensor(Shape shape, std::vector<T> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    validate_shape();
    if (static_cast<int64_t>(data_.size()) != shape_numel(shape_))
      throw ShapeError("Tensor: data length " + std::to_string(data_.size()) +
                       " does not match shape " + shape_str(shape_));
  }

  static Tensor scalar(T v) {
    Tensor t;
    t.data_[0] = v;
    return t;
  }

  const Shape& shape() const { return shape_; }
  int order() const { return static_cast<int>(shape_.size()); }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  int64_t dim(int mode) const { return shape_.at(mode); }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }
  T* ptr() { return data_.data(); }
  const T* ptr() const { return data_.data(); }

  T& operator[](int64_t flat) { return data_[flat]; }
  const T& operator[](int64_t flat) const { return data_[flat]; }

  T& at(std::initializer_list<int64_t> idx) { return data_[flat_index(idx)]; }
  const T& at(std::initializer_list<int64_t> idx) const {
    return data_[flat_index(idx)];
  }

  int64_t flat_index(std::initializer_list<int64_t> idx) const {
    if (static_cast<int>(idx.size()) != order())
      throw ShapeError("Tensor::at: expected " + std::to_string(order()) +
                       " indices, got " + std::to_string(idx.size()));
    int64_t flat = 0;
    int d = 0;
    for (int64_t i : idx) {
      flat = flat * shape_[d] + i;
      ++d;
    }
    return flat;
  }

  template <typename U>
  Tensor<U> astype() const {
    std::vector<U> out(data_.size());
    for (size_t i = 0; i < data_.size(); ++i) out[i] = static_cast<U>(data_[i]);
    return Tensor<U>(shape_, std::move(out));
  }

 private:
  void validate_shape() const {
    for (int64_t d : shape_)
      if (d < 1)
        throw ShapeError("Tensor: every dimension must be >= 1, got " +
                         shape_str(shape_));
  }

  Shape shape_;
  std::vector<T> data_;
};

// Super-diagonal tensor: 1 where all indices coincide, 0 elsewhere.
struct SuperDiagonal {
  int order;
  int64_t dim;
};

template <typename T>
Tensor<T> zeros(const Shape& shape) {
  return Tensor<T>(shape);
}

template <typename T>
Tensor<T> full(const Shape& shape, T v) {
  Tensor<T> t(shape);
  std::fill(t.data().begin(), t.data().end(), v);
  return t;
}

// Deterministic i.i.d. N(0, scale^2) fill; variates come from CounterRng's
// documented SplitMix64 + Box-Muller stream, so (shape, seed, scale) fully
// determines the bytes. Values are generated in double and cast to T.
template <typename T>
Tensor<T> randn(const Shape& shape, uint64_t seed, double scale = 1.0) {
  if (!(scale > 0.0)) throw ShapeError("randn: scale must be > 0");
  Tensor<T> t(shape);
  CounterRng rng(seed);
  for (auto& v : t.data()) v = static_cast<T>(rng.next_normal() * scale);
  return t;
}

template <typename T>
Tensor<T> materialize_superdiag(const SuperDiagonal& s) {
  if (s.order < 1) throw ShapeError("SuperDiagonal: order must be >= 1");
  if (s.dim < 1) throw ShapeError("SuperDiagonal: dim must be >= 1");
  Tensor<T> t(Shape(s.order, s.dim));
  const auto strides = row_major_strides(t.shape());
  int64_t step = 0;
  for (int64_t k : strides) step += k;
  for (int64_t i = 0; i < s.dim; ++i) t[i * step] = T(1);
  return t;
}

template <typename T>
double frobenius_norm(const Tensor<T>& a) {
  double sq = 0.0;
  for (T v : a.data()) sq += static_cast<double>(v) * static_cast<double>(v);
  return std::sqrt(sq);
}

template <typename T>
Tensor<T> permute(const Tensor<T>& a, const std::vector<int>& perm) {
  const int n = a.order();
  if (static_cast<int>(perm.size()) != n)
    throw ShapeError("permute: perm length " + std::to_string(perm.size()) +
                     " != order " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p])
      throw ShapeError("permute: perm is not a permutation of 0.." +
                       std::to_string(n - 1));
    seen[p] = true;
  }
  if (std::is_sorted(perm.begin(), perm.end())) return a;

  Shape out_shape(n);
  for (int d = 0; d < n; ++d) out_shape[d] = a.dim(perm[d]);
  Tensor<T> out(out_shape);

  const auto in_strides = row_major_strides(a.shape());
  std::vector<int64_t> stride_of_out_mode(n);
  for (int d = 0; d < n; ++d) stride_of_out_mode[d] = in_strides[perm[d]];

  std::vector<int64_t> idx(n, 0);
  const int64_t total = out.numel();
  int64_t src = 0;
  for (int64_t flat = 0; flat < total; ++flat) {
    out[flat] = a[src];
    for (int d = n - 1; d >= 0; --d) {
      src += stride_of_out_mode[d];
      if (++idx[d] < out_shape[d]) break;
      src -= stride_of_out_mode[d] * out_shape[d];
      idx[d] = 0;
    }
  }
  return out;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

template <typename T>
Tensor<T> reshape(const Tensor<T>& a, Shape shape) {
  if (shape_numel(shape) != a.numel())
    throw ShapeError("reshape: " + shape_str(a.shape()) + " -> " +
                     shape_str(shape) + " changes element count");
  return Tensor<T>(std::move(shape), a.data());
}

namespace detail {

// C(MxN) = A(MxK) * B(KxN), all row-major contiguous.
template <typename T>
void gemm(const T* a, const T* b, T* c, int64_t m, int64_t k, int64_t n) {
  using Mat =
      Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const Mat> ma(a, m, k);
  Eigen::Map<const Mat> mb(b, k, n);
  Eigen::Map<Mat> mc(c, m, n);
  mc.noalias() = ma * mb;
}

inline void validate_contract_modes(const Shape& shape,
                                    const std::vector<int>& modes,
                                    const char* side) {
  std::vector<bool> seen(shape.size(), false);
  for (int m : modes) {
    if (m < 0 || m >= static_cast<int>(shape.size()))
      throw ShapeError(std::string("contract: mode ") + std::to_string(m) +
                       " out of range for " + side + " of shape " +
                       shape_str(shape));
    if (seen[m])
      throw ShapeError(std::string("contract: duplicate mode ") +
                       std::to_string(m) + " on " + side);
    seen[m] = true;
  }
}

}  // namespace detail

// Binary contraction: sums over the paired bound modes. Result modes are the
// free modes of `a` (ascending) followed by the free modes of `b` (ascending).
// Internally permute -> reshape -> GEMM; the defining index sum is checked
// against a nested-loop oracle in the tests.
template <typename T>
Tensor<T> contract(const Tensor<T>& a, const std::vector<int>& modes_a,
                   const Tensor<T>& b, const std::vector<int>& modes_b) {
  if (modes_a.size() != modes_b.size())
    throw ShapeError("contract: mode lists differ in length");
  detail::validate_contract_modes(a.shape(), modes_a, "lhs");
  detail::validate_contract_modes(b.shape(), modes_b, "rhs");
  for (size_t p = 0; p < modes_a.size(); ++p)
    if (a.dim(modes_a[p]) != b.dim(modes_b[p]))
      throw ShapeError("contract: bound pair " + std::to_string(p) +
                       " mismatches, lhs " + shape_str(a.shape()) + " mode " +
                       std::to_string(modes_a[p]) + " vs rhs " +
                       shape_str(b.shape()) + " mode " +
                       std::to_string(modes_b[p]));

  std::vector<bool> bound_a(a.order(), false), bound_b(b.order(), false);
  for (int m : modes_a) bound_a[m] = true;
  for (int m : modes_b) bound_b[m] = true;

  std::vector<int> free_a, free_b;
  for (int d = 0; d < a.order(); ++d)
    if (!bound_a[d]) free_a.push_back(d);
  for (int d = 0; d < b.order(); ++d)
    if (!bound_b[d]) free_b.push_back(d);

  std::vector<int> perm_a = free_a;
  perm_a.insert(perm_a.end(), modes_a.begin(), modes_a.end());
  std::vector<int> perm_b = modes_b;
  perm_b.insert(perm_b.end(), free_b.begin(), free_b.end());

  const Tensor<T> ap = permute(a, perm_a);
  const Tensor<T> bp = permute(b, perm_b);

  int64_t m = 1, k = 1, n = 1;
  Shape out_shape;
  for (int d : free_a) {
    m *= a.dim(d);
    out_shape.push_back(a.dim(d));
  }
  for (int d : modes_a) k *= a.dim(d);
  for (int d : free_b) {
    n *= b.dim(d);
    out_shape.push_back(b.dim(d));
  }

  Tensor<T> out(out_shape);
  detail::gemm(ap.ptr(), bp.ptr(), out.ptr(), m, k, n);
  return out;
}

// ---- elementwise arithmetic used throughout the training paths ----

// `b` must have the same shape as `a` or a shape equal to a trailing suffix
// of a.shape(); in the suffix case it is broadcast over the leading modes.
namespace detail {

template <typename T>
int64_t broadcast_repeat(const Tensor<T>& a, const Tensor<T>& b,
                         const char* op) {
  const int na = a.order(), nb = b.order();
  if (nb > na)
    throw ShapeError(std::string(op) + ": rhs order exceeds lhs order");
  for (int d = 0; d < nb; ++d)
    if (b.dim(d) != a.dim(na - nb + d))
      throw ShapeError(std::string(op) + ": rhs shape " + shape_str(b.shape()) +
                       " is not a suffix of lhs shape " + shape_str(a.shape()));
  return a.numel() / std::max<int64_t>(b.numel(), 1);
}

}  // namespace detail

template <typename T, typename F>
Tensor<T> zip_suffix(const Tensor<T>& a, const Tensor<T>& b, F&& f,
                     const char* op) {
  detail::broadcast_repeat(a, b, op);
  Tensor<T> out(a.shape());
  const int64_t bn = b.numel();
  for (int64_t i = 0; i < a.numel(); ++i) out[i] = f(a[i], b[i % bn]);
  return out;
}

template <typename T>
Tensor<T> add(const Tensor<T>& a, const Tensor<T>& b) {
  return zip_suffix(a, b, [](T x, T y) { return x + y; }, "add");
}

template <typename T>
Tensor<T> sub(const Tensor<T>& a, const Tensor<T>& b) {
  return zip_suffix(a, b, [](T x, T y) { return x - y; }, "sub");
}

template <typename T>
Tensor<T> mul(const Tensor<T>& a, const Tensor<T>& b) {
  return zip_suffix(a, b, [](T x, T y) { return x * y; }, "mul");
}

template <typename T>
Tensor<T> scale(const Tensor<T>& a, double s) {
  Tensor<T> out(a.shape());
  for (int64_t i = 0; i < a.numel(); ++i)
    out[i] = static_cast<T>(a[i] * static_cast<T>(s));
  return out;
}

// Sum rhs-gradient style reductions: collapse leading modes so the result has
// `suffix_order` trailing modes of `a`.
template <typename T>
Tensor<T> sum_to_suffix(const Tensor<T>& a, const Shape& suffix_shape) {
  const int64_t bn = shape_numel(suffix_shape);
  Tensor<T> out(suffix_shape);
  for (int64_t i = 0; i < a.numel(); ++i) out[i % bn] += a[i];
  return out;
}

template <typename T>
double sum_all(const Tensor<T>& a) {
  double s = 0.0;
  for (T v : a.data()) s += static_cast<double>(v);
  return s;
}

// NumPy-style matmul over the two trailing modes. The rhs is either 2-D
// (shared across all leading modes of the lhs) or has leading modes equal to
// the lhs's.
template <typename T>
Tensor<T> matmul(const Tensor<T>& a, const Tensor<T>& b) {
  if (a.order() < 2 || b.order() < 2)
    throw ShapeError("matmul: operands must have order >= 2");
  const int64_t m = a.dim(a.order() - 2), k = a.dim(a.order() - 1);
  const int64_t kb = b.dim(b.order() - 2), n = b.dim(b.order() - 1);
  if (k != kb)
    throw ShapeError("matmul: inner dims mismatch " + shape_str(a.shape()) +
                     " x " + shape_str(b.shape()));

  Shape lead(a.shape().begin(), a.shape().end() - 2);
  const int64_t batches = shape_numel(lead);
  const bool rhs_shared = (b.order() == 2);
  if (!rhs_shared) {
    Shape lead_b(b.shape().begin(), b.shape().end() - 2);
    if (lead_b != lead)
      throw ShapeError("matmul: leading dims mismatch " +
                       shape_str(a.shape()) + " x " + shape_str(b.shape()));
  }

  Shape out_shape = lead;
  out_shape.push_back(m);
  out_shape.push_back(n);
  Tensor<T> out(out_shape);
  if (rhs_shared) {
    detail::gemm(a.ptr(), b.ptr(), out.ptr(), batches * m, k, n);
  } else {
    for (int64_t i = 0; i < batches; ++i)
      detail::gemm(a.ptr() + i * m * k, b.ptr() + i * k * n,
                   out.ptr() + i * m * n, m, k, n);
  }
  return out;
}

template <typename T>
Tensor<T> transpose_last2(const Tensor<T>& a) {
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[a.order() - 2], perm[a.order() - 1]);
  return permute(a, perm);
}

// Subrange [start, start+len) along `mode`, other modes untouched.
template <typename T>
Tensor<T> narrow(const Tensor<T>& a, int mode, int64_t start, int64_t len) {
  if (mode < 0 || mode >= a.order())
    throw ShapeError("narrow: mode out of range");
  if (start < 0 || len < 1 || start + len > a.dim(mode))
    throw ShapeError("narrow: range [" + std::to_string(start) + "," +
                     std::to_string(start + len) + ") invalid for dim " +
                     std::to_string(a.dim(mode)));
  Shape out_shape = a.shape();
  out_shape[mode] = len;
  Tensor<T> out(out_shape);

  int64_t outer = 1, inner = 1;
  for (int d = 0; d < mode; ++d) outer *= a.dim(d);
  for (int d = mode + 1; d < a.order(); ++d) inner *= a.dim(d);
  const int64_t in_block = a.dim(mode) * inner;
  const int64_t out_block = len * inner;
  for (int64_t o = 0; o < outer; ++o)
    std::copy_n(a.ptr() + o * in_block + start * inner, out_block,
                out.ptr() + o * out_block);
  return out;
}

// Scatter `g` (a narrow of shape like `g`) back into a zero tensor shaped
// `full_shape`; adjoint of narrow.
template <typename T>
Tensor<T> narrow_scatter(const Tensor<T>& g, const Shape& full_shape, int mode,
                         int64_t start) {
  Tensor<T> out(full_shape);
  int64_t outer = 1, inner = 1;
  for (int d = 0; d < mode; ++d) outer *= full_shape[d];
  for (size_t d = mode + 1; d < full_shape.size(); ++d) inner *= full_shape[d];
  const int64_t len = g.dim(mode);
  const int64_t out_block = full_shape[mode] * inner;
  const int64_t in_block = len * inner;
  for (int64_t o = 0; o < outer; ++o)
    std::copy_n(g.ptr() + o * in_block, in_block,
                out.ptr() + o * out_block + start * inner);
  return out;
}

template <typename T>
Tensor<T> concat(const std::vector<Tensor<T>>& parts, int mode) {
  if (parts.empty()) throw ShapeError("concat: no operands");
  const int n = parts[0].order();
  if (mode < 0 || mode >= n) throw ShapeError("concat: mode out of range");
  Shape out_shape = parts[0].shape();
  int64_t total = 0;
  for (const auto& p : parts) {
    if (p.order() != n) throw ShapeError("concat: order mismatch");
    for (int d = 0; d < n; ++d)
      if (d != mode && p.dim(d) != out_shape[d])
        throw ShapeError("concat: shape mismatch off the concat mode");
    total += p.dim(mode);
  }
  out_shape[mode] = total;
  Tensor<T> out(out_shape);

  int64_t outer = 1, inner = 1;
  for (int d = 0; d < mode; ++d) outer *= out_shape[d];
  for (int d = mode + 1; d < n; ++d) inner *= out_shape[d];
  const int64_t out_block = total * inner;
  int64_t offset = 0;
  for (const auto& p : parts) {
    const int64_t in_block = p.dim(mode) * inner;
    for (int64_t o = 0; o < outer; ++o)
      std::copy_n(p.ptr() + o * in_block, in_block,
                  out.ptr() + o * out_block + offset);
    offset += in_block;
  }
  return out;
}

template <typename T>
bool all_finite(const Tensor<T>& a) {
  for (T v : a.data())
    if (!std::isfinite(static_cast<double>(v))) return false;
  return true;
}

}  // namespace mgrow
