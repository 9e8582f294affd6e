#pragma once

// Tape-based reverse-mode differentiation over Tensor operations. A Tape
// captures one forward pass (define-by-run); backward() walks the nodes in
// reverse creation order, so gradients are bitwise deterministic for an
// identical tape. Tapes are single-threaded; run one per worker.

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "mgrow/tensor.hpp"

namespace mgrow {

template <typename T>
class Tape;

template <typename T>
struct Var {
  Tape<T>* tape = nullptr;
  int idx = -1;

  const Tensor<T>& value() const;
  // Gradient of the backward root w.r.t. this node; valid after backward().
  const Tensor<T>& grad() const;
  bool has_grad() const;
};

template <typename T>
class Tape {
 public:
  using BackFn = std::function<void(Tape&, const Tensor<T>&)>;

  // Leaf that never receives a gradient (inputs, frozen weights).
  Var<T> constant(Tensor<T> v) { return emplace(std::move(v), {}, nullptr, false, "const"); }

  // Trainable leaf; backward() accumulates into its grad slot.
  Var<T> param(Tensor<T> v) { return emplace(std::move(v), {}, nullptr, true, "param"); }

  Var<T> emplace(Tensor<T> value, std::vector<int> parents, BackFn back,
                 bool is_param, const char* op) {
    bool needs = is_param;
    for (int p : parents) needs = needs || nodes_[p].needs_grad;
    nodes_.push_back(Node{std::move(value), std::move(parents), std::move(back),
                          std::nullopt, needs, is_param, op});
    return Var<T>{this, static_cast<int>(nodes_.size()) - 1};
  }

  const Tensor<T>& value(int idx) const { return nodes_.at(idx).value; }
  const char* op(int idx) const { return nodes_.at(idx).op; }
  size_t size() const { return nodes_.size(); }

  bool has_grad(int idx) const { return nodes_.at(idx).grad.has_value(); }
  const Tensor<T>& grad(int idx) const {
    const auto& g = nodes_.at(idx).grad;
    if (!g) throw NumericError("Tape: node has no gradient (run backward first)");
    return *g;
  }

  void accumulate(int idx, const Tensor<T>& g) {
    Node& n = nodes_.at(idx);
    if (!n.needs_grad) return;
    if (g.shape() != n.value.shape())
      throw ShapeError("Tape: gradient shape " + shape_str(g.shape()) +
                       " != value shape " + shape_str(n.value.shape()));
    if (!n.grad) {
      n.grad = g;
    } else {
      auto& acc = n.grad->data();
      for (int64_t i = 0; i < g.numel(); ++i) acc[i] += g[i];
    }
  }

  void backward(Var<T> root) {
    if (root.tape != this) throw ShapeError("backward: root from another tape");
    Node& r = nodes_.at(root.idx);
    if (r.value.order() != 0)
      throw ShapeError("backward: root must be a scalar (order-0) node");
    accumulate(root.idx, Tensor<T>::scalar(T(1)));
    for (int i = root.idx; i >= 0; --i) {
      Node& n = nodes_[i];
      if (n.grad && n.back) n.back(*this, *n.grad);
    }
  }

  // Trainable-leaf gradients, keyed by node index. Leaves a root never
  // reached keep zero gradients here.
  std::map<int, Tensor<T>> param_grads() const {
    std::map<int, Tensor<T>> out;
    for (size_t i = 0; i < nodes_.size(); ++i) {
      if (!nodes_[i].is_param) continue;
      out.emplace(static_cast<int>(i), nodes_[i].grad
                                           ? *nodes_[i].grad
                                           : Tensor<T>(nodes_[i].value.shape()));
    }
    return out;
  }

 private:
  struct Node {
    Tensor<T> value;
    std::vector<int> parents;
    BackFn back;
    std::optional<Tensor<T>> grad;
    bool needs_grad;
    bool is_param;
    const char* op;
  };
  std::vector<Node> nodes_;
};

template <typename T>
const Tensor<T>& Var<T>::value() const {
  return tape->value(idx);
}
template <typename T>
const Tensor<T>& Var<T>::grad() const {
  return tape->grad(idx);
}
template <typename T>
bool Var<T>::has_grad() const {
  return tape->has_grad(idx);
}

namespace ad_detail {

template <typename T>
Tape<T>* same_tape(const Var<T>& a, const Var<T>& b) {
  if (a.tape != b.tape) throw ShapeError("autodiff: operands from different tapes");
  return a.tape;
}

}  // namespace ad_detail

// ---- structural primitives ----

template <typename T>
Var<T> add(Var<T> a, Var<T> b) {
  Tape<T>* t = ad_detail::same_tape(a, b);
  Tensor<T> v = add(a.value(), b.value());
  const Shape bshape = b.value().shape();
  const int pa = a.idx, pb = b.idx;
  return t->emplace(std::move(v), {pa, pb},
                    [pa, pb, bshape](Tape<T>& tp, const Tensor<T>& g) {
                      tp.accumulate(pa, g);
                      tp.accumulate(pb, sum_to_suffix(g, bshape));
                    },
                    false, "add");
}

template <typename T>
Var<T> sub(Var<T> a, Var<T> b) {
  Tape<T>* t = ad_detail::same_tape(a, b);
  Tensor<T> v = sub(a.value(), b.value());
  const Shape bshape = b.value().shape();
  const int pa = a.idx, pb = b.idx;
  return t->emplace(std::move(v), {pa, pb},
                    [pa, pb, bshape](Tape<T>& tp, const Tensor<T>& g) {
                      tp.accumulate(pa, g);
                      tp.accumulate(pb, scale(sum_to_suffix(g, bshape), -1.0));
                    },
                    false, "sub");
}

template <typename T>
Var<T> mul(Var<T> a, Var<T> b) {
  Tape<T>* t = ad_detail::same_tape(a, b);
  Tensor<T> v = mul(a.value(), b.value());
  const Shape bshape = b.value().shape();
  const int pa = a.idx, pb = b.idx;
  return t->emplace(std::move(v), {pa, pb},
                    [pa, pb, bshape](Tape<T>& tp, const Tensor<T>& g) {
                      tp.accumulate(pa, zip_suffix(g, tp.value(pb),
                                                   [](T x, T y) { return x * y; },
                                                   "mul-bwd"));
                      tp.accumulate(pb, sum_to_suffix(mul(g, tp.value(pa)), bshape));
                    },
                    false, "mul");
}

template <typename T>
Var<T> scalar_mul(Var<T> a, double s) {
  const int pa = a.idx;
  return a.tape->emplace(scale(a.value(), s), {pa},
                         [pa, s](Tape<T>& tp, const Tensor<T>& g) {
                           tp.accumulate(pa, scale(g, s));
                         },
                         false, "scalar_mul");
}

template <typename T>
Var<T> matmul(Var<T> a, Var<T> b) {
  Tape<T>* t = ad_detail::same_tape(a, b);
  Tensor<T> v = matmul(a.value(), b.value());
  const int pa = a.idx, pb = b.idx;
  const bool rhs_shared = (b.value().order() == 2);
  return t->emplace(
      std::move(v), {pa, pb},
      [pa, pb, rhs_shared](Tape<T>& tp, const Tensor<T>& g) {
        const Tensor<T>& av = tp.value(pa);
        const Tensor<T>& bv = tp.value(pb);
        tp.accumulate(pa, matmul(g, transpose_last2(bv)));
        if (rhs_shared) {
          const int64_t k = av.dim(av.order() - 1);
          const int64_t n = bv.dim(1);
          const int64_t rows = av.numel() / k;
          Tensor<T> a2 = reshape(av, {rows, k});
          Tensor<T> g2 = reshape(g, {rows, n});
          tp.accumulate(pb, contract(a2, {0}, g2, {0}));
        } else {
          tp.accumulate(pb, matmul(transpose_last2(av), g));
        }
      },
      false, "matmul");
}

namespace ad_detail {

inline int rank_in_sorted(const std::vector<int>& modes, int m) {
  int r = 0;
  for (int x : modes)
    if (x < m) ++r;
  return r;
}

}  // namespace ad_detail

// Tape version of the binary contraction. The adjoint of a contraction is
// itself a contraction of the upstream gradient with the other operand,
// permuted back into the operand's mode order.
template <typename T>
Var<T> contract(Var<T> a, const std::vector<int>& modes_a, Var<T> b,
                const std::vector<int>& modes_b) {
  Tape<T>* t = ad_detail::same_tape(a, b);
  Tensor<T> v = contract(a.value(), modes_a, b.value(), modes_b);

  std::vector<bool> bound_a(a.value().order(), false), bound_b(b.value().order(), false);
  for (int m : modes_a) bound_a[m] = true;
  for (int m : modes_b) bound_b[m] = true;
  std::vector<int> free_a, free_b;
  for (int d = 0; d < a.value().order(); ++d)
    if (!bound_a[d]) free_a.push_back(d);
  for (int d = 0; d < b.value().order(); ++d)
    if (!bound_b[d]) free_b.push_back(d);

  const int pa = a.idx, pb = b.idx;
  const int nfa = static_cast<int>(free_a.size());
  const int nfb = static_cast<int>(free_b.size());

  return t->emplace(
      std::move(v), {pa, pb},
      [pa, pb, modes_a, modes_b, free_a, free_b, nfa, nfb](Tape<T>& tp,
                                                           const Tensor<T>& g) {
        const Tensor<T>& av = tp.value(pa);
        const Tensor<T>& bv = tp.value(pb);

        {  // dL/da = contract(g over b's free modes, b) arranged to a's layout
          std::vector<int> g_modes(nfb);
          for (int i = 0; i < nfb; ++i) g_modes[i] = nfa + i;
          Tensor<T> r = contract(g, g_modes, bv, free_b);
          std::vector<int> perm(av.order());
          for (int i = 0; i < nfa; ++i) perm[free_a[i]] = i;
          for (size_t j = 0; j < modes_a.size(); ++j)
            perm[modes_a[j]] = nfa + ad_detail::rank_in_sorted(modes_b, modes_b[j]);
          tp.accumulate(pa, permute(r, perm));
        }
        {  // dL/db symmetric
          std::vector<int> g_modes(nfa);
          for (int i = 0; i < nfa; ++i) g_modes[i] = i;
          Tensor<T> r = contract(g, g_modes, av, free_a);
          std::vector<int> perm(bv.order());
          for (int i = 0; i < nfb; ++i) perm[free_b[i]] = i;
          for (size_t j = 0; j < modes_b.size(); ++j)
            perm[modes_b[j]] = nfb + ad_detail::rank_in_sorted(modes_a, modes_a[j]);
          tp.accumulate(pb, permute(r, perm));
        }
      },
      false, "contract");
}

template <typename T>
Var<T> permute(Var<T> a, const std::vector<int>& perm) {
  Tensor<T> v = permute(a.value(), perm);
  const int pa = a.idx;
  const std::vector<int> inv = inverse_permutation(perm);
  return a.tape->emplace(std::move(v), {pa},
                         [pa, inv](Tape<T>& tp, const Tensor<T>& g) {
                           tp.accumulate(pa, permute(g, inv));
                         },
                         false, "permute");
}

template <typename T>
Var<T> reshape(Var<T> a, Shape shape) {
  Tensor<T> v = reshape(a.value(), shape);
  const int pa = a.idx;
  const Shape orig = a.value().shape();
  return a.tape->emplace(std::move(v), {pa},
                         [pa, orig](Tape<T>& tp, const Tensor<T>& g) {
                           tp.accumulate(pa, reshape(g, orig));
                         },
                         false, "reshape");
}

template <typename T>
Var<T> narrow(Var<T> a, int mode, int64_t start, int64_t len) {
  Tensor<T> v = narrow(a.value(), mode, start, len);
  const int pa = a.idx;
  const Shape full = a.value().shape();
  return a.tape->emplace(std::move(v), {pa},
                         [pa, full, mode, start](Tape<T>& tp, const Tensor<T>& g) {
                           tp.accumulate(pa, narrow_scatter(g, full, mode, start));
                         },
                         false, "narrow");
}

// Drop `mode` at a fixed index; narrow + reshape.
template <typename T>
Var<T> select(Var<T> a, int mode, int64_t index) {
  Var<T> n = narrow(a, mode, index, 1);
  Shape s = n.value().shape();
  s.erase(s.begin() + mode);
  return reshape(n, s);
}

template <typename T>
Var<T> concat(const std::vector<Var<T>>& parts, int mode) {
  if (parts.empty()) throw ShapeError("concat: no operands");
  Tape<T>* t = parts[0].tape;
  std::vector<Tensor<T>> values;
  std::vector<int> idxs;
  std::vector<int64_t> lens;
  for (const auto& p : parts) {
    if (p.tape != t) throw ShapeError("concat: operands from different tapes");
    values.push_back(p.value());
    idxs.push_back(p.idx);
    lens.push_back(p.value().dim(mode));
  }
  Tensor<T> v = concat(values, mode);
  return t->emplace(std::move(v), idxs,
                    [idxs, lens, mode](Tape<T>& tp, const Tensor<T>& g) {
                      int64_t off = 0;
                      for (size_t i = 0; i < idxs.size(); ++i) {
                        tp.accumulate(idxs[i], narrow(g, mode, off, lens[i]));
                        off += lens[i];
                      }
                    },
                    false, "concat");
}

template <typename T>
Var<T> sum_all(Var<T> a) {
  Tensor<T> v = Tensor<T>::scalar(static_cast<T>(sum_all(a.value())));
  const int pa = a.idx;
  const Shape orig = a.value().shape();
  return a.tape->emplace(std::move(v), {pa},
                         [pa, orig](Tape<T>& tp, const Tensor<T>& g) {
                           tp.accumulate(pa, full(orig, g[0]));
                         },
                         false, "sum_all");
}

// ---- nonlinear primitives (softmax / gelu / layernorm over the last mode) --

template <typename T>
Var<T> softmax_last(Var<T> a) {
  const Tensor<T>& x = a.value();
  if (x.order() < 1) throw ShapeError("softmax_last: needs order >= 1");
  const int64_t cols = x.dim(x.order() - 1);
  const int64_t rows = x.numel() / cols;
  Tensor<T> y(x.shape());
  for (int64_t r = 0; r < rows; ++r) {
    const T* in = x.ptr() + r * cols;
    T* out = y.ptr() + r * cols;
    T mx = in[0];
    for (int64_t c = 1; c < cols; ++c) mx = std::max(mx, in[c]);
    double denom = 0;
    for (int64_t c = 0; c < cols; ++c) {
      out[c] = static_cast<T>(std::exp(static_cast<double>(in[c] - mx)));
      denom += out[c];
    }
    for (int64_t c = 0; c < cols; ++c) out[c] = static_cast<T>(out[c] / denom);
  }
  const int pa = a.idx;
  const int self = static_cast<int>(a.tape->size());
  return a.tape->emplace(std::move(y), {pa},
                         [pa, self, cols](Tape<T>& tp, const Tensor<T>& g) {
                           const Tensor<T>& yv = tp.value(self);
                           Tensor<T> dx(yv.shape());
                           const int64_t rows = yv.numel() / cols;
                           for (int64_t r = 0; r < rows; ++r) {
                             const T* yr = yv.ptr() + r * cols;
                             const T* gr = g.ptr() + r * cols;
                             T* dr = dx.ptr() + r * cols;
                             double dot = 0;
                             for (int64_t c = 0; c < cols; ++c)
                               dot += static_cast<double>(gr[c]) * yr[c];
                             for (int64_t c = 0; c < cols; ++c)
                               dr[c] = static_cast<T>(yr[c] * (gr[c] - dot));
                           }
                           tp.accumulate(pa, dx);
                         },
                         false, "softmax");
}

namespace ad_detail {
constexpr double kGeluC = 0.7978845608028654;  // sqrt(2/pi)
constexpr double kGeluA = 0.044715;
}  // namespace ad_detail

// GeLU, tanh approximation: 0.5*x*(1 + tanh(c*(x + a*x^3))).
template <typename T>
Var<T> gelu(Var<T> a) {
  const Tensor<T>& x = a.value();
  Tensor<T> y(x.shape());
  for (int64_t i = 0; i < x.numel(); ++i) {
    const double xi = static_cast<double>(x[i]);
    const double u = ad_detail::kGeluC * (xi + ad_detail::kGeluA * xi * xi * xi);
    y[i] = static_cast<T>(0.5 * xi * (1.0 + std::tanh(u)));
  }
  const int pa = a.idx;
  return a.tape->emplace(
      std::move(y), {pa},
      [pa](Tape<T>& tp, const Tensor<T>& g) {
        const Tensor<T>& xv = tp.value(pa);
        Tensor<T> dx(xv.shape());
        for (int64_t i = 0; i < xv.numel(); ++i) {
          const double xi = static_cast<double>(xv[i]);
          const double u =
              ad_detail::kGeluC * (xi + ad_detail::kGeluA * xi * xi * xi);
          const double th = std::tanh(u);
          const double du =
              ad_detail::kGeluC * (1.0 + 3.0 * ad_detail::kGeluA * xi * xi);
          const double d = 0.5 * (1.0 + th) + 0.5 * xi * (1.0 - th * th) * du;
          dx[i] = static_cast<T>(static_cast<double>(g[i]) * d);
        }
        tp.accumulate(pa, dx);
      },
      false, "gelu");
}

// Normalizes the last mode to zero mean and unit population variance; affine
// gain/bias are applied by the caller with mul/add.
template <typename T>
Var<T> layernorm_last(Var<T> a, double eps) {
  if (!(eps > 0)) throw ShapeError("layernorm_last: eps must be > 0");
  const Tensor<T>& x = a.value();
  if (x.order() < 1) throw ShapeError("layernorm_last: needs order >= 1");
  const int64_t cols = x.dim(x.order() - 1);
  const int64_t rows = x.numel() / cols;
  Tensor<T> y(x.shape());
  std::vector<double> inv_std(rows);
  for (int64_t r = 0; r < rows; ++r) {
    const T* in = x.ptr() + r * cols;
    T* out = y.ptr() + r * cols;
    double mean = 0;
    for (int64_t c = 0; c < cols; ++c) mean += in[c];
    mean /= cols;
    double var = 0;
    for (int64_t c = 0; c < cols; ++c) {
      const double d = in[c] - mean;
      var += d * d;
    }
    var /= cols;
    const double is = 1.0 / std::sqrt(var + eps);
    inv_std[r] = is;
    for (int64_t c = 0; c < cols; ++c)
      out[c] = static_cast<T>((in[c] - mean) * is);
  }
  const int pa = a.idx;
  const int self = static_cast<int>(a.tape->size());
  return a.tape->emplace(
      std::move(y), {pa},
      [pa, self, cols, inv_std](Tape<T>& tp, const Tensor<T>& g) {
        const Tensor<T>& yv = tp.value(self);
        Tensor<T> dx(yv.shape());
        const int64_t rows = yv.numel() / cols;
        for (int64_t r = 0; r < rows; ++r) {
          const T* yr = yv.ptr() + r * cols;
          const T* gr = g.ptr() + r * cols;
          T* dr = dx.ptr() + r * cols;
          double gm = 0, gym = 0;
          for (int64_t c = 0; c < cols; ++c) {
            gm += gr[c];
            gym += static_cast<double>(gr[c]) * yr[c];
          }
          gm /= cols;
          gym /= cols;
          for (int64_t c = 0; c < cols; ++c)
            dr[c] = static_cast<T>(inv_std[r] * (gr[c] - gm - yr[c] * gym));
        }
        tp.accumulate(pa, dx);
      },
      false, "layernorm");
}

// Rows of `table` gathered by integer ids; output shape = ids.shape + [D].
template <typename T>
Var<T> embedding_lookup(Var<T> table, const Tensor<int32_t>& ids) {
  const Tensor<T>& tab = table.value();
  if (tab.order() != 2) throw ShapeError("embedding_lookup: table must be 2-D");
  const int64_t vocab = tab.dim(0), width = tab.dim(1);
  Shape out_shape = ids.shape();
  out_shape.push_back(width);
  Tensor<T> out(out_shape);
  for (int64_t i = 0; i < ids.numel(); ++i) {
    const int32_t id = ids[i];
    if (id < 0 || id >= vocab)
      throw ShapeError("embedding_lookup: id " + std::to_string(id) +
                       " out of range [0," + std::to_string(vocab) + ")");
    std::copy_n(tab.ptr() + static_cast<int64_t>(id) * width, width,
                out.ptr() + i * width);
  }
  const int pt = table.idx;
  return table.tape->emplace(std::move(out), {pt},
                             [pt, ids, width](Tape<T>& tp, const Tensor<T>& g) {
                               Tensor<T> dt(tp.value(pt).shape());
                               for (int64_t i = 0; i < ids.numel(); ++i) {
                                 T* row = dt.ptr() +
                                          static_cast<int64_t>(ids[i]) * width;
                                 const T* gr = g.ptr() + i * width;
                                 for (int64_t c = 0; c < width; ++c) row[c] += gr[c];
                               }
                               tp.accumulate(pt, dt);
                             },
                             false, "embedding");
}

// Mean token-level cross-entropy between logits [..., V] and integer targets
// of the matching leading shape. Targets < 0 are ignored. Log-sum-exp uses
// max subtraction.
template <typename T>
Var<T> cross_entropy(Var<T> logits, const Tensor<int32_t>& targets) {
  const Tensor<T>& x = logits.value();
  if (x.order() < 1) throw ShapeError("cross_entropy: logits need order >= 1");
  const int64_t vocab = x.dim(x.order() - 1);
  const int64_t rows = x.numel() / vocab;
  if (targets.numel() != rows)
    throw ShapeError("cross_entropy: got " + std::to_string(targets.numel()) +
                     " targets for " + std::to_string(rows) + " rows");
  int64_t count = 0;
  double loss = 0;
  for (int64_t r = 0; r < rows; ++r) {
    const int32_t t = targets[r];
    if (t < 0) continue;
    if (t >= vocab)
      throw ShapeError("cross_entropy: target " + std::to_string(t) +
                       " out of range");
    const T* in = x.ptr() + r * vocab;
    double mx = in[0];
    for (int64_t c = 1; c < vocab; ++c) mx = std::max<double>(mx, in[c]);
    double denom = 0;
    for (int64_t c = 0; c < vocab; ++c) denom += std::exp(in[c] - mx);
    loss += (mx + std::log(denom)) - static_cast<double>(in[t]);
    ++count;
  }
  if (count == 0) throw NumericError("cross_entropy: no unignored targets");
  loss /= count;

  const int pl = logits.idx;
  return logits.tape->emplace(
      Tensor<T>::scalar(static_cast<T>(loss)), {pl},
      [pl, targets, vocab, count](Tape<T>& tp, const Tensor<T>& g) {
        const Tensor<T>& xv = tp.value(pl);
        const int64_t rows = xv.numel() / vocab;
        Tensor<T> dx(xv.shape());
        const double gs = static_cast<double>(g[0]) / count;
        for (int64_t r = 0; r < rows; ++r) {
          const int32_t t = targets[r];
          if (t < 0) continue;
          const T* in = xv.ptr() + r * vocab;
          T* out = dx.ptr() + r * vocab;
          double mx = in[0];
          for (int64_t c = 1; c < vocab; ++c) mx = std::max<double>(mx, in[c]);
          double denom = 0;
          for (int64_t c = 0; c < vocab; ++c) denom += std::exp(in[c] - mx);
          for (int64_t c = 0; c < vocab; ++c) {
            double p = std::exp(in[c] - mx) / denom;
            out[c] = static_cast<T>((p - (c == t ? 1.0 : 0.0)) * gs);
          }
        }
        tp.accumulate(pl, dx);
      },
      false, "cross_entropy");
}

// Escape hatch for custom elementwise ops; also lets tests register a
// deliberately wrong adjoint.
template <typename T>
Var<T> custom_unary(Var<T> a,
                    std::function<Tensor<T>(const Tensor<T>&)> fwd,
                    std::function<Tensor<T>(const Tensor<T>& grad_out,
                                            const Tensor<T>& x)> bwd) {
  Tensor<T> v = fwd(a.value());
  const int pa = a.idx;
  return a.tape->emplace(std::move(v), {pa},
                         [pa, bwd](Tape<T>& tp, const Tensor<T>& g) {
                           tp.accumulate(pa, bwd(g, tp.value(pa)));
                         },
                         false, "custom");
}

// ---- gradient checking ----

struct GradCheckReport {
  std::vector<double> max_rel_err_per_input;
  double max_rel_err = 0;
  bool pass = false;
};

// Central-difference check of the analytic gradient of a scalar-valued
// function of tensors. Relative error per element is
// |analytic - numeric| / max(|analytic|, |numeric|, 0.01).
template <typename T>
GradCheckReport grad_check(
    const std::function<Var<T>(Tape<T>&, const std::vector<Var<T>>&)>& f,
    std::vector<Tensor<T>> inputs, double h, double tol) {
  if (!(h > 0)) throw ShapeError("grad_check: h must be > 0");
  GradCheckReport report;

  std::vector<Tensor<T>> analytic;
  {
    Tape<T> tape;
    std::vector<Var<T>> vars;
    for (auto& in : inputs) vars.push_back(tape.param(in));
    Var<T> root = f(tape, vars);
    tape.backward(root);
    for (auto& v : vars)
      analytic.push_back(v.has_grad() ? v.grad()
                                      : Tensor<T>(v.value().shape()));
  }

  auto eval = [&](const std::vector<Tensor<T>>& xs) -> double {
    Tape<T> tape;
    std::vector<Var<T>> vars;
    for (const auto& x : xs) vars.push_back(tape.param(x));
    return static_cast<double>(f(tape, vars).value()[0]);
  };

  for (size_t k = 0; k < inputs.size(); ++k) {
    double worst = 0;
    for (int64_t i = 0; i < inputs[k].numel(); ++i) {
      const T orig = inputs[k][i];
      inputs[k][i] = static_cast<T>(orig + h);
      const double fp = eval(inputs);
      inputs[k][i] = static_cast<T>(orig - h);
      const double fm = eval(inputs);
      inputs[k][i] = orig;
      const double numeric = (fp - fm) / (2 * h);
      const double a = static_cast<double>(analytic[k][i]);
      const double rel =
          std::abs(a - numeric) / std::max({std::abs(a), std::abs(numeric), 0.01});
      worst = std::max(worst, rel);
    }
    report.max_rel_err_per_input.push_back(worst);
    report.max_rel_err = std::max(report.max_rel_err, worst);
  }
  report.pass = report.max_rel_err < tol;
  return report;
}

}  // namespace mgrow
