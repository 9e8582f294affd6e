#pragma once

// Packs the six mapped matrices of every layer into one 4th-order tensor
// [slab, in, out, layer] and back.
//
// Slab order per layer — frozen v1 contract; reordering breaks every saved
// checkpoint and requires a format-version bump:
//   0:Q  1:K  2:V  3:O  4..4+k-1:IN_j  4+k..4+2k-1:OUT_j
// IN_j is columns [j*D, (j+1)*D) of w_in (its output mode); OUT_j is rows
// [j*D, (j+1)*D) of w_out (its input mode). Every slab is D x D, so the
// packed tensor is (2k+4, D, D, L).
//
// Embeddings, layernorm parameters, biases, and the head are NOT packed;
// see grow_extras for how they cross a growth step.

#include <string>
#include <vector>

#include "mgrow/tensor.hpp"
#include "mgrow/transformer.hpp"

namespace mgrow {

inline std::vector<std::string> slab_order_table(int ffn_ratio) {
  std::vector<std::string> names = {"Q", "K", "V", "O"};
  for (int j = 0; j < ffn_ratio; ++j) names.push_back("IN" + std::to_string(j));
  for (int j = 0; j < ffn_ratio; ++j) names.push_back("OUT" + std::to_string(j));
  return names;
}

inline std::string slab_order_string(int ffn_ratio) {
  std::string s;
  for (const auto& n : slab_order_table(ffn_ratio)) {
    if (!s.empty()) s += ",";
    s += n;
  }
  return s;
}

template <typename T>
Tensor<T> pack_weights(const ModelWeights<T>& w) {
  const ModelConfig& cfg = w.cfg;
  const int64_t D = cfg.dim, L = cfg.layers, k = cfg.ffn_ratio, B = cfg.slabs();
  for (const auto& l : w.layers) {
    if (l.wq.shape() != Shape{D, D} || l.wk.shape() != Shape{D, D} ||
        l.wv.shape() != Shape{D, D} || l.wo.shape() != Shape{D, D} ||
        l.w_in.shape() != Shape{D, k * D} || l.w_out.shape() != Shape{k * D, D})
      throw ShapeError("pack: mapped matrices must be D x D slabs (square, in==out)");
  }
  Tensor<T> m({B, D, D, L});
  auto put = [&](int64_t b, int64_t l, auto&& get) {
    for (int64_t i = 0; i < D; ++i)
      for (int64_t o = 0; o < D; ++o)
        m[((b * D + i) * D + o) * L + l] = get(i, o);
  };
  for (int64_t l = 0; l < L; ++l) {
    const LayerWeights<T>& lw = w.layers[l];
    put(0, l, [&](int64_t i, int64_t o) { return lw.wq[i * D + o]; });
    put(1, l, [&](int64_t i, int64_t o) { return lw.wk[i * D + o]; });
    put(2, l, [&](int64_t i, int64_t o) { return lw.wv[i * D + o]; });
    put(3, l, [&](int64_t i, int64_t o) { return lw.wo[i * D + o]; });
    for (int64_t j = 0; j < k; ++j)
      put(4 + j, l,
          [&](int64_t i, int64_t o) { return lw.w_in[i * (k * D) + j * D + o]; });
    for (int64_t j = 0; j < k; ++j)
      put(4 + k + j, l,
          [&](int64_t i, int64_t o) { return lw.w_out[(j * D + i) * D + o]; });
  }
  return m;
}

// Writes the six mapped matrices of every layer from the packed tensor into
// an existing weight set; extras are untouched.
template <typename T>
void unpack_weights(const Tensor<T>& m, ModelWeights<T>& w) {
  const ModelConfig& cfg = w.cfg;
  const int64_t D = cfg.dim, L = cfg.layers, k = cfg.ffn_ratio, B = cfg.slabs();
  if (m.shape() != Shape{B, D, D, L})
    throw ShapeError("unpack: tensor shape " + shape_str(m.shape()) +
                     " does not match model (" + std::to_string(B) + "," +
                     std::to_string(D) + "," + std::to_string(D) + "," +
                     std::to_string(L) + ")");
  auto take = [&](int64_t b, int64_t l, auto&& set) {
    for (int64_t i = 0; i < D; ++i)
      for (int64_t o = 0; o < D; ++o)
        set(i, o, m[((b * D + i) * D + o) * L + l]);
  };
  for (int64_t l = 0; l < L; ++l) {
    LayerWeights<T>& lw = w.layers[l];
    take(0, l, [&](int64_t i, int64_t o, T v) { lw.wq[i * D + o] = v; });
    take(1, l, [&](int64_t i, int64_t o, T v) { lw.wk[i * D + o] = v; });
    take(2, l, [&](int64_t i, int64_t o, T v) { lw.wv[i * D + o] = v; });
    take(3, l, [&](int64_t i, int64_t o, T v) { lw.wo[i * D + o] = v; });
    for (int64_t j = 0; j < k; ++j)
      take(4 + j, l,
           [&](int64_t i, int64_t o, T v) { lw.w_in[i * (k * D) + j * D + o] = v; });
    for (int64_t j = 0; j < k; ++j)
      take(4 + k + j, l,
           [&](int64_t i, int64_t o, T v) { lw.w_out[(j * D + i) * D + o] = v; });
  }
}

// Tape-side unpack: replaces the six mapped-matrix vars of every layer with
// differentiable slices of the packed tensor, so gradients flow from the
// model loss back into whatever produced `m`.
template <typename T>
void unpack_on_tape(Var<T> m, ModelVars<T>& mv) {
  const ModelConfig& cfg = mv.cfg;
  const int64_t D = cfg.dim, L = cfg.layers, k = cfg.ffn_ratio, B = cfg.slabs();
  if (m.value().shape() != Shape{B, D, D, L})
    throw ShapeError("unpack_on_tape: packed tensor shape mismatch");
  auto slab = [&](int64_t b, int64_t l) {
    return reshape(narrow(narrow(m, 0, b, 1), 3, l, 1), {D, D});
  };
  for (int64_t l = 0; l < L; ++l) {
    LayerVars<T>& lv = mv.layers[l];
    lv.wq = slab(0, l);
    lv.wk = slab(1, l);
    lv.wv = slab(2, l);
    lv.wo = slab(3, l);
    std::vector<Var<T>> in_parts, out_parts;
    for (int64_t j = 0; j < k; ++j) in_parts.push_back(slab(4 + j, l));
    for (int64_t j = 0; j < k; ++j) out_parts.push_back(slab(4 + k + j, l));
    lv.w_in = k == 1 ? in_parts[0] : concat(in_parts, 1);
    lv.w_out = k == 1 ? out_parts[0] : concat(out_parts, 0);
  }
}

// Builds a target-size weight set with every non-packed tensor filled:
// embeddings and head keep the small model's values in their leading block
// and pad the new rows/columns with 1/sqrt(D2)-scaled noise; layernorms
// restart at gain 1 / bias 0; biases restart at zero. The six mapped
// matrices are left zero for unpack_weights to fill.
template <typename T>
ModelWeights<T> grow_extras(const ModelWeights<T>& small,
                            const ModelConfig& cfg_target, uint64_t seed) {
  const ModelConfig& c1 = small.cfg;
  cfg_target.validate();
  if (cfg_target.dim < c1.dim || cfg_target.layers < c1.layers)
    throw ShapeError("grow_extras: target must not shrink (dim " +
                     std::to_string(c1.dim) + "->" + std::to_string(cfg_target.dim) +
                     ", layers " + std::to_string(c1.layers) + "->" +
                     std::to_string(cfg_target.layers) + ")");
  if (cfg_target.seq_len < c1.seq_len)
    throw ShapeError("grow_extras: target seq_len must not shrink");
  if (cfg_target.vocab != c1.vocab)
    throw ShapeError("grow_extras: vocab must match");
  if (cfg_target.ffn_ratio != c1.ffn_ratio)
    throw ShapeError("grow_extras: ffn_ratio must match (width growth only)");

  const int64_t D1 = c1.dim, D2 = cfg_target.dim, V = c1.vocab;
  const double pad_scale = 1.0 / std::sqrt(double(D2));

  ModelWeights<T> t = zero_weights<T>(cfg_target);
  uint64_t stream = 0;

  // Token embedding: copy columns [0, D1), pad the rest.
  {
    Tensor<T> pad = D2 > D1 ? randn<T>({V, D2 - D1},
                                       CounterRng::derive(seed, stream), pad_scale)
                            : Tensor<T>({1});
    ++stream;
    for (int64_t r = 0; r < V; ++r) {
      for (int64_t c = 0; c < D1; ++c)
        t.tok_emb[r * D2 + c] = small.tok_emb[r * D1 + c];
      for (int64_t c = D1; c < D2; ++c)
        t.tok_emb[r * D2 + c] = pad[r * (D2 - D1) + (c - D1)];
    }
  }
  // Positional embedding: copy the [seq1, D1) block, pad new columns and
  // any new positions.
  {
    const int64_t S1 = c1.seq_len, S2 = cfg_target.seq_len;
    Tensor<T> pad = randn<T>({S2, D2}, CounterRng::derive(seed, stream++), pad_scale);
    for (int64_t r = 0; r < S2; ++r)
      for (int64_t c = 0; c < D2; ++c)
        t.pos_emb[r * D2 + c] = (r < S1 && c < D1)
                                    ? small.pos_emb[r * D1 + c]
                                    : pad[r * D2 + c];
  }
  // Per-layer vectors: layers that exist in the source carry their values
  // (gains padded with 1, biases with 0); layers beyond the source depth
  // start neutral. The identity-initialized map sends layer l to itself, so
  // this keeps equal-shape growth an exact identity even after pretraining.
  const int64_t K = c1.ffn_ratio;
  auto pad_vec = [](const Tensor<T>& src, int64_t n2, T fill) {
    Tensor<T> v = full<T>({n2}, fill);
    for (int64_t i = 0; i < src.numel() && i < n2; ++i) v[i] = src[i];
    return v;
  };
  for (size_t li = 0; li < t.layers.size(); ++li) {
    auto& l = t.layers[li];
    if (li < small.layers.size()) {
      const auto& s = small.layers[li];
      l.ln1_g = pad_vec(s.ln1_g, D2, T(1));
      l.ln1_b = pad_vec(s.ln1_b, D2, T(0));
      l.ln2_g = pad_vec(s.ln2_g, D2, T(1));
      l.ln2_b = pad_vec(s.ln2_b, D2, T(0));
      l.bq = pad_vec(s.bq, D2, T(0));
      l.bk = pad_vec(s.bk, D2, T(0));
      l.bv = pad_vec(s.bv, D2, T(0));
      l.bo = pad_vec(s.bo, D2, T(0));
      // b_in is blocked per ffn slab, mirroring how the IN matrices pack.
      l.b_in = full<T>({K * D2}, T(0));
      for (int64_t j = 0; j < K; ++j)
        for (int64_t i = 0; i < D1; ++i) l.b_in[j * D2 + i] = s.b_in[j * D1 + i];
      l.b_out = pad_vec(s.b_out, D2, T(0));
    } else {
      l.ln1_g = full<T>({D2}, T(1));
      l.ln2_g = full<T>({D2}, T(1));
    }
  }
  t.lnf_g = pad_vec(small.lnf_g, D2, T(1));
  t.lnf_b = pad_vec(small.lnf_b, D2, T(0));
  // Head: copy the first D1 input rows, pad the new rows; bias carried over.
  {
    Tensor<T> pad = D2 > D1 ? randn<T>({D2 - D1, V},
                                       CounterRng::derive(seed, stream), pad_scale)
                            : Tensor<T>({1});
    ++stream;
    for (int64_t r = 0; r < D1; ++r)
      for (int64_t c = 0; c < V; ++c) t.w_head[r * V + c] = small.w_head[r * V + c];
    for (int64_t r = D1; r < D2; ++r)
      for (int64_t c = 0; c < V; ++c) t.w_head[r * V + c] = pad[(r - D1) * V + c];
    t.b_head = small.b_head;
  }
  return t;
}

// unpack + extras in one step: the standard way to materialize a grown model
// from a packed tensor produced by a growth operator.
template <typename T>
ModelWeights<T> assemble_target(const Tensor<T>& m2, const ModelWeights<T>& small,
                                const ModelConfig& cfg_target, uint64_t seed) {
  ModelWeights<T> t = grow_extras(small, cfg_target, seed);
  unpack_weights(m2, t);
  return t;
}

}  // namespace mgrow
