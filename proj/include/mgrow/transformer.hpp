#pragma once

// A byte-vocabulary micro-transformer, sized so a laptop can train it in
// seconds. Pre-norm residual blocks by default (post-norm kept as a config
// switch), learned positional embeddings, multi-head scaled dot-product
// attention, GeLU feed-forward with hidden width k*D.
//
// Every linear matrix is stored (in, out) and applied as x @ W, so packing
// code can slice inputs along mode 0 and outputs along mode 1 without any
// transpose bookkeeping.

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mgrow/autodiff.hpp"
#include "mgrow/rng.hpp"
#include "mgrow/tensor.hpp"

namespace mgrow {

constexpr double kLayerNormEps = 1e-5;
constexpr double kAttnMaskValue = -1e9;

struct ModelConfig {
  int layers = 1;
  int dim = 32;
  int heads = 1;
  int ffn_ratio = 4;  // FFN hidden width = ffn_ratio * dim
  int vocab = 256;
  int seq_len = 64;
  bool causal = true;
  bool pre_norm = true;

  int head_dim() const { return dim / heads; }
  int slabs() const { return 2 * ffn_ratio + 4; }

  void validate() const {
    if (layers < 1) throw ConfigError("model: layers must be >= 1");
    if (dim < 1) throw ConfigError("model: dim must be >= 1");
    if (heads < 1) throw ConfigError("model: heads must be >= 1");
    if (dim % heads != 0) throw ConfigError("model: heads must divide dim");
    if (ffn_ratio < 1) throw ConfigError("model: ffn_ratio must be >= 1");
    if (vocab < 1) throw ConfigError("model: vocab must be >= 1");
    if (seq_len < 1) throw ConfigError("model: seq_len must be >= 1");
  }
};

inline bool operator==(const ModelConfig& a, const ModelConfig& b) {
  return a.layers == b.layers && a.dim == b.dim && a.heads == b.heads &&
         a.ffn_ratio == b.ffn_ratio && a.vocab == b.vocab &&
         a.seq_len == b.seq_len && a.causal == b.causal &&
         a.pre_norm == b.pre_norm;
}

template <typename T>
struct LayerWeights {
  Tensor<T> ln1_g, ln1_b;
  Tensor<T> wq, bq, wk, bk, wv, bv, wo, bo;
  Tensor<T> ln2_g, ln2_b;
  Tensor<T> w_in, b_in, w_out, b_out;
};

template <typename T>
struct ModelWeights {
  ModelConfig cfg;
  Tensor<T> tok_emb, pos_emb;
  std::vector<LayerWeights<T>> layers;
  Tensor<T> lnf_g, lnf_b;
  Tensor<T> w_head, b_head;

  // Fixed enumeration order; packing, checkpoints, and the optimizer all
  // rely on it being stable.
  std::vector<std::pair<std::string, Tensor<T>*>> named_tensors() {
    std::vector<std::pair<std::string, Tensor<T>*>> out;
    out.emplace_back("tok_emb", &tok_emb);
    out.emplace_back("pos_emb", &pos_emb);
    for (size_t i = 0; i < layers.size(); ++i) {
      const std::string p = "layer" + std::to_string(i) + ".";
      LayerWeights<T>& l = layers[i];
      out.emplace_back(p + "ln1.g", &l.ln1_g);
      out.emplace_back(p + "ln1.b", &l.ln1_b);
      out.emplace_back(p + "attn.wq", &l.wq);
      out.emplace_back(p + "attn.bq", &l.bq);
      out.emplace_back(p + "attn.wk", &l.wk);
      out.emplace_back(p + "attn.bk", &l.bk);
      out.emplace_back(p + "attn.wv", &l.wv);
      out.emplace_back(p + "attn.bv", &l.bv);
      out.emplace_back(p + "attn.wo", &l.wo);
      out.emplace_back(p + "attn.bo", &l.bo);
      out.emplace_back(p + "ln2.g", &l.ln2_g);
      out.emplace_back(p + "ln2.b", &l.ln2_b);
      out.emplace_back(p + "ffn.w_in", &l.w_in);
      out.emplace_back(p + "ffn.b_in", &l.b_in);
      out.emplace_back(p + "ffn.w_out", &l.w_out);
      out.emplace_back(p + "ffn.b_out", &l.b_out);
    }
    out.emplace_back("ln_f.g", &lnf_g);
    out.emplace_back("ln_f.b", &lnf_b);
    out.emplace_back("head.w", &w_head);
    out.emplace_back("head.b", &b_head);
    return out;
  }
  std::vector<std::pair<std::string, const Tensor<T>*>> named_tensors() const {
    auto mut = const_cast<ModelWeights*>(this)->named_tensors();
    std::vector<std::pair<std::string, const Tensor<T>*>> out;
    out.reserve(mut.size());
    for (auto& [n, t] : mut) out.emplace_back(n, t);
    return out;
  }
};

// Allocates every tensor at its configured shape, zero-filled.
template <typename T>
ModelWeights<T> zero_weights(const ModelConfig& cfg) {
  cfg.validate();
  const int64_t D = cfg.dim, V = cfg.vocab, H = int64_t(cfg.ffn_ratio) * cfg.dim;
  ModelWeights<T> w;
  w.cfg = cfg;
  w.tok_emb = Tensor<T>({V, D});
  w.pos_emb = Tensor<T>({cfg.seq_len, D});
  w.layers.resize(cfg.layers);
  for (auto& l : w.layers) {
    l.ln1_g = Tensor<T>({D});
    l.ln1_b = Tensor<T>({D});
    l.wq = Tensor<T>({D, D});
    l.bq = Tensor<T>({D});
    l.wk = Tensor<T>({D, D});
    l.bk = Tensor<T>({D});
    l.wv = Tensor<T>({D, D});
    l.bv = Tensor<T>({D});
    l.wo = Tensor<T>({D, D});
    l.bo = Tensor<T>({D});
    l.ln2_g = Tensor<T>({D});
    l.ln2_b = Tensor<T>({D});
    l.w_in = Tensor<T>({D, H});
    l.b_in = Tensor<T>({H});
    l.w_out = Tensor<T>({H, D});
    l.b_out = Tensor<T>({D});
  }
  w.lnf_g = Tensor<T>({D});
  w.lnf_b = Tensor<T>({D});
  w.w_head = Tensor<T>({D, V});
  w.b_head = Tensor<T>({V});
  return w;
}

namespace model_detail {

inline bool is_gain(const std::string& name) {
  return name.size() >= 2 && name.compare(name.size() - 2, 2, ".g") == 0;
}
inline bool is_bias(const std::string& name) {
  return (name.size() >= 2 && name.compare(name.size() - 2, 2, ".b") == 0) ||
         name.find(".b_") != std::string::npos ||
         name.find(".bq") != std::string::npos ||
         name.find(".bk") != std::string::npos ||
         name.find(".bv") != std::string::npos ||
         name.find(".bo") != std::string::npos;
}

}  // namespace model_detail

// Deterministic per seed. Matrices draw N(0, 1/fan_in) with fan_in = input
// dim (mode 0); embeddings use 1/dim; gains start at 1, biases at 0.
template <typename T>
ModelWeights<T> init_random(const ModelConfig& cfg, uint64_t seed) {
  ModelWeights<T> w = zero_weights<T>(cfg);
  uint64_t stream = 0;
  for (auto& [name, ten] : w.named_tensors()) {
    const uint64_t sub = CounterRng::derive(seed, stream++);
    if (model_detail::is_gain(name)) {
      *ten = full<T>(ten->shape(), T(1));
    } else if (model_detail::is_bias(name)) {
      // already zero
    } else if (name == "tok_emb" || name == "pos_emb") {
      *ten = randn<T>(ten->shape(), sub, 1.0 / std::sqrt(double(cfg.dim)));
    } else {
      *ten = randn<T>(ten->shape(), sub,
                      1.0 / std::sqrt(double(ten->dim(0))));
    }
  }
  return w;
}

// ---- tape-side mirror ----

template <typename T>
struct LayerVars {
  Var<T> ln1_g, ln1_b;
  Var<T> wq, bq, wk, bk, wv, bv, wo, bo;
  Var<T> ln2_g, ln2_b;
  Var<T> w_in, b_in, w_out, b_out;
};

template <typename T>
struct ModelVars {
  ModelConfig cfg;
  Var<T> tok_emb, pos_emb;
  std::vector<LayerVars<T>> layers;
  Var<T> lnf_g, lnf_b;
  Var<T> w_head, b_head;

  // Same order as ModelWeights::named_tensors.
  std::vector<std::pair<std::string, Var<T>*>> named_vars() {
    std::vector<std::pair<std::string, Var<T>*>> out;
    out.emplace_back("tok_emb", &tok_emb);
    out.emplace_back("pos_emb", &pos_emb);
    for (size_t i = 0; i < layers.size(); ++i) {
      const std::string p = "layer" + std::to_string(i) + ".";
      LayerVars<T>& l = layers[i];
      out.emplace_back(p + "ln1.g", &l.ln1_g);
      out.emplace_back(p + "ln1.b", &l.ln1_b);
      out.emplace_back(p + "attn.wq", &l.wq);
      out.emplace_back(p + "attn.bq", &l.bq);
      out.emplace_back(p + "attn.wk", &l.wk);
      out.emplace_back(p + "attn.bk", &l.bk);
      out.emplace_back(p + "attn.wv", &l.wv);
      out.emplace_back(p + "attn.bv", &l.bv);
      out.emplace_back(p + "attn.wo", &l.wo);
      out.emplace_back(p + "attn.bo", &l.bo);
      out.emplace_back(p + "ln2.g", &l.ln2_g);
      out.emplace_back(p + "ln2.b", &l.ln2_b);
      out.emplace_back(p + "ffn.w_in", &l.w_in);
      out.emplace_back(p + "ffn.b_in", &l.b_in);
      out.emplace_back(p + "ffn.w_out", &l.w_out);
      out.emplace_back(p + "ffn.b_out", &l.b_out);
    }
    out.emplace_back("ln_f.g", &lnf_g);
    out.emplace_back("ln_f.b", &lnf_b);
    out.emplace_back("head.w", &w_head);
    out.emplace_back("head.b", &b_head);
    return out;
  }
};

template <typename T>
ModelVars<T> lift_model(Tape<T>& tape, const ModelWeights<T>& w, bool trainable) {
  auto put = [&](const Tensor<T>& t) {
    return trainable ? tape.param(t) : tape.constant(t);
  };
  ModelVars<T> v;
  v.cfg = w.cfg;
  v.tok_emb = put(w.tok_emb);
  v.pos_emb = put(w.pos_emb);
  for (const auto& l : w.layers) {
    LayerVars<T> lv;
    lv.ln1_g = put(l.ln1_g);
    lv.ln1_b = put(l.ln1_b);
    lv.wq = put(l.wq);
    lv.bq = put(l.bq);
    lv.wk = put(l.wk);
    lv.bk = put(l.bk);
    lv.wv = put(l.wv);
    lv.bv = put(l.bv);
    lv.wo = put(l.wo);
    lv.bo = put(l.bo);
    lv.ln2_g = put(l.ln2_g);
    lv.ln2_b = put(l.ln2_b);
    lv.w_in = put(l.w_in);
    lv.b_in = put(l.b_in);
    lv.w_out = put(l.w_out);
    lv.b_out = put(l.b_out);
    v.layers.push_back(lv);
  }
  v.lnf_g = put(w.lnf_g);
  v.lnf_b = put(w.lnf_b);
  v.w_head = put(w.w_head);
  v.b_head = put(w.b_head);
  return v;
}

// 0 where key position <= query position, large negative elsewhere.
template <typename T>
Tensor<T> causal_mask(int64_t s) {
  Tensor<T> m({s, s});
  for (int64_t r = 0; r < s; ++r)
    for (int64_t c = r + 1; c < s; ++c)
      m[r * s + c] = static_cast<T>(kAttnMaskValue);
  return m;
}

template <typename T>
struct ForwardResult {
  Var<T> logits;                  // [batch, seq, vocab]
  std::vector<Var<T>> attention;  // per layer, [batch, heads, seq, seq]
};

template <typename T>
ForwardResult<T> forward(Tape<T>& tape, const ModelVars<T>& m,
                         const Tensor<int32_t>& tokens) {
  const ModelConfig& cfg = m.cfg;
  if (tokens.order() != 2)
    throw ShapeError("forward: tokens must be [batch, seq]");
  const int64_t batch = tokens.dim(0), s = tokens.dim(1);
  if (s > cfg.seq_len)
    throw ShapeError("forward: sequence length " + std::to_string(s) +
                     " exceeds configured maximum " + std::to_string(cfg.seq_len));
  const int64_t n = cfg.heads, dk = cfg.head_dim();

  auto layer_norm = [&](Var<T> x, Var<T> g, Var<T> b) {
    return add(mul(layernorm_last(x, kLayerNormEps), g), b);
  };

  Var<T> mask;
  if (cfg.causal) mask = tape.constant(causal_mask<T>(s));

  auto attention = [&](Var<T> h, const LayerVars<T>& l, Var<T>* att_out) {
    Var<T> q = add(matmul(h, l.wq), l.bq);
    Var<T> k = add(matmul(h, l.wk), l.bk);
    Var<T> v = add(matmul(h, l.wv), l.bv);
    auto split = [&](Var<T> x) {  // [b,s,D] -> [b,n,s,dk]
      return permute(reshape(x, {batch, s, n, dk}), {0, 2, 1, 3});
    };
    Var<T> qh = split(q), kh = split(k), vh = split(v);
    Var<T> scores = scalar_mul(matmul(qh, permute(kh, {0, 1, 3, 2})),
                               1.0 / std::sqrt(double(dk)));
    if (cfg.causal) scores = add(scores, mask);
    Var<T> att = softmax_last(scores);  // [b,n,s,s]
    if (att_out) *att_out = att;
    Var<T> ctx = matmul(att, vh);       // [b,n,s,dk]
    ctx = reshape(permute(ctx, {0, 2, 1, 3}), {batch, s, int64_t(cfg.dim)});
    return add(matmul(ctx, l.wo), l.bo);
  };
  auto ffn = [&](Var<T> h, const LayerVars<T>& l) {
    Var<T> f = gelu(add(matmul(h, l.w_in), l.b_in));
    return add(matmul(f, l.w_out), l.b_out);
  };

  Var<T> x = add(embedding_lookup(m.tok_emb, tokens),
                 narrow(m.pos_emb, 0, 0, s));

  ForwardResult<T> out;
  for (const auto& l : m.layers) {
    Var<T> att;
    if (cfg.pre_norm) {
      x = add(x, attention(layer_norm(x, l.ln1_g, l.ln1_b), l, &att));
      x = add(x, ffn(layer_norm(x, l.ln2_g, l.ln2_b), l));
    } else {
      x = layer_norm(add(x, attention(x, l, &att)), l.ln1_g, l.ln1_b);
      x = layer_norm(add(x, ffn(x, l)), l.ln2_g, l.ln2_b);
    }
    out.attention.push_back(att);
  }
  x = layer_norm(x, m.lnf_g, m.lnf_b);
  out.logits = add(matmul(x, m.w_head), m.b_head);
  return out;
}

// Next-token targets: position j predicts token j+1; the last position has
// nothing to predict and is ignored (-1).
inline Tensor<int32_t> shift_targets(const Tensor<int32_t>& tokens) {
  if (tokens.order() != 2) throw ShapeError("shift_targets: tokens must be [batch, seq]");
  const int64_t b = tokens.dim(0), s = tokens.dim(1);
  Tensor<int32_t> t(tokens.shape());
  for (int64_t r = 0; r < b; ++r) {
    for (int64_t c = 0; c + 1 < s; ++c) t[r * s + c] = tokens[r * s + c + 1];
    t[r * s + s - 1] = -1;
  }
  return t;
}

// Mean cross-entropy against explicit targets (-1 = ignore).
template <typename T>
Var<T> loss_on_targets(Tape<T>& tape, const ModelVars<T>& m,
                       const Tensor<int32_t>& tokens,
                       const Tensor<int32_t>& targets) {
  ForwardResult<T> fr = forward(tape, m, tokens);
  return cross_entropy(fr.logits, targets);
}

// Mean next-token cross-entropy over all predictable positions.
template <typename T>
Var<T> lm_loss(Tape<T>& tape, const ModelVars<T>& m, const Tensor<int32_t>& tokens) {
  return loss_on_targets(tape, m, tokens, shift_targets(tokens));
}

// ---- tape-free conveniences ----

template <typename T>
Tensor<T> forward_logits(const ModelWeights<T>& w, const Tensor<int32_t>& tokens) {
  Tape<T> tape;
  ModelVars<T> m = lift_model(tape, w, /*trainable=*/false);
  return forward(tape, m, tokens).logits.value();
}

template <typename T>
double eval_loss(const ModelWeights<T>& w, const Tensor<int32_t>& tokens,
                 const Tensor<int32_t>& targets) {
  Tape<T> tape;
  ModelVars<T> m = lift_model(tape, w, /*trainable=*/false);
  return static_cast<double>(loss_on_targets(tape, m, tokens, targets).value()[0]);
}

// Softmax attention matrices for one sequence: [layers, heads, seq, seq].
template <typename T>
Tensor<T> attention_maps(const ModelWeights<T>& w, const Tensor<int32_t>& tokens) {
  Tensor<int32_t> batch1 = tokens;
  if (tokens.order() == 1) batch1 = reshape(tokens, {1, tokens.dim(0)});
  if (batch1.order() != 2 || batch1.dim(0) != 1)
    throw ShapeError("attention_maps: expects a single sequence");
  Tape<T> tape;
  ModelVars<T> m = lift_model(tape, w, /*trainable=*/false);
  ForwardResult<T> fr = forward(tape, m, batch1);
  const int64_t L = w.cfg.layers, n = w.cfg.heads, s = batch1.dim(1);
  Tensor<T> out({L, n, s, s});
  for (int64_t l = 0; l < L; ++l) {
    const Tensor<T>& att = fr.attention[l].value();  // [1,n,s,s]
    std::copy_n(att.ptr(), n * s * s, out.ptr() + l * n * s * s);
  }
  return out;
}

// ---- size and cost accounting ----

// The six matrices the growth operator maps, per layer: Q,K,V,O are D^2 each
// and the two FFN matrices are k*D^2 each, hence (2k+4)*D^2.
inline int64_t mapped_params_per_layer(const ModelConfig& cfg) {
  const int64_t D = cfg.dim;
  return int64_t(2 * cfg.ffn_ratio + 4) * D * D;
}

inline int64_t count_params(const ModelConfig& cfg) {
  cfg.validate();
  const int64_t D = cfg.dim, V = cfg.vocab, L = cfg.layers, k = cfg.ffn_ratio;
  const int64_t per_layer = mapped_params_per_layer(cfg)  // mapped matrices
                            + 4 * D                        // attn biases
                            + k * D + D                    // ffn biases
                            + 4 * D;                       // two layernorms
  return V * D + int64_t(cfg.seq_len) * D  // embeddings
         + L * per_layer                   // blocks
         + 2 * D                           // final layernorm
         + D * V + V;                      // head
}

// Cost convention (documented in the README): one multiply-accumulate = 2
// FLOPs; dense cost per token = 2 * (mapped matrix params + head params);
// attention score+mix cost = 2 * seq * D per layer per token; a training
// step costs 3x inference (forward + ~2x backward).
inline uint64_t flops_per_token_inference(const ModelConfig& cfg) {
  cfg.validate();
  const uint64_t D = cfg.dim, V = cfg.vocab, L = cfg.layers;
  const uint64_t dense = L * uint64_t(mapped_params_per_layer(cfg)) + D * V;
  const uint64_t attn = L * 2 * uint64_t(cfg.seq_len) * D;
  return 2 * dense + attn;
}

inline uint64_t flops_per_token_train(const ModelConfig& cfg) {
  return 3 * flops_per_token_inference(cfg);
}

}  // namespace mgrow
