#pragma once

// Warmup training of growth operators, and grow(): the one call that takes a
// trained small model to an initialized big one by any supported method.
//
// During warmup only the operator's own tensors learn. The packed small
// tensor enters every tape as a constant, so gradients into it are
// structurally absent — there is no way to silently fine-tune the donor
// model from here. The frozen extras (embeddings, norms, biases, head) are
// built once and re-lifted as constants each step.

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mgrow/autodiff.hpp"
#include "mgrow/growth.hpp"
#include "mgrow/packing.hpp"
#include "mgrow/transformer.hpp"

namespace mgrow {

// ---- Adam with decoupled weight decay ----

template <typename T>
struct AdamState {
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 0.0;
  int64_t t = 0;
  std::vector<Tensor<T>> m, v;  // parallel to the parameter list, zero at t=0
};

// One optimizer step over a named parameter list. Moments are allocated on
// first use and must keep matching the list afterwards.
//   p <- p - lr * m_hat / (sqrt(v_hat) + eps) - lr * weight_decay * p
template <typename T>
void adam_step(AdamState<T>& st,
               const std::vector<std::pair<std::string, Tensor<T>*>>& params,
               const std::vector<Tensor<T>>& grads) {
  if (params.size() != grads.size())
    throw ShapeError("adam_step: " + std::to_string(params.size()) +
                     " params vs " + std::to_string(grads.size()) + " grads");
  if (st.t == 0) {
    st.m.clear();
    st.v.clear();
    for (const auto& [name, p] : params) {
      st.m.emplace_back(p->shape());
      st.v.emplace_back(p->shape());
    }
  }
  if (st.m.size() != params.size())
    throw ShapeError("adam_step: optimizer state was built for " +
                     std::to_string(st.m.size()) + " tensors, got " +
                     std::to_string(params.size()));
  ++st.t;
  const double bc1 = 1.0 - std::pow(st.beta1, static_cast<double>(st.t));
  const double bc2 = 1.0 - std::pow(st.beta2, static_cast<double>(st.t));
  for (size_t i = 0; i < params.size(); ++i) {
    Tensor<T>& p = *params[i].second;
    const Tensor<T>& g = grads[i];
    if (g.shape() != p.shape() || st.m[i].shape() != p.shape())
      throw ShapeError("adam_step: shape mismatch for '" + params[i].first +
                       "': param " + shape_str(p.shape()) + ", grad " +
                       shape_str(g.shape()));
    if (!all_finite(g))
      throw NumericError("adam_step: non-finite gradient for '" +
                         params[i].first + "' at step " + std::to_string(st.t));
    for (int64_t j = 0; j < p.numel(); ++j) {
      const double gj = static_cast<double>(g[j]);
      const double mj = st.beta1 * static_cast<double>(st.m[i][j]) + (1.0 - st.beta1) * gj;
      const double vj = st.beta2 * static_cast<double>(st.v[i][j]) + (1.0 - st.beta2) * gj * gj;
      st.m[i][j] = static_cast<T>(mj);
      st.v[i][j] = static_cast<T>(vj);
      const double step = st.lr * (mj / bc1) / (std::sqrt(vj / bc2) + st.eps) +
                          st.lr * st.weight_decay * static_cast<double>(p[j]);
      p[j] = static_cast<T>(static_cast<double>(p[j]) - step);
    }
  }
}

// ---- batches and warmup configuration ----

// Tokens plus per-position targets; target -1 means the position is not
// scored. Next-token tasks get targets from shift_targets, seq2seq tasks
// mark only the answer span.
struct Batch {
  Tensor<int32_t> tokens;
  Tensor<int32_t> targets;
};

// Deterministic stream: step index -> batch. Callers must be able to serve
// any step in [0, steps).
using BatchStream = std::function<Batch(int)>;

enum class WarmupLoss {
  task_lm,           // the task's own cross-entropy
  distill_to_small,  // mean squared distance to the small model's logits
};

struct WarmupConfig {
  int steps = 100;
  double lr = 1e-4;
  int batch_size = 64;
  uint64_t seed = 0;
  WarmupLoss loss = WarmupLoss::task_lm;
  // Operator construction knobs used by grow(): ring ranks and the scale of
  // the symmetry-breaking noise on the identity-embedding init.
  MangoRanks ranks{};
  double init_noise = 1e-3;

  void validate() const {
    if (steps < 0) throw ConfigError("warmup: steps must be >= 0");
    if (!(lr > 0)) throw ConfigError("warmup: lr must be > 0");
    if (batch_size < 1) throw ConfigError("warmup: batch_size must be >= 1");
    if (init_noise < 0) throw ConfigError("warmup: init_noise must be >= 0");
  }
};

namespace training_detail {

// Shared warmup loop. `lift` places the operator's current tensors on a tape
// (in the same order as `hosts`); `apply` maps the packed small tensor
// through them. Returns the per-step loss trace (loss measured before each
// update).
template <typename T, typename LiftFn, typename ApplyFn>
std::vector<double> warmup_loop(
    LiftFn lift, ApplyFn apply,
    const std::vector<std::pair<std::string, Tensor<T>*>>& hosts,
    const Tensor<T>& m1, const ModelWeights<T>& small, const ModelConfig& cfg1,
    const ModelConfig& cfg2, const BatchStream& data, const WarmupConfig& wc) {
  wc.validate();
  if (wc.steps < 1) throw ConfigError("train_operator: steps must be >= 1");
  if (!(small.cfg == cfg1))
    throw ConfigError("train_operator: small model does not match its config");
  const Shape want = {cfg1.slabs(), cfg1.dim, cfg1.dim,
                      static_cast<int64_t>(cfg1.layers)};
  if (m1.shape() != want)
    throw ShapeError("train_operator: packed tensor is " + shape_str(m1.shape()) +
                     ", expected " + shape_str(want));

  const ModelWeights<T> extras = grow_extras(small, cfg2, wc.seed);
  AdamState<T> adam;
  adam.lr = wc.lr;
  std::vector<double> trace;
  trace.reserve(wc.steps);

  for (int step = 0; step < wc.steps; ++step) {
    Batch b = data(step);
    Tape<T> tape;
    std::vector<Var<T>> pvars = lift(tape);
    Var<T> m2 = apply(tape, pvars, tape.constant(m1));
    ModelVars<T> mv = lift_model(tape, extras, /*trainable=*/false);
    unpack_on_tape(m2, mv);

    Var<T> loss;
    if (wc.loss == WarmupLoss::task_lm) {
      loss = loss_on_targets(tape, mv, b.tokens, b.targets);
    } else {
      Tensor<T> small_logits = forward_logits(small, b.tokens);
      ForwardResult<T> fr = forward(tape, mv, b.tokens);
      Var<T> d = sub(fr.logits, tape.constant(small_logits));
      loss = scalar_mul(sum_all(mul(d, d)),
                        T(1.0 / static_cast<double>(small_logits.numel())));
    }
    const double lv = static_cast<double>(loss.value()[0]);
    if (!std::isfinite(lv))
      throw NumericError("train_operator: non-finite loss at step " +
                         std::to_string(step));
    trace.push_back(lv);

    tape.backward(loss);
    std::vector<Tensor<T>> grads;
    grads.reserve(pvars.size());
    for (const Var<T>& v : pvars)
      grads.push_back(v.has_grad() ? v.grad() : Tensor<T>(v.value().shape()));
    adam_step(adam, hosts, grads);
  }
  return trace;
}

}  // namespace training_detail

// Warmup-train ring cores in place; returns the loss trace.
template <typename T>
std::vector<double> train_operator(MangoCores<T>& cores, const Tensor<T>& m1,
                                   const ModelWeights<T>& small,
                                   const ModelConfig& cfg1, const ModelConfig& cfg2,
                                   const BatchStream& data, const WarmupConfig& wc) {
  cores.validate();
  auto lift = [&cores](Tape<T>& tape) {
    MangoCoreVars<T> cv = lift_cores(tape, cores, /*trainable=*/true);
    return std::vector<Var<T>>{cv.s_b, cv.s_o, cv.s_l, cv.s_i};
  };
  auto apply = [](Tape<T>&, const std::vector<Var<T>>& p, Var<T> m1v) {
    return mango_apply(MangoCoreVars<T>{p[0], p[1], p[2], p[3]}, m1v);
  };
  return training_detail::warmup_loop<T>(lift, apply, cores.named_tensors(), m1,
                                         small, cfg1, cfg2, data, wc);
}

// Same loop for the per-slab baseline.
template <typename T>
std::vector<double> train_operator(LigoOperator<T>& op, const Tensor<T>& m1,
                                   const ModelWeights<T>& small,
                                   const ModelConfig& cfg1, const ModelConfig& cfg2,
                                   const BatchStream& data, const WarmupConfig& wc) {
  op.validate();
  auto lift = [&op](Tape<T>& tape) {
    LigoVars<T> lv = lift_ligo(tape, op, /*trainable=*/true);
    return std::vector<Var<T>>{lv.s_in, lv.s_out, lv.s_l};
  };
  auto apply = [](Tape<T>&, const std::vector<Var<T>>& p, Var<T> m1v) {
    return ligo_apply(LigoVars<T>{p[0], p[1], p[2]}, m1v);
  };
  return training_detail::warmup_loop<T>(lift, apply, op.named_tensors(), m1,
                                         small, cfg1, cfg2, data, wc);
}

// ---- depth growth that adds exactly-zero residual blocks ----

// Appended layers start with zeroed output projections (attention out and
// FFN out), so under pre-norm residuals each new block adds 0 and the
// function is preserved exactly; the zero weights break free during target
// training. Input-side projections get fresh small random values.
template <typename T>
ModelWeights<T> append_identity_layers(const ModelWeights<T>& w,
                                       int target_layers, uint64_t seed) {
  if (target_layers < w.cfg.layers)
    throw ShapeError("append_identity_layers: cannot shrink depth");
  ModelWeights<T> t = w;
  t.cfg.layers = target_layers;
  const int64_t D = t.cfg.dim;
  const int64_t H = static_cast<int64_t>(t.cfg.ffn_ratio) * D;
  const double sc = 1.0 / std::sqrt(static_cast<double>(D));
  for (int j = w.cfg.layers; j < target_layers; ++j) {
    uint64_t stream = static_cast<uint64_t>(j) * 16;
    auto fresh = [&](const Shape& sh) {
      return randn<T>(sh, CounterRng::derive(seed, 7000 + stream++), sc);
    };
    LayerWeights<T> l;
    l.ln1_g = full<T>({D}, T(1));
    l.ln1_b = zeros<T>({D});
    l.ln2_g = full<T>({D}, T(1));
    l.ln2_b = zeros<T>({D});
    l.wq = fresh({D, D});
    l.wk = fresh({D, D});
    l.wv = fresh({D, D});
    l.wo = zeros<T>({D, D});
    l.bq = zeros<T>({D});
    l.bk = zeros<T>({D});
    l.bv = zeros<T>({D});
    l.bo = zeros<T>({D});
    l.w_in = fresh({D, H});
    l.b_in = zeros<T>({H});
    l.w_out = zeros<T>({H, D});
    l.b_out = zeros<T>({D});
    t.layers.push_back(std::move(l));
  }
  return t;
}

// ---- grow: one entry point for every method ----

enum class GrowthMethod { mango, ligo, stack, net2net, random };

inline const char* method_name(GrowthMethod m) {
  switch (m) {
    case GrowthMethod::mango: return "mango";
    case GrowthMethod::ligo: return "ligo";
    case GrowthMethod::stack: return "stack";
    case GrowthMethod::net2net: return "net2net";
    case GrowthMethod::random: return "random";
  }
  throw ConfigError("method_name: unknown method");
}

inline GrowthMethod method_from_string(const std::string& s) {
  if (s == "mango") return GrowthMethod::mango;
  if (s == "ligo") return GrowthMethod::ligo;
  if (s == "stack") return GrowthMethod::stack;
  if (s == "net2net") return GrowthMethod::net2net;
  if (s == "random") return GrowthMethod::random;
  throw ConfigError("unknown growth method '" + s +
                    "' (expected mango|ligo|stack|net2net|random)");
}

template <typename T>
struct GrowResult {
  ModelWeights<T> weights;
  std::vector<double> warmup_trace;  // empty when nothing was trained
  int64_t operator_params = 0;       // trainable numbers in the growth map
  // The fitted operator itself, kept so callers can checkpoint it. Only the
  // field matching the method is meaningful (see has_cores / has_ligo).
  MangoCores<T> cores;
  LigoOperator<T> ligo;
  bool has_cores = false;
  bool has_ligo = false;
};

// pack -> (optional warmup) -> apply operator -> unpack + frozen extras.
// Non-operator methods skip the packed path entirely. steps=0 requests the
// untrained (identity-initialized) operator.
template <typename T>
GrowResult<T> grow(const ModelWeights<T>& small, const ModelConfig& cfg1,
                   const ModelConfig& cfg2, GrowthMethod method,
                   const BatchStream& data, const WarmupConfig& wc) {
  cfg1.validate();
  cfg2.validate();
  wc.validate();
  if (!(small.cfg == cfg1))
    throw ConfigError("grow: small model does not match its config");
  if (cfg2.layers < cfg1.layers || cfg2.dim < cfg1.dim)
    throw ShapeError("grow: target must not shrink depth or width");

  GrowResult<T> out;
  switch (method) {
    case GrowthMethod::random: {
      out.weights = init_random<T>(cfg2, wc.seed);
      return out;
    }
    case GrowthMethod::mango:
    case GrowthMethod::ligo: {
      if (cfg2.ffn_ratio != cfg1.ffn_ratio)
        throw ShapeError("grow: slab count is frozen, ffn_ratio cannot change");
      const Tensor<T> m1 = pack_weights(small);
      const Shape s2 = {cfg2.slabs(), cfg2.dim, cfg2.dim,
                        static_cast<int64_t>(cfg2.layers)};
      Tensor<T> m2;
      if (method == GrowthMethod::mango) {
        MangoCores<T> cores =
            mango_init<T>(m1.shape(), s2, wc.ranks, wc.seed, wc.init_noise);
        if (wc.steps > 0)
          out.warmup_trace = train_operator(cores, m1, small, cfg1, cfg2, data, wc);
        out.operator_params = cores.param_count();
        m2 = mango_apply(cores, m1);
        out.cores = cores;
        out.has_cores = true;
      } else {
        LigoOperator<T> op = ligo_init<T>(m1.shape(), s2, wc.seed, wc.init_noise);
        if (wc.steps > 0)
          out.warmup_trace = train_operator(op, m1, small, cfg1, cfg2, data, wc);
        out.operator_params = op.param_count();
        m2 = ligo_apply(op, m1);
        out.ligo = op;
        out.has_ligo = true;
      }
      out.weights = assemble_target(m2, small, cfg2, wc.seed);
      return out;
    }
    case GrowthMethod::stack: {
      ModelWeights<T> base = small;
      if (cfg2.dim != cfg1.dim || cfg2.seq_len != cfg1.seq_len) {
        ModelConfig mid = cfg2;
        mid.layers = cfg1.layers;
        base = baseline_net2net_width(small, mid, wc.seed);
      }
      out.weights = baseline_stack_depth(base, cfg2.layers);
      return out;
    }
    case GrowthMethod::net2net: {
      ModelConfig mid = cfg2;
      mid.layers = cfg1.layers;
      ModelWeights<T> wide =
          (mid == cfg1) ? small : baseline_net2net_width(small, mid, wc.seed);
      out.weights = append_identity_layers(wide, cfg2.layers, wc.seed);
      return out;
    }
  }
  throw ConfigError("grow: unknown method");
}

}  // namespace mgrow
