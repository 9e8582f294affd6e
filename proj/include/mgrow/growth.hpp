#pragma once

// Growth operators: maps that turn a small model's packed weight tensor
// [B1,I1,O1,L1] into a larger one [B2,I2,O2,L2].
//
// The learned operator factors the full linear map through four 4th-order
// cores linked in a ring by rank modes:
//   S_B (R1,B1,B2,R2)  S_O (R2,O1,O2,R3)  S_L (R3,L1,L2,R4)  S_I (R4,I1,I2,R1)
// Applying it never materializes the full map; the packed tensor is
// contracted with one core at a time in the fixed order B, O, L, I (ring
// ranks ride along and close when S_I binds both R4 and R1). The fixed order
// keeps floating-point results deterministic.
//
// FullMap is the dense 8th-order map the ring factorizes; it is quartically
// large in the dims, so construction is capped and it exists for tests.
//
// Baselines: per-slab width matrices + layer mixing (trainable), depth
// stacking, function-preserving width splitting, and random re-init.

#include <string>
#include <vector>

#include "mgrow/autodiff.hpp"
#include "mgrow/packing.hpp"
#include "mgrow/rng.hpp"
#include "mgrow/tensor.hpp"

namespace mgrow {

constexpr int64_t kFullMapCap = 10'000'000;

struct MangoRanks {
  int64_t r1 = 1, r2 = 1, r3 = 1, r4 = 1;
};

inline bool operator==(const MangoRanks& a, const MangoRanks& b) {
  return a.r1 == b.r1 && a.r2 == b.r2 && a.r3 == b.r3 && a.r4 == b.r4;
}

template <typename T>
struct MangoCores {
  Tensor<T> s_b;  // (R1, B1, B2, R2)
  Tensor<T> s_o;  // (R2, O1, O2, R3)
  Tensor<T> s_l;  // (R3, L1, L2, R4)
  Tensor<T> s_i;  // (R4, I1, I2, R1)

  MangoRanks ranks() const {
    return MangoRanks{s_b.dim(0), s_o.dim(0), s_l.dim(0), s_i.dim(0)};
  }
  int64_t param_count() const {
    return s_b.numel() + s_o.numel() + s_l.numel() + s_i.numel();
  }
  void validate() const {
    if (s_b.order() != 4 || s_o.order() != 4 || s_l.order() != 4 || s_i.order() != 4)
      throw ShapeError("cores: all four cores must be 4th-order");
    if (s_b.dim(3) != s_o.dim(0) || s_o.dim(3) != s_l.dim(0) ||
        s_l.dim(3) != s_i.dim(0) || s_i.dim(3) != s_b.dim(0))
      throw ShapeError("cores: rank modes must chain and close the ring");
  }
  std::vector<std::pair<std::string, Tensor<T>*>> named_tensors() {
    return {{"S_B", &s_b}, {"S_O", &s_o}, {"S_L", &s_l}, {"S_I", &s_i}};
  }
  std::vector<std::pair<std::string, const Tensor<T>*>> named_tensors() const {
    auto mut = const_cast<MangoCores*>(this)->named_tensors();
    std::vector<std::pair<std::string, const Tensor<T>*>> out;
    for (auto& [n, p] : mut) out.emplace_back(n, p);
    return out;
  }
};

namespace growth_detail {

// One code path for Tensor and Var operands; the free functions resolve to
// the plain or tape-recording overloads.
template <typename X>
X apply_cores_seq(const X& m1, const X& sb, const X& so, const X& sl, const X& si) {
  X t0 = contract(m1, {0}, sb, {1});           // [I1,O1,L1,R1,B2,R2]
  X t1 = contract(t0, {1, 5}, so, {1, 0});     // [I1,L1,R1,B2,O2,R3]
  X t2 = contract(t1, {1, 5}, sl, {1, 0});     // [I1,R1,B2,O2,L2,R4]
  X t3 = contract(t2, {0, 5, 1}, si, {1, 0, 3});  // [B2,O2,L2,I2]
  return permute(t3, {0, 3, 1, 2});            // [B2,I2,O2,L2]
}

inline void check_apply_shapes(const Shape& m1, const Shape& sb, const Shape& so,
                               const Shape& sl, const Shape& si) {
  if (m1.size() != 4) throw ShapeError("apply: packed tensor must be 4th-order");
  if (sb[1] != m1[0] || si[1] != m1[1] || so[1] != m1[2] || sl[1] != m1[3])
    throw ShapeError("apply: core small-side dims do not match packed tensor " +
                     shape_str(m1));
}

}  // namespace growth_detail

template <typename T>
Tensor<T> mango_apply(const MangoCores<T>& c, const Tensor<T>& m1) {
  c.validate();
  growth_detail::check_apply_shapes(m1.shape(), c.s_b.shape(), c.s_o.shape(),
                                    c.s_l.shape(), c.s_i.shape());
  return growth_detail::apply_cores_seq(m1, c.s_b, c.s_o, c.s_l, c.s_i);
}

template <typename T>
struct MangoCoreVars {
  Var<T> s_b, s_o, s_l, s_i;
};

template <typename T>
MangoCoreVars<T> lift_cores(Tape<T>& tape, const MangoCores<T>& c, bool trainable) {
  c.validate();
  auto put = [&](const Tensor<T>& t) {
    return trainable ? tape.param(t) : tape.constant(t);
  };
  return MangoCoreVars<T>{put(c.s_b), put(c.s_o), put(c.s_l), put(c.s_i)};
}

template <typename T>
Var<T> mango_apply(const MangoCoreVars<T>& c, Var<T> m1) {
  growth_detail::check_apply_shapes(m1.value().shape(), c.s_b.value().shape(),
                                    c.s_o.value().shape(), c.s_l.value().shape(),
                                    c.s_i.value().shape());
  return growth_detail::apply_cores_seq(m1, c.s_b, c.s_o, c.s_l, c.s_i);
}

// ---- dense full map (test oracle) ----

template <typename T>
struct FullMap {
  Tensor<T> s;  // (B1,I1,O1,L1,B2,I2,O2,L2)
};

// Contracts the ring into the dense map. Refuses absurd sizes; use
// mango_apply for real work.
template <typename T>
FullMap<T> compose_cores(const MangoCores<T>& c) {
  c.validate();
  const int64_t total = c.s_b.dim(1) * c.s_i.dim(1) * c.s_o.dim(1) * c.s_l.dim(1) *
                        c.s_b.dim(2) * c.s_i.dim(2) * c.s_o.dim(2) * c.s_l.dim(2);
  if (total > kFullMapCap)
    throw ShapeError("compose_cores: dense map would hold " +
                     std::to_string(total) + " entries (cap " +
                     std::to_string(kFullMapCap) + "); use the factored apply");
  Tensor<T> c1 = contract(c.s_b, {3}, c.s_o, {0});  // [R1,B1,B2,O1,O2,R3]
  Tensor<T> c2 = contract(c1, {5}, c.s_l, {0});     // [R1,B1,B2,O1,O2,L1,L2,R4]
  Tensor<T> c3 = contract(c2, {7, 0}, c.s_i, {0, 3});  // [B1,B2,O1,O2,L1,L2,I1,I2]
  return FullMap<T>{permute(c3, {0, 6, 2, 4, 1, 7, 3, 5})};
}

// Literal eight-index sum, no library contraction in the loop: the oracle
// the factored path is checked against.
template <typename T>
Tensor<T> full_apply(const FullMap<T>& f, const Tensor<T>& m1) {
  const Tensor<T>& s = f.s;
  if (s.order() != 8 || m1.order() != 4)
    throw ShapeError("full_apply: expects an 8th-order map and 4th-order input");
  for (int d = 0; d < 4; ++d)
    if (s.dim(d) != m1.dim(d))
      throw ShapeError("full_apply: map small side " + shape_str(s.shape()) +
                       " vs input " + shape_str(m1.shape()));
  const int64_t n_in = m1.numel();
  const int64_t n_out = s.numel() / n_in;
  Tensor<T> out({s.dim(4), s.dim(5), s.dim(6), s.dim(7)});
  for (int64_t o = 0; o < n_out; ++o) {
    double acc = 0;
    for (int64_t i = 0; i < n_in; ++i)
      acc += static_cast<double>(s[i * n_out + o]) * static_cast<double>(m1[i]);
    out[o] = static_cast<T>(acc);
  }
  return out;
}

// ---- initialization ----

// Identity embedding: the ring-(0,0) slice of each core carries a truncated
// or zero-padded identity between the small and target extent of its mode;
// every other ring slice is zero. Optional Gaussian noise breaks symmetry.
// At equal shapes with zero noise this operator is the exact identity; under
// growth it is a zero-padded copy.
template <typename T>
MangoCores<T> mango_init(const Shape& small, const Shape& target, MangoRanks r,
                         uint64_t seed, double noise = 1e-3) {
  if (small.size() != 4 || target.size() != 4)
    throw ShapeError("mango_init: shapes must be (B,I,O,L)");
  if (r.r1 < 1 || r.r2 < 1 || r.r3 < 1 || r.r4 < 1)
    throw ShapeError("mango_init: ranks must be >= 1");
  if (noise < 0) throw ShapeError("mango_init: noise must be >= 0");

  auto make = [&](int64_t rin, int64_t n1, int64_t n2, int64_t rout,
                  uint64_t stream) {
    Tensor<T> core({rin, n1, n2, rout});
    for (int64_t d = 0; d < std::min(n1, n2); ++d)
      core[(d * n2 + d) * rout] = T(1);  // [0, d, d, 0]
    if (noise > 0) {
      Tensor<T> z = randn<T>(core.shape(), CounterRng::derive(seed, stream), noise);
      for (int64_t i = 0; i < core.numel(); ++i) core[i] += z[i];
    }
    return core;
  };
  MangoCores<T> c;
  c.s_b = make(r.r1, small[0], target[0], r.r2, 0);
  c.s_i = make(r.r4, small[1], target[1], r.r1, 1);
  c.s_o = make(r.r2, small[2], target[2], r.r3, 2);
  c.s_l = make(r.r3, small[3], target[3], r.r4, 3);
  return c;
}

// ---- operator size formulas ----

inline int64_t param_count_mango(int64_t d1, int64_t d2, int64_t b1, int64_t b2,
                                 int64_t l1, int64_t l2,
                                 MangoRanks r = MangoRanks{}) {
  // Stored-core element count; collapses to 2*R*D1*D2 + R^2*(B1*B2 + L1*L2)
  // at rank R=(R,R,R,R) with square D cores and R=1.
  return r.r1 * b1 * b2 * r.r2 + r.r2 * d1 * d2 * r.r3 + r.r3 * l1 * l2 * r.r4 +
         r.r4 * d1 * d2 * r.r1;
}

inline int64_t param_count_ligo(int64_t d1, int64_t d2, int64_t b1, int64_t l1,
                                int64_t l2) {
  return 2 * b1 * d1 * d2 + l1 * l2;
}

inline int64_t param_count_bert2bert(int64_t d1, int64_t d2, int64_t l1,
                                     int64_t l2) {
  return 2 * l1 * d1 * d2 + l1 * l2;
}

// ---- per-slab baseline (no cross-slab mixing) ----

template <typename T>
struct LigoOperator {
  Tensor<T> s_in;   // (B1, I1, I2), one input-side matrix per slab
  Tensor<T> s_out;  // (B1, O1, O2)
  Tensor<T> s_l;    // (L1, L2)

  int64_t param_count() const {
    return s_in.numel() + s_out.numel() + s_l.numel();
  }
  void validate() const {
    if (s_in.order() != 3 || s_out.order() != 3 || s_l.order() != 2)
      throw ShapeError("ligo: s_in/s_out must be 3rd-order, s_l 2nd-order");
    if (s_in.dim(0) != s_out.dim(0))
      throw ShapeError("ligo: slab counts of s_in and s_out differ");
  }
  std::vector<std::pair<std::string, Tensor<T>*>> named_tensors() {
    return {{"S_IN", &s_in}, {"S_OUT", &s_out}, {"S_L", &s_l}};
  }
  std::vector<std::pair<std::string, const Tensor<T>*>> named_tensors() const {
    auto mut = const_cast<LigoOperator*>(this)->named_tensors();
    std::vector<std::pair<std::string, const Tensor<T>*>> out;
    for (auto& [n, p] : mut) out.emplace_back(n, p);
    return out;
  }
};

// Padded identities plus optional symmetry-breaking noise; slab axis is not
// expandable here (the per-slab structure has no slab-mixing term).
template <typename T>
LigoOperator<T> ligo_init(const Shape& small, const Shape& target, uint64_t seed,
                          double noise = 1e-3) {
  if (small.size() != 4 || target.size() != 4)
    throw ShapeError("ligo_init: shapes must be (B,I,O,L)");
  if (small[0] != target[0])
    throw ShapeError("ligo_init: slab axis cannot grow (needs equal B)");
  if (noise < 0) throw ShapeError("ligo_init: noise must be >= 0");
  const int64_t B = small[0];

  auto padded_eye_stack = [&](int64_t n1, int64_t n2, uint64_t stream) {
    Tensor<T> t({B, n1, n2});
    for (int64_t b = 0; b < B; ++b)
      for (int64_t d = 0; d < std::min(n1, n2); ++d) t[(b * n1 + d) * n2 + d] = T(1);
    if (noise > 0) {
      Tensor<T> z = randn<T>(t.shape(), CounterRng::derive(seed, stream), noise);
      for (int64_t i = 0; i < t.numel(); ++i) t[i] += z[i];
    }
    return t;
  };
  LigoOperator<T> op;
  op.s_in = padded_eye_stack(small[1], target[1], 0);
  op.s_out = padded_eye_stack(small[2], target[2], 1);
  op.s_l = Tensor<T>({small[3], target[3]});
  for (int64_t d = 0; d < std::min(small[3], target[3]); ++d)
    op.s_l[d * target[3] + d] = T(1);
  if (noise > 0) {
    Tensor<T> z = randn<T>(op.s_l.shape(), CounterRng::derive(seed, 2), noise);
    for (int64_t i = 0; i < op.s_l.numel(); ++i) op.s_l[i] += z[i];
  }
  return op;
}

namespace growth_detail {

template <typename X>
X ligo_apply_seq(const X& m1, const X& s_in, const X& s_out, const X& s_l,
                 int64_t slabs) {
  std::vector<X> out_slabs;
  for (int64_t b = 0; b < slabs; ++b) {
    X mb = narrow(m1, 0, b, 1);        // [1,I1,O1,L1]
    X ib = narrow(s_in, 0, b, 1);      // [1,I1,I2]
    X ob = narrow(s_out, 0, b, 1);     // [1,O1,O2]
    X t0 = contract(mb, {0, 1}, ib, {0, 1});   // [O1,L1,I2]
    X t1 = contract(t0, {0}, ob, {1});         // bind O1 with s_out's O1 -> [L1,I2,1?,O2]
    // t1 modes: free_a = [L1, I2], free_b = [slab(=1), O2]
    X t2 = contract(t1, {0}, s_l, {0});        // [I2,1,O2,L2]
    out_slabs.push_back(permute(t2, {1, 0, 2, 3}));  // [1,I2,O2,L2]
  }
  return slabs == 1 ? out_slabs[0] : concat(out_slabs, 0);
}

}  // namespace growth_detail

template <typename T>
Tensor<T> ligo_apply(const LigoOperator<T>& op, const Tensor<T>& m1) {
  op.validate();
  if (m1.order() != 4 || m1.dim(0) != op.s_in.dim(0) ||
      m1.dim(1) != op.s_in.dim(1) || m1.dim(2) != op.s_out.dim(1) ||
      m1.dim(3) != op.s_l.dim(0))
    throw ShapeError("ligo_apply: operator dims do not match packed tensor " +
                     shape_str(m1.shape()));
  return growth_detail::ligo_apply_seq(m1, op.s_in, op.s_out, op.s_l, m1.dim(0));
}

template <typename T>
struct LigoVars {
  Var<T> s_in, s_out, s_l;
};

template <typename T>
LigoVars<T> lift_ligo(Tape<T>& tape, const LigoOperator<T>& op, bool trainable) {
  op.validate();
  auto put = [&](const Tensor<T>& t) {
    return trainable ? tape.param(t) : tape.constant(t);
  };
  return LigoVars<T>{put(op.s_in), put(op.s_out), put(op.s_l)};
}

template <typename T>
Var<T> ligo_apply(const LigoVars<T>& op, Var<T> m1) {
  return growth_detail::ligo_apply_seq(m1, op.s_in, op.s_out, op.s_l,
                                       m1.value().dim(0));
}

// The per-slab operator is a special case of the ring: a superdiagonal slab
// core routes each slab's pair of width matrices through its own ring index,
// and the layer core sits at ring width 1.
template <typename T>
MangoCores<T> ligo_to_mango_cores(const LigoOperator<T>& op) {
  op.validate();
  const int64_t B = op.s_in.dim(0);
  const int64_t I1 = op.s_in.dim(1), I2 = op.s_in.dim(2);
  const int64_t O1 = op.s_out.dim(1), O2 = op.s_out.dim(2);
  const int64_t L1 = op.s_l.dim(0), L2 = op.s_l.dim(1);

  MangoCores<T> c;
  c.s_b = materialize_superdiag<T>({4, B});                  // (B,B,B,B)
  c.s_o = reshape(op.s_out, {B, O1, O2, 1});                 // (R2=B,O1,O2,1)
  c.s_l = reshape(op.s_l, {1, L1, L2, 1});                   // (1,L1,L2,1)
  c.s_i = reshape(permute(op.s_in, {1, 2, 0}), {1, I1, I2, B});  // (1,I1,I2,R1=B)
  return c;
}

// ---- stacking and splitting baselines ----

// Depth growth by cyclic layer duplication: target layer j takes small layer
// j mod L1. Width and extras unchanged.
template <typename T>
ModelWeights<T> baseline_stack_depth(const ModelWeights<T>& small, int target_layers) {
  if (target_layers < small.cfg.layers)
    throw ShapeError("stack: target depth " + std::to_string(target_layers) +
                     " is shallower than source " +
                     std::to_string(small.cfg.layers));
  ModelWeights<T> t = small;
  t.cfg.layers = target_layers;
  t.layers.clear();
  for (int j = 0; j < target_layers; ++j)
    t.layers.push_back(small.layers[j % small.cfg.layers]);
  return t;
}

// Unit-mapping table for widening n1 -> n2: unit u keeps itself for u < n1
// and copies a uniformly drawn existing unit otherwise.
inline std::vector<int64_t> net2net_mapping(int64_t n1, int64_t n2, CounterRng& rng) {
  if (n2 < n1) throw ShapeError("net2net: cannot shrink a dimension");
  std::vector<int64_t> g(n2);
  for (int64_t u = 0; u < n2; ++u)
    g[u] = u < n1 ? u : static_cast<int64_t>(rng.next_below(n1));
  return g;
}

inline std::vector<int64_t> mapping_multiplicity(const std::vector<int64_t>& g,
                                                 int64_t n1) {
  std::vector<int64_t> m(n1, 0);
  for (int64_t u : g) ++m[u];
  return m;
}

// Input-side widening: row u of the result is row g(u), divided by how many
// target units share that source so the downstream sum is preserved.
template <typename T>
Tensor<T> net2net_widen_rows(const Tensor<T>& w, const std::vector<int64_t>& g) {
  const int64_t n1 = w.dim(0), cols = w.dim(1), n2 = g.size();
  const auto mult = mapping_multiplicity(g, n1);
  Tensor<T> out({n2, cols});
  for (int64_t u = 0; u < n2; ++u)
    for (int64_t c = 0; c < cols; ++c)
      out[u * cols + c] = static_cast<T>(w[g[u] * cols + c] / T(mult[g[u]]));
  return out;
}

// Output-side widening: column v of the result is a plain copy of column g(v).
template <typename T>
Tensor<T> net2net_widen_cols(const Tensor<T>& w, const std::vector<int64_t>& g) {
  const int64_t rows = w.dim(0), n1 = w.dim(1), n2 = g.size();
  (void)n1;
  Tensor<T> out({rows, n2});
  for (int64_t r = 0; r < rows; ++r)
    for (int64_t v = 0; v < n2; ++v) out[r * n2 + v] = w[r * n1 + g[v]];
  return out;
}

template <typename T>
Tensor<T> net2net_widen_vec(const Tensor<T>& v, const std::vector<int64_t>& g) {
  Tensor<T> out({static_cast<int64_t>(g.size())});
  for (size_t u = 0; u < g.size(); ++u) out[u] = v[g[u]];
  return out;
}

// Width growth by neuron splitting: one mapping table for the residual
// stream (shared by every layer, both embeddings, and the head) and one per
// layer for the FFN hidden width. Exactly function-preserving for linear
// chains; layernorm and attention-score scaling make it approximate here.
template <typename T>
ModelWeights<T> baseline_net2net_width(const ModelWeights<T>& small,
                                       const ModelConfig& cfg_target,
                                       uint64_t seed) {
  const ModelConfig& c1 = small.cfg;
  cfg_target.validate();
  if (cfg_target.dim < c1.dim) throw ShapeError("net2net: cannot shrink width");
  if (cfg_target.layers != c1.layers)
    throw ShapeError("net2net: width baseline keeps depth fixed");
  if (cfg_target.ffn_ratio != c1.ffn_ratio || cfg_target.vocab != c1.vocab ||
      cfg_target.seq_len < c1.seq_len)
    throw ShapeError("net2net: incompatible target config");

  CounterRng rng(CounterRng::derive(seed, 0));
  const auto gD = net2net_mapping(c1.dim, cfg_target.dim, rng);

  ModelWeights<T> t = zero_weights<T>(cfg_target);
  // Residual features are duplicated, so embedding columns are copied.
  {
    const int64_t V = c1.vocab, D1 = c1.dim, D2 = cfg_target.dim;
    for (int64_t r = 0; r < V; ++r)
      for (int64_t c = 0; c < D2; ++c)
        t.tok_emb[r * D2 + c] = small.tok_emb[r * D1 + gD[c]];
    for (int64_t r = 0; r < c1.seq_len; ++r)
      for (int64_t c = 0; c < D2; ++c)
        t.pos_emb[r * D2 + c] = small.pos_emb[r * D1 + gD[c]];
    for (int64_t r = c1.seq_len; r < cfg_target.seq_len; ++r) {
      Tensor<T> extra = randn<T>({D2}, CounterRng::derive(seed, 100 + r),
                                 1.0 / std::sqrt(double(D2)));
      for (int64_t c = 0; c < D2; ++c) t.pos_emb[r * D2 + c] = extra[c];
    }
  }
  for (int li = 0; li < c1.layers; ++li) {
    const auto gH = net2net_mapping(int64_t(c1.ffn_ratio) * c1.dim,
                                    int64_t(cfg_target.ffn_ratio) * cfg_target.dim,
                                    rng);
    const LayerWeights<T>& s = small.layers[li];
    LayerWeights<T>& d = t.layers[li];
    d.ln1_g = net2net_widen_vec(s.ln1_g, gD);
    d.ln1_b = net2net_widen_vec(s.ln1_b, gD);
    d.ln2_g = net2net_widen_vec(s.ln2_g, gD);
    d.ln2_b = net2net_widen_vec(s.ln2_b, gD);
    d.wq = net2net_widen_cols(net2net_widen_rows(s.wq, gD), gD);
    d.wk = net2net_widen_cols(net2net_widen_rows(s.wk, gD), gD);
    d.wv = net2net_widen_cols(net2net_widen_rows(s.wv, gD), gD);
    d.wo = net2net_widen_cols(net2net_widen_rows(s.wo, gD), gD);
    d.bq = net2net_widen_vec(s.bq, gD);
    d.bk = net2net_widen_vec(s.bk, gD);
    d.bv = net2net_widen_vec(s.bv, gD);
    d.bo = net2net_widen_vec(s.bo, gD);
    d.w_in = net2net_widen_cols(net2net_widen_rows(s.w_in, gD), gH);
    d.b_in = net2net_widen_vec(s.b_in, gH);
    d.w_out = net2net_widen_cols(net2net_widen_rows(s.w_out, gH), gD);
    d.b_out = net2net_widen_vec(s.b_out, gD);
  }
  t.lnf_g = net2net_widen_vec(small.lnf_g, gD);
  t.lnf_b = net2net_widen_vec(small.lnf_b, gD);
  t.w_head = net2net_widen_rows(small.w_head, gD);
  t.b_head = small.b_head;
  return t;
}

}  // namespace mgrow
