#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "mgrow/training.hpp"
#include "test_util.hpp"

namespace {

using mgrow::Batch;
using mgrow::BatchStream;
using mgrow::GrowthMethod;
using mgrow::MangoCores;
using mgrow::ModelConfig;
using mgrow::ModelWeights;
using mgrow::Shape;
using mgrow::Tensor;
using mgrow::WarmupConfig;

using D = double;

// Plain-double Adam written from the update formula, independent of the
// library implementation.
struct ScalarAdamRef {
  double m = 0, v = 0;
  int64_t t = 0;
  double step(double p, double g, double lr, double b1, double b2, double eps,
              double wd) {
    ++t;
    m = b1 * m + (1 - b1) * g;
    v = b2 * v + (1 - b2) * g * g;
    const double mhat = m / (1 - std::pow(b1, static_cast<double>(t)));
    const double vhat = v / (1 - std::pow(b2, static_cast<double>(t)));
    return p - lr * mhat / (std::sqrt(vhat) + eps) - lr * wd * p;
  }
};

BatchStream random_lm_stream(const ModelConfig& cfg, int batch, uint64_t seed) {
  return [cfg, batch, seed](int step) {
    Tensor<int32_t> toks({batch, cfg.seq_len});
    mgrow::CounterRng rng(mgrow::CounterRng::derive(seed, static_cast<uint64_t>(step)));
    for (auto& v : toks.data())
      v = static_cast<int32_t>(rng.next_below(static_cast<uint64_t>(cfg.vocab)));
    return Batch{toks, mgrow::shift_targets(toks)};
  };
}

BatchStream fixed_batch_stream(const Batch& b) {
  return [b](int) { return b; };
}

TEST(Adam, MatchesScalarReference) {
  mgrow::AdamState<D> st;
  st.lr = 0.1;
  Tensor<D> p = mgrow::Tensor<D>::scalar(1.0);
  std::vector<std::pair<std::string, Tensor<D>*>> params = {{"p", &p}};

  ScalarAdamRef ref;
  double pr = 1.0;
  const double gs[] = {1.0, -0.3, 0.08, 2.5, 0.0, -1.1};
  for (double g : gs) {
    mgrow::adam_step(st, params, {Tensor<D>::scalar(g)});
    pr = ref.step(pr, g, 0.1, 0.9, 0.999, 1e-8, 0.0);
    EXPECT_EQ(p[0], pr);  // decay=0, identical arithmetic order
  }
  EXPECT_EQ(st.t, 6);

  // First step from p=1, g=1: bias corrections cancel, p' ~ 1 - lr.
  mgrow::AdamState<D> st1;
  st1.lr = 0.1;
  Tensor<D> q = Tensor<D>::scalar(1.0);
  std::vector<std::pair<std::string, Tensor<D>*>> qp = {{"q", &q}};
  mgrow::adam_step(st1, qp, {Tensor<D>::scalar(1.0)});
  EXPECT_NEAR(q[0], 0.9, 1e-8);
}

TEST(Adam, DecoupledDecayMatchesReference) {
  mgrow::AdamState<D> st;
  st.lr = 0.05;
  st.weight_decay = 0.1;
  Tensor<D> p = Tensor<D>::scalar(2.0);
  std::vector<std::pair<std::string, Tensor<D>*>> params = {{"p", &p}};
  ScalarAdamRef ref;
  double pr = 2.0;
  for (double g : {0.4, -0.2, 1.0}) {
    mgrow::adam_step(st, params, {Tensor<D>::scalar(g)});
    pr = ref.step(pr, g, 0.05, 0.9, 0.999, 1e-8, 0.1);
    EXPECT_NEAR(p[0], pr, 1e-15);
  }
  // Zero grad with decay still shrinks the weight.
  const double before = p[0];
  mgrow::adam_step(st, params, {Tensor<D>::scalar(0.0)});
  EXPECT_LT(std::abs(p[0]), std::abs(before));
}

TEST(Adam, ZeroGradLeavesParamUntouchedWithoutDecay) {
  mgrow::AdamState<D> st;
  st.lr = 0.3;
  Tensor<D> p = mgrow::randn<D>({3, 2}, 5);
  Tensor<D> keep = p;
  std::vector<std::pair<std::string, Tensor<D>*>> params = {{"p", &p}};
  mgrow::adam_step(st, params, {mgrow::zeros<D>({3, 2})});
  mgrow::adam_step(st, params, {mgrow::zeros<D>({3, 2})});
  EXPECT_TRUE(testutil::bitwise_equal(p, keep));
}

TEST(Adam, DeterministicAndStateChecked) {
  auto run = [] {
    mgrow::AdamState<D> st;
    st.lr = 0.01;
    Tensor<D> p = mgrow::randn<D>({4}, 6);
    std::vector<std::pair<std::string, Tensor<D>*>> params = {{"p", &p}};
    for (int i = 0; i < 5; ++i)
      mgrow::adam_step(st, params, {mgrow::randn<D>({4}, 100 + i)});
    return p;
  };
  EXPECT_TRUE(testutil::bitwise_equal(run(), run()));

  mgrow::AdamState<D> st;
  Tensor<D> a = mgrow::zeros<D>({2}), b = mgrow::zeros<D>({2});
  std::vector<std::pair<std::string, Tensor<D>*>> one = {{"a", &a}};
  std::vector<std::pair<std::string, Tensor<D>*>> two = {{"a", &a}, {"b", &b}};
  mgrow::adam_step(st, one, {mgrow::zeros<D>({2})});
  EXPECT_THROW(mgrow::adam_step(st, two, {mgrow::zeros<D>({2}), mgrow::zeros<D>({2})}),
               mgrow::ShapeError);
  EXPECT_THROW(mgrow::adam_step(st, one, {mgrow::zeros<D>({3})}), mgrow::ShapeError);
}

TEST(Adam, RejectsNonFiniteGradients) {
  mgrow::AdamState<D> st;
  Tensor<D> p = mgrow::zeros<D>({2});
  std::vector<std::pair<std::string, Tensor<D>*>> params = {{"w_in", &p}};
  Tensor<D> g = mgrow::zeros<D>({2});
  g[1] = std::numeric_limits<double>::quiet_NaN();
  try {
    mgrow::adam_step(st, params, {g});
    FAIL() << "expected NumericError";
  } catch (const mgrow::NumericError& e) {
    EXPECT_NE(std::string(e.what()).find("w_in"), std::string::npos);
  }
}

// ---- warmup training ----

ModelConfig small_cfg() {
  return ModelConfig{.layers = 1, .dim = 8, .heads = 2, .ffn_ratio = 2,
                     .vocab = 13, .seq_len = 8};
}

TEST(Warmup, StepZeroIdentityLossEqualsSmallModelLoss) {
  const ModelConfig cfg = small_cfg();
  ModelWeights<D> small = mgrow::init_random<D>(cfg, 31);
  const Tensor<D> m1 = mgrow::pack_weights(small);
  MangoCores<D> cores =
      mgrow::mango_init<D>(m1.shape(), m1.shape(), mgrow::MangoRanks{}, 0, 0.0);

  BatchStream data = random_lm_stream(cfg, 4, 77);
  WarmupConfig wc;
  wc.steps = 1;
  wc.lr = 1e-4;
  auto trace = mgrow::train_operator(cores, m1, small, cfg, cfg, data, wc);
  ASSERT_EQ(trace.size(), 1u);

  Batch b0 = data(0);
  const double direct = mgrow::eval_loss(small, b0.tokens, b0.targets);
  EXPECT_NEAR(trace[0], direct, 1e-5);
}

TEST(Warmup, OverfitSmokeLowersLoss) {
  const ModelConfig cfg1 = small_cfg();
  ModelConfig cfg2 = cfg1;
  cfg2.layers = 2;
  cfg2.dim = 12;
  cfg2.heads = 3;
  ModelWeights<D> small = mgrow::init_random<D>(cfg1, 33);
  const Tensor<D> m1 = mgrow::pack_weights(small);
  const Shape s2 = {cfg2.slabs(), cfg2.dim, cfg2.dim, 2};
  MangoCores<D> cores = mgrow::mango_init<D>(m1.shape(), s2, mgrow::MangoRanks{}, 1, 1e-3);

  Batch fixed = random_lm_stream(cfg1, 8, 5)(0);
  WarmupConfig wc;
  wc.steps = 40;
  wc.lr = 3e-3;
  auto trace =
      mgrow::train_operator(cores, m1, small, cfg1, cfg2, fixed_batch_stream(fixed), wc);
  ASSERT_EQ(trace.size(), 40u);
  for (double v : trace) EXPECT_TRUE(std::isfinite(v));
  EXPECT_LT(trace.back(), trace.front());
}

TEST(Warmup, OnlyOperatorStateChanges) {
  const ModelConfig cfg1 = small_cfg();
  ModelConfig cfg2 = cfg1;
  cfg2.dim = 12;
  cfg2.heads = 3;
  ModelWeights<D> small = mgrow::init_random<D>(cfg1, 35);
  const ModelWeights<D> snapshot = small;
  const Tensor<D> m1 = mgrow::pack_weights(small);
  const Tensor<D> m1_snapshot = m1;
  const Shape s2 = {cfg2.slabs(), cfg2.dim, cfg2.dim, 1};
  MangoCores<D> cores = mgrow::mango_init<D>(m1.shape(), s2, mgrow::MangoRanks{}, 2, 1e-3);
  const MangoCores<D> cores0 = cores;

  WarmupConfig wc;
  wc.steps = 5;
  wc.lr = 1e-3;
  mgrow::train_operator(cores, m1, small, cfg1, cfg2, random_lm_stream(cfg1, 4, 9), wc);

  EXPECT_TRUE(testutil::bitwise_equal(m1, m1_snapshot));
  auto na = small.named_tensors();
  auto nb = snapshot.named_tensors();
  for (size_t i = 0; i < na.size(); ++i)
    EXPECT_TRUE(testutil::bitwise_equal(*na[i].second, *nb[i].second)) << na[i].first;
  EXPECT_FALSE(testutil::bitwise_equal(cores.s_b, cores0.s_b));
  EXPECT_FALSE(testutil::bitwise_equal(cores.s_i, cores0.s_i));
}

TEST(Warmup, TraceIsDeterministic) {
  const ModelConfig cfg1 = small_cfg();
  ModelConfig cfg2 = cfg1;
  cfg2.layers = 2;
  ModelWeights<D> small = mgrow::init_random<D>(cfg1, 37);
  const Tensor<D> m1 = mgrow::pack_weights(small);
  const Shape s2 = {cfg2.slabs(), cfg2.dim, cfg2.dim, 2};

  WarmupConfig wc;
  wc.steps = 6;
  wc.lr = 1e-3;
  auto run = [&] {
    MangoCores<D> cores =
        mgrow::mango_init<D>(m1.shape(), s2, mgrow::MangoRanks{}, 3, 1e-3);
    auto trace = mgrow::train_operator(cores, m1, small, cfg1, cfg2,
                                       random_lm_stream(cfg1, 4, 11), wc);
    return std::make_pair(trace, cores);
  };
  auto [ta, ca] = run();
  auto [tb, cb] = run();
  ASSERT_EQ(ta.size(), tb.size());
  for (size_t i = 0; i < ta.size(); ++i) EXPECT_EQ(ta[i], tb[i]);
  EXPECT_TRUE(testutil::bitwise_equal(ca.s_b, cb.s_b));
  EXPECT_TRUE(testutil::bitwise_equal(ca.s_o, cb.s_o));
  EXPECT_TRUE(testutil::bitwise_equal(ca.s_l, cb.s_l));
  EXPECT_TRUE(testutil::bitwise_equal(ca.s_i, cb.s_i));
}

TEST(Warmup, LigoOperatorAlsoTrains) {
  const ModelConfig cfg1 = small_cfg();
  ModelConfig cfg2 = cfg1;
  cfg2.dim = 12;
  cfg2.heads = 3;
  ModelWeights<D> small = mgrow::init_random<D>(cfg1, 39);
  const Tensor<D> m1 = mgrow::pack_weights(small);
  const Shape s2 = {cfg2.slabs(), cfg2.dim, cfg2.dim, 1};
  mgrow::LigoOperator<D> op = mgrow::ligo_init<D>(m1.shape(), s2, 4, 1e-3);

  Batch fixed = random_lm_stream(cfg1, 8, 13)(0);
  WarmupConfig wc;
  wc.steps = 30;
  wc.lr = 3e-3;
  auto trace =
      mgrow::train_operator(op, m1, small, cfg1, cfg2, fixed_batch_stream(fixed), wc);
  ASSERT_EQ(trace.size(), 30u);
  EXPECT_LT(trace.back(), trace.front());
}

TEST(Warmup, DistillationLossIsZeroForIdentityOperator) {
  const ModelConfig cfg = small_cfg();
  ModelWeights<D> small = mgrow::init_random<D>(cfg, 41);
  const Tensor<D> m1 = mgrow::pack_weights(small);
  MangoCores<D> cores =
      mgrow::mango_init<D>(m1.shape(), m1.shape(), mgrow::MangoRanks{}, 0, 0.0);
  WarmupConfig wc;
  wc.steps = 1;
  wc.loss = mgrow::WarmupLoss::distill_to_small;
  auto trace = mgrow::train_operator(cores, m1, small, cfg, cfg,
                                     random_lm_stream(cfg, 4, 15), wc);
  EXPECT_LE(trace[0], 1e-18);
}

TEST(Warmup, DistillationTrainsUnderGrowth) {
  const ModelConfig cfg1 = small_cfg();
  ModelConfig cfg2 = cfg1;
  cfg2.dim = 12;
  cfg2.heads = 3;
  ModelWeights<D> small = mgrow::init_random<D>(cfg1, 43);
  const Tensor<D> m1 = mgrow::pack_weights(small);
  const Shape s2 = {cfg2.slabs(), cfg2.dim, cfg2.dim, 1};
  MangoCores<D> cores = mgrow::mango_init<D>(m1.shape(), s2, mgrow::MangoRanks{}, 5, 1e-3);

  Batch fixed = random_lm_stream(cfg1, 8, 17)(0);
  WarmupConfig wc;
  wc.steps = 30;
  wc.lr = 3e-3;
  wc.loss = mgrow::WarmupLoss::distill_to_small;
  auto trace =
      mgrow::train_operator(cores, m1, small, cfg1, cfg2, fixed_batch_stream(fixed), wc);
  EXPECT_GT(trace.front(), 0.0);
  EXPECT_LT(trace.back(), trace.front());
}

TEST(Warmup, RejectsBadInputsAndReportsDivergenceStep) {
  const ModelConfig cfg = small_cfg();
  ModelWeights<D> small = mgrow::init_random<D>(cfg, 45);
  const Tensor<D> m1 = mgrow::pack_weights(small);
  MangoCores<D> cores =
      mgrow::mango_init<D>(m1.shape(), m1.shape(), mgrow::MangoRanks{}, 0, 0.0);
  BatchStream data = random_lm_stream(cfg, 2, 19);

  WarmupConfig zero;
  zero.steps = 0;
  EXPECT_THROW(mgrow::train_operator(cores, m1, small, cfg, cfg, data, zero),
               mgrow::ConfigError);

  WarmupConfig wc;
  wc.steps = 1;
  Tensor<D> bad = mgrow::randn<D>({3, 8, 8, 1}, 1);
  EXPECT_THROW(mgrow::train_operator(cores, bad, small, cfg, cfg, data, wc),
               mgrow::ShapeError);

  ModelConfig other = cfg;
  other.vocab = 14;
  EXPECT_THROW(mgrow::train_operator(cores, m1, small, other, other, data, wc),
               mgrow::ConfigError);

  // A poisoned frozen weight makes the loss non-finite; the loop must name
  // the step it died at.
  ModelWeights<D> sick = small;
  sick.w_head[0] = std::numeric_limits<double>::quiet_NaN();
  const Tensor<D> m1s = mgrow::pack_weights(sick);
  try {
    mgrow::train_operator(cores, m1s, sick, cfg, cfg, data, wc);
    FAIL() << "expected NumericError";
  } catch (const mgrow::NumericError& e) {
    EXPECT_NE(std::string(e.what()).find("step 0"), std::string::npos) << e.what();
  }
}

// ---- grow() dispatch ----

TEST(Grow, RandomMethodIsScratchInit) {
  const ModelConfig cfg1 = small_cfg();
  ModelConfig cfg2 = cfg1;
  cfg2.layers = 2;
  cfg2.dim = 12;
  cfg2.heads = 3;
  ModelWeights<D> small = mgrow::init_random<D>(cfg1, 47);
  WarmupConfig wc;
  wc.seed = 123;
  auto r = mgrow::grow(small, cfg1, cfg2, GrowthMethod::random, nullptr, wc);
  ModelWeights<D> scratch = mgrow::init_random<D>(cfg2, 123);
  auto na = r.weights.named_tensors();
  auto nb = scratch.named_tensors();
  ASSERT_EQ(na.size(), nb.size());
  for (size_t i = 0; i < na.size(); ++i)
    EXPECT_TRUE(testutil::bitwise_equal(*na[i].second, *nb[i].second)) << na[i].first;
  EXPECT_TRUE(r.warmup_trace.empty());
  EXPECT_EQ(r.operator_params, 0);
}

TEST(Grow, MangoIdentityAtEqualShapesMatchesSmallLogits) {
  const ModelConfig cfg = small_cfg();
  ModelWeights<D> small = mgrow::init_random<D>(cfg, 49);
  WarmupConfig wc;
  wc.steps = 0;
  wc.init_noise = 0.0;
  auto r = mgrow::grow(small, cfg, cfg, GrowthMethod::mango, nullptr, wc);
  EXPECT_EQ(r.operator_params,
            mgrow::param_count_mango(cfg.dim, cfg.dim, cfg.slabs(), cfg.slabs(),
                                     cfg.layers, cfg.layers, mgrow::MangoRanks{}));
  for (int trial = 0; trial < 3; ++trial) {
    Batch b = random_lm_stream(cfg, 3, 600 + trial)(0);
    Tensor<D> la = mgrow::forward_logits(small, b.tokens);
    Tensor<D> lb = mgrow::forward_logits(r.weights, b.tokens);
    EXPECT_LT(testutil::max_abs_diff(la, lb), 1e-5);
  }
}

TEST(Grow, MangoWithWarmupProducesTraceAndValidWeights) {
  const ModelConfig cfg1 = small_cfg();
  ModelConfig cfg2 = cfg1;
  cfg2.layers = 2;
  cfg2.dim = 12;
  cfg2.heads = 3;
  ModelWeights<D> small = mgrow::init_random<D>(cfg1, 51);
  WarmupConfig wc;
  wc.steps = 5;
  wc.lr = 1e-3;
  wc.seed = 7;
  auto r = mgrow::grow(small, cfg1, cfg2, GrowthMethod::mango,
                       random_lm_stream(cfg1, 4, 21), wc);
  EXPECT_EQ(r.warmup_trace.size(), 5u);
  EXPECT_EQ(r.weights.cfg, cfg2);
  Batch b = random_lm_stream(cfg2, 2, 23)(0);
  EXPECT_TRUE(mgrow::all_finite(mgrow::forward_logits(r.weights, b.tokens)));
}

TEST(Grow, LigoMethodTrainsAndAssembles) {
  const ModelConfig cfg1 = small_cfg();
  ModelConfig cfg2 = cfg1;
  cfg2.dim = 12;
  cfg2.heads = 3;
  ModelWeights<D> small = mgrow::init_random<D>(cfg1, 53);
  WarmupConfig wc;
  wc.steps = 4;
  wc.lr = 1e-3;
  auto r = mgrow::grow(small, cfg1, cfg2, GrowthMethod::ligo,
                       random_lm_stream(cfg1, 4, 25), wc);
  EXPECT_EQ(r.warmup_trace.size(), 4u);
  EXPECT_EQ(r.operator_params,
            mgrow::param_count_ligo(cfg1.dim, cfg2.dim, cfg1.slabs(), cfg1.layers,
                                    cfg2.layers));
  Batch b = random_lm_stream(cfg2, 2, 27)(0);
  EXPECT_TRUE(mgrow::all_finite(mgrow::forward_logits(r.weights, b.tokens)));
}

TEST(Grow, StackDoublesDepthWithLayerPattern) {
  ModelConfig cfg1{.layers = 2, .dim = 8, .heads = 2, .ffn_ratio = 2,
                   .vocab = 13, .seq_len = 8};
  ModelConfig cfg2 = cfg1;
  cfg2.layers = 4;
  ModelWeights<D> small = mgrow::init_random<D>(cfg1, 55);
  auto r = mgrow::grow(small, cfg1, cfg2, GrowthMethod::stack, nullptr, WarmupConfig{});
  ASSERT_EQ(r.weights.layers.size(), 4u);
  for (int j = 0; j < 4; ++j)
    EXPECT_TRUE(testutil::bitwise_equal(r.weights.layers[j].wq,
                                        small.layers[j % 2].wq));
  EXPECT_TRUE(testutil::bitwise_equal(r.weights.tok_emb, small.tok_emb));

  // With width growth it goes through neuron splitting first.
  ModelConfig cfg3 = cfg2;
  cfg3.dim = 12;
  cfg3.heads = 3;
  auto r3 = mgrow::grow(small, cfg1, cfg3, GrowthMethod::stack, nullptr, WarmupConfig{});
  EXPECT_EQ(r3.weights.cfg, cfg3);
  Batch b = random_lm_stream(cfg3, 2, 29)(0);
  EXPECT_TRUE(mgrow::all_finite(mgrow::forward_logits(r3.weights, b.tokens)));
}

TEST(Grow, NetSplitDepthGrowthPreservesLogitsExactly) {
  const ModelConfig cfg1 = small_cfg();
  ModelConfig cfg2 = cfg1;
  cfg2.layers = 3;
  ModelWeights<D> small = mgrow::init_random<D>(cfg1, 57);
  auto r = mgrow::grow(small, cfg1, cfg2, GrowthMethod::net2net, nullptr, WarmupConfig{});
  ASSERT_EQ(r.weights.cfg.layers, 3);
  Batch b = random_lm_stream(cfg1, 3, 31)(0);
  Tensor<D> la = mgrow::forward_logits(small, b.tokens);
  Tensor<D> lb = mgrow::forward_logits(r.weights, b.tokens);
  EXPECT_LE(testutil::max_abs_diff(la, lb), 0.0);

  // Combined width+depth growth still runs.
  ModelConfig cfg3 = cfg2;
  cfg3.dim = 12;
  cfg3.heads = 3;
  auto r3 = mgrow::grow(small, cfg1, cfg3, GrowthMethod::net2net, nullptr, WarmupConfig{});
  EXPECT_EQ(r3.weights.cfg, cfg3);
  EXPECT_TRUE(mgrow::all_finite(mgrow::forward_logits(r3.weights, b.tokens)));
}

TEST(Grow, RejectsShrinkAndSlabChanges) {
  const ModelConfig cfg1 = small_cfg();
  ModelWeights<D> small = mgrow::init_random<D>(cfg1, 59);
  ModelConfig narrow_cfg = cfg1;
  narrow_cfg.dim = 4;
  EXPECT_THROW(mgrow::grow(small, cfg1, narrow_cfg, GrowthMethod::mango, nullptr,
                           WarmupConfig{}),
               mgrow::ShapeError);
  ModelConfig fat = cfg1;
  fat.ffn_ratio = 3;
  EXPECT_THROW(
      mgrow::grow(small, cfg1, fat, GrowthMethod::mango, nullptr, WarmupConfig{}),
      mgrow::ShapeError);
  ModelConfig wrong = cfg1;
  wrong.vocab = 20;
  EXPECT_THROW(mgrow::grow(small, wrong, wrong, GrowthMethod::mango, nullptr,
                           WarmupConfig{}),
               mgrow::ConfigError);
}

TEST(Grow, MethodNamesRoundTrip) {
  for (auto m : {GrowthMethod::mango, GrowthMethod::ligo, GrowthMethod::stack,
                 GrowthMethod::net2net, GrowthMethod::random})
    EXPECT_EQ(mgrow::method_from_string(mgrow::method_name(m)), m);
  EXPECT_THROW(mgrow::method_from_string("bert2bert"), mgrow::ConfigError);
}

}  // namespace
