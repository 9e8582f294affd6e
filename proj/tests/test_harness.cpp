#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "mgrow/harness.hpp"
#include "test_util.hpp"

namespace {

using mgrow::Batch;
using mgrow::CurvePoint;
using mgrow::ModelConfig;
using mgrow::ModelWeights;
using mgrow::Shape;
using mgrow::TaskKind;
using mgrow::TaskSpec;
using mgrow::Tensor;

using D = double;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- tasks ----

TEST(Tasks, CorpusIsSubstantialPlainText) {
  std::string_view c = mgrow::char_corpus();
  EXPECT_GE(c.size(), 60000u);
  std::set<char> distinct;
  for (char ch : c) {
    EXPECT_TRUE(ch == '\n' || (ch >= 32 && ch < 127)) << int(ch);
    distinct.insert(ch);
  }
  EXPECT_GE(distinct.size(), 20u);
}

TEST(Tasks, CharLmSplitsTrainAndEvalRegions) {
  TaskSpec t;
  t.kind = TaskKind::char_lm;
  t.seq_len = 24;
  std::string_view c = mgrow::char_corpus();
  const size_t split = c.size() * 9 / 10;
  const std::string train_region(c.substr(0, split + t.seq_len));
  const std::string eval_region(c.substr(split));

  auto decode = [&](const Tensor<int32_t>& toks, int64_t row) {
    std::string s;
    for (int64_t i = 0; i < t.seq_len; ++i)
      s.push_back(static_cast<char>(toks[row * t.seq_len + i]));
    return s;
  };
  for (int step = 0; step < 6; ++step) {
    Batch b = mgrow::sample_train(t, 4, step);
    for (int64_t r = 0; r < 4; ++r)
      EXPECT_NE(train_region.find(decode(b.tokens, r)), std::string::npos);
  }
  for (int idx = 0; idx < 3; ++idx) {
    Batch b = mgrow::sample_eval(t, 4, idx);
    for (int64_t r = 0; r < 4; ++r)
      EXPECT_NE(eval_region.find(decode(b.tokens, r)), std::string::npos);
  }
}

TEST(Tasks, CharLmDeterministicAndShifted) {
  TaskSpec t;
  t.kind = TaskKind::char_lm;
  t.seq_len = 16;
  Batch a = mgrow::sample_train(t, 3, 7);
  Batch b = mgrow::sample_train(t, 3, 7);
  Batch c = mgrow::sample_train(t, 3, 8);
  EXPECT_TRUE(testutil::bitwise_equal(a.tokens, b.tokens));
  EXPECT_FALSE(testutil::bitwise_equal(a.tokens, c.tokens));
  for (int64_t r = 0; r < 3; ++r) {
    for (int64_t i = 0; i + 1 < t.seq_len; ++i)
      EXPECT_EQ(a.targets[r * t.seq_len + i], a.tokens[r * t.seq_len + i + 1]);
    EXPECT_EQ(a.targets[r * t.seq_len + t.seq_len - 1], -1);
  }
}

TEST(Tasks, CopyTaskLayoutAndSplit) {
  TaskSpec t;
  t.kind = TaskKind::copy_task;
  t.vocab = 16;
  t.seq_len = 9;  // payload 4, SEP, payload 4
  const int64_t p = t.copy_payload();
  ASSERT_EQ(p, 4);

  std::set<std::string> train_payloads, eval_payloads;
  auto payload_of = [&](const Tensor<int32_t>& toks, int64_t r) {
    std::string s;
    for (int64_t i = 0; i < p; ++i)
      s += std::to_string(toks[r * t.seq_len + i]) + ",";
    return s;
  };
  for (int step = 0; step < 25; ++step) {
    Batch b = mgrow::sample_train(t, 2, step);
    for (int64_t r = 0; r < 2; ++r) {
      for (int64_t i = 0; i < p; ++i) {
        const int32_t v = b.tokens[r * t.seq_len + i];
        EXPECT_GE(v, 0);
        EXPECT_LT(v, 15);  // payload never uses the separator id
        EXPECT_EQ(b.tokens[r * t.seq_len + p + 1 + i], v);
        EXPECT_EQ(b.targets[r * t.seq_len + i], -1);
        EXPECT_EQ(b.targets[r * t.seq_len + p + 1 + i], v);
      }
      EXPECT_EQ(b.tokens[r * t.seq_len + p], 15);
      EXPECT_EQ(b.targets[r * t.seq_len + p], -1);
      train_payloads.insert(payload_of(b.tokens, r));
    }
  }
  for (int idx = 0; idx < 25; ++idx) {
    Batch b = mgrow::sample_eval(t, 2, idx);
    for (int64_t r = 0; r < 2; ++r) eval_payloads.insert(payload_of(b.tokens, r));
  }
  for (const std::string& s : eval_payloads) EXPECT_EQ(train_payloads.count(s), 0u) << s;
}

TEST(Tasks, ModularAdditionIsExhaustivelyDisjoint) {
  TaskSpec t;
  t.kind = TaskKind::modular_addition;
  t.vocab = 24;  // m = 23
  t.seq_len = 4;
  const int64_t m = t.modulus();
  for (int step = 0; step < 50; ++step) {
    Batch b = mgrow::sample_train(t, 4, step);
    for (int64_t r = 0; r < 4; ++r) {
      const int64_t a = b.tokens[r * 4 + 0], bb = b.tokens[r * 4 + 1];
      EXPECT_EQ(b.tokens[r * 4 + 2], m);  // SEP
      EXPECT_EQ(b.tokens[r * 4 + 3], (a + bb) % m);
      EXPECT_NE((a * m + bb) % 10, 0);  // train half of the grid
      EXPECT_EQ(b.targets[r * 4 + 2], (a + bb) % m);
      EXPECT_EQ(b.targets[r * 4 + 0], -1);
      EXPECT_EQ(b.targets[r * 4 + 3], -1);
    }
  }
  for (int idx = 0; idx < 50; ++idx) {
    Batch b = mgrow::sample_eval(t, 4, idx);
    for (int64_t r = 0; r < 4; ++r) {
      const int64_t a = b.tokens[r * 4 + 0], bb = b.tokens[r * 4 + 1];
      EXPECT_EQ((a * m + bb) % 10, 0);  // eval half of the grid
    }
  }
}

TEST(Tasks, ModelCompatibilityIsChecked) {
  TaskSpec t;
  t.kind = TaskKind::copy_task;
  t.vocab = 16;
  t.seq_len = 9;
  ModelConfig causal{.layers = 1, .dim = 8, .heads = 2, .ffn_ratio = 2,
                     .vocab = 16, .seq_len = 9, .causal = true};
  EXPECT_THROW(mgrow::check_task_model(t, causal), mgrow::ConfigError);
  ModelConfig good = causal;
  good.causal = false;
  EXPECT_NO_THROW(mgrow::check_task_model(t, good));
  ModelConfig tiny_vocab = good;
  tiny_vocab.vocab = 8;
  EXPECT_THROW(mgrow::check_task_model(t, tiny_vocab), mgrow::ConfigError);

  TaskSpec bad = t;
  bad.seq_len = 8;  // even: no room for SEP + equal halves
  EXPECT_THROW(bad.validate(), mgrow::ConfigError);
}

// ---- ledger and ratios ----

TEST(Harness, SavingRatioReproducesPublishedTables) {
  const double r1 = mgrow::flops_saving_ratio(12.9e18, 3.0e18);
  EXPECT_NEAR(r1, 0.767, 5e-4);
  EXPECT_LT(std::abs(r1 - 0.764), 0.01);  // printed table value, 1 pp
  const double r2 = mgrow::flops_saving_ratio(8.9e19, 5.4e19);
  EXPECT_NEAR(r2, 0.393, 5e-4);
  EXPECT_LT(std::abs(r2 - 0.392), 0.005);  // printed table value, 0.5 pp
  EXPECT_EQ(mgrow::flops_saving_ratio(7.0e9, 7.0e9), 0.0);
  EXPECT_LT(mgrow::flops_saving_ratio(1.0e9, 2.0e9), 0.0);  // slower than scratch
  EXPECT_THROW(mgrow::flops_saving_ratio(0.0, 1.0), mgrow::NumericError);
}

TEST(Harness, LedgerAddsExactIntegers) {
  mgrow::FlopsLedger led;
  led.warmup_flops = 123456789012345ull;
  uint64_t sum = 0;
  for (uint64_t inc : {7ull, 1ull << 40, 999999937ull, 3ull}) {
    led.charge(inc);
    sum += inc;
  }
  EXPECT_EQ(led.step_flops, sum);
  EXPECT_EQ(led.total(), led.warmup_flops + sum);
  EXPECT_THROW(led.charge(0), mgrow::NumericError);
}

TEST(Harness, ThresholdInterpolationIsLinear) {
  std::vector<CurvePoint> curve = {{0, 2.5, 2.0, 100}, {10, 1.2, 1.0, 200},
                                   {20, 0.8, 0.9, 260}};
  EXPECT_EQ(mgrow::flops_at_threshold(curve, 2.0), 100.0);  // hit at first point
  EXPECT_EQ(mgrow::flops_at_threshold(curve, 1.5), 150.0);  // halfway 2.0 -> 1.0
  EXPECT_EQ(mgrow::flops_at_threshold(curve, 1.0), 200.0);
  EXPECT_NEAR(mgrow::flops_at_threshold(curve, 0.95), 230.0, 1e-9);
  EXPECT_TRUE(std::isnan(mgrow::flops_at_threshold(curve, 0.5)));
}

TEST(Harness, OperatorFlopsFormulasSpotChecks) {
  const mgrow::Shape s1 = {2, 2, 2, 1}, s2 = {3, 3, 3, 2};
  // Stage costs at rank 1: 48 + 72 + 72 + 216, each 2*|free_l|*|free_r|*|bound|.
  EXPECT_EQ(mgrow::mango_apply_flops(s1, s2, mgrow::MangoRanks{}), 408u);
  // Per-slab chain: (24 + 36 + 36) per slab, two slabs.
  EXPECT_EQ(mgrow::ligo_apply_flops(s1, s2), 192u);

  TaskSpec t;
  t.kind = TaskKind::modular_addition;
  t.vocab = 17;
  t.seq_len = 4;
  ModelConfig cfg{.layers = 2, .dim = 8, .heads = 2, .ffn_ratio = 2,
                  .vocab = 17, .seq_len = 4};
  mgrow::WarmupConfig wc;
  wc.steps = 5;
  wc.batch_size = 3;
  EXPECT_EQ(mgrow::warmup_total_flops(cfg, t, wc, 1000),
            5ull * (mgrow::flops_per_token_train(cfg) * 12 + 3000));
}

// ---- training loop ----

TaskSpec modadd_task() {
  TaskSpec t;
  t.kind = TaskKind::modular_addition;
  t.vocab = 17;
  t.seq_len = 4;
  t.data_seed = 5;
  return t;
}

ModelConfig modadd_cfg1() {
  return ModelConfig{.layers = 1, .dim = 8, .heads = 2, .ffn_ratio = 2,
                     .vocab = 17, .seq_len = 4};
}

TEST(Harness, PsiAtInitialEvalStopsBeforeTraining) {
  TaskSpec t = modadd_task();
  ModelWeights<D> w = mgrow::init_random<D>(modadd_cfg1(), 61);
  mgrow::TrainOptions o;
  o.max_steps = 50;
  o.psi = std::numeric_limits<double>::infinity();
  o.warmup_flops = 777;
  auto res = mgrow::train_model(w, t, o);
  EXPECT_TRUE(res.ledger.converged);
  EXPECT_EQ(res.steps_run, 0);
  ASSERT_EQ(res.curve.size(), 1u);
  EXPECT_EQ(res.ledger.total(), 777u);  // warmup cost only
  EXPECT_EQ(res.ledger.step_flops, 0u);
}

TEST(Harness, ScratchTwinsProduceIdenticalLedgers) {
  TaskSpec t = modadd_task();
  auto run = [&] {
    ModelWeights<D> w = mgrow::init_random<D>(modadd_cfg1(), 63);
    mgrow::TrainOptions o;
    o.max_steps = 12;
    o.eval_every = 4;
    return mgrow::train_model(w, t, o);
  };
  auto a = run();
  auto b = run();
  EXPECT_EQ(a.ledger.total(), b.ledger.total());
  ASSERT_EQ(a.curve.size(), b.curve.size());
  for (size_t i = 0; i < a.curve.size(); ++i) {
    EXPECT_EQ(a.curve[i].step, b.curve[i].step);
    EXPECT_EQ(a.curve[i].train_loss, b.curve[i].train_loss);
    EXPECT_EQ(a.curve[i].eval_loss, b.curve[i].eval_loss);
    EXPECT_EQ(a.curve[i].cum_flops, b.curve[i].cum_flops);
  }
}

TEST(Harness, ChargesExactlyPerStepAndRespectsBudget) {
  TaskSpec t = modadd_task();
  const ModelConfig cfg = modadd_cfg1();
  ModelWeights<D> w = mgrow::init_random<D>(cfg, 65);
  mgrow::TrainOptions o;
  o.max_steps = 9;
  o.batch = 3;
  o.eval_every = 3;
  auto res = mgrow::train_model(w, t, o);
  const uint64_t per_step = mgrow::flops_per_token_train(cfg) * 3 * 4;
  EXPECT_EQ(res.steps_run, 9);
  EXPECT_EQ(res.ledger.step_flops, 9 * per_step);
  EXPECT_FALSE(res.ledger.converged);
  for (size_t i = 1; i < res.curve.size(); ++i)
    EXPECT_GT(res.curve[i].cum_flops, res.curve[i - 1].cum_flops);

  ModelWeights<D> w2 = mgrow::init_random<D>(cfg, 65);
  mgrow::TrainOptions ob = o;
  ob.flops_budget = 4 * per_step + 1;  // room for exactly four steps
  auto r2 = mgrow::train_model(w2, t, ob);
  EXPECT_EQ(r2.steps_run, 4);
  EXPECT_FALSE(r2.ledger.converged);
  EXPECT_LE(r2.ledger.total(), ob.flops_budget);
}

TEST(Harness, CopyTaskTrainingImprovesEval) {
  TaskSpec t;
  t.kind = TaskKind::copy_task;
  t.vocab = 12;
  t.seq_len = 7;
  t.data_seed = 9;
  ModelConfig cfg{.layers = 1, .dim = 16, .heads = 2, .ffn_ratio = 2,
                  .vocab = 12, .seq_len = 7, .causal = false};
  ModelWeights<D> w = mgrow::init_random<D>(cfg, 67);
  mgrow::TrainOptions o;
  o.max_steps = 60;
  o.batch = 8;
  o.lr = 3e-3;
  o.eval_every = 10;
  auto res = mgrow::train_model(w, t, o);
  EXPECT_LT(res.best_eval, res.curve.front().eval_loss);
}

// ---- comparison, ablation, export ----

TEST(Harness, CompareMethodsTinyRunProducesPairedReport) {
  TaskSpec t = modadd_task();
  const ModelConfig cfg1 = modadd_cfg1();
  ModelConfig cfg2 = cfg1;
  cfg2.layers = 2;
  cfg2.dim = 12;
  cfg2.heads = 3;

  mgrow::CompareOptions co;
  co.seeds = {1, 2};
  co.pretrain_steps = 4;
  co.pretrain.batch = 4;
  co.target.max_steps = 6;
  co.target.eval_every = 2;
  co.target.batch = 4;
  co.target.eval_batch = 8;
  co.warmup.steps = 2;
  co.warmup.batch_size = 4;

  auto rep = mgrow::compare_methods<D>(t, cfg1, cfg2, co);
  ASSERT_EQ(rep.rows.size(), co.methods.size() * co.seeds.size());

  const Shape s1 = {cfg1.slabs(), cfg1.dim, cfg1.dim, 1};
  const Shape s2 = {cfg2.slabs(), cfg2.dim, cfg2.dim, 2};
  for (const auto& row : rep.rows) {
    if (row.method == "random") {
      EXPECT_TRUE(row.converged);
      EXPECT_EQ(row.r, 0.0);
      EXPECT_EQ(row.run.ledger.warmup_flops, 0u);
    }
    if (row.method == "mango") {
      EXPECT_EQ(row.warmup_trace.size(), 2u);
      EXPECT_EQ(row.run.ledger.warmup_flops,
                mgrow::warmup_total_flops(
                    cfg2, t, [&] { auto w = co.warmup; return w; }(),
                    mgrow::mango_apply_flops(s1, s2, co.warmup.ranks)));
      EXPECT_GT(row.operator_params, 0);
    }
    if (row.method == "stack" || row.method == "net2net")
      EXPECT_EQ(row.run.ledger.warmup_flops, 0u);
    for (size_t i = 1; i < row.run.curve.size(); ++i)
      EXPECT_GE(row.run.curve[i].cum_flops, row.run.curve[i - 1].cum_flops);
  }

  // Paired design: the same method+seed sees identical data, so psi agrees
  // across methods within one seed.
  for (uint64_t seed : co.seeds) {
    double psi = std::numeric_limits<double>::quiet_NaN();
    for (const auto& row : rep.rows)
      if (row.seed == seed) {
        if (std::isnan(psi)) psi = row.psi;
        EXPECT_EQ(row.psi, psi);
      }
  }

  const std::string csv_path = "compare_tiny_test.csv";
  mgrow::write_compare_csv(rep, csv_path);
  std::string text = read_file(csv_path);
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "method,seed,step,train_loss,eval_loss,cum_flops");
  size_t rows = 0, expected = 1;  // header
  for (char c : text) rows += c == '\n';
  for (const auto& row : rep.rows) expected += row.run.curve.size();
  EXPECT_EQ(rows, expected);

  auto j = mgrow::compare_summary_json(rep);
  EXPECT_EQ(j["format"], "mgrow.compare.v1");
  EXPECT_EQ(j["runs"].size(), rep.rows.size());
  EXPECT_GE(j["aggregate"].size(), 1u);
  std::remove(csv_path.c_str());
}

TEST(Harness, AblateRanksReportsParamsAndSpread) {
  TaskSpec t = modadd_task();
  const ModelConfig cfg1 = modadd_cfg1();
  ModelConfig cfg2 = cfg1;
  cfg2.dim = 12;
  cfg2.heads = 3;

  mgrow::CompareOptions co;
  co.seeds = {1};
  co.pretrain_steps = 3;
  co.pretrain.batch = 4;
  co.target.max_steps = 4;
  co.target.eval_every = 2;
  co.target.batch = 4;
  co.warmup.steps = 2;
  co.warmup.batch_size = 4;

  auto rep = mgrow::ablate_ranks<D>(t, cfg1, cfg2, {1, 2, 4}, co);
  ASSERT_EQ(rep.ranks.size(), 3u);
  int64_t prev = 0;
  for (const auto& row : rep.ranks) {
    EXPECT_GT(row.operator_params, prev);
    prev = row.operator_params;
    EXPECT_EQ(row.r_per_seed.size(), 1u);
    EXPECT_EQ(row.warmup_end_eval.size(), 1u);
    EXPECT_TRUE(std::isfinite(row.warmup_end_eval[0]));
  }
  auto j = mgrow::ablate_summary_json(rep);
  EXPECT_EQ(j["format"], "mgrow.ablate.v1");
  EXPECT_EQ(j["ranks"].size(), 3u);
  EXPECT_TRUE(j.contains("r_spread_across_ranks"));
}

TEST(Harness, AttentionExportIsStableAndStochastic) {
  ModelConfig cfg{.layers = 2, .dim = 8, .heads = 2, .ffn_ratio = 2,
                  .vocab = 17, .seq_len = 6};
  ModelWeights<D> w = mgrow::init_random<D>(cfg, 71);
  Tensor<int32_t> toks({1, 6}, {3, 1, 4, 1, 5, 9});

  const std::string p1 = "attn_export_a.csv", p2 = "attn_export_b.csv";
  mgrow::export_attention_maps(w, toks, p1);
  mgrow::export_attention_maps(w, toks, p2);
  const std::string a = read_file(p1), b = read_file(p2);
  EXPECT_EQ(a, b);  // byte-identical re-export

  size_t lines = 0;
  for (char c : a) lines += c == '\n';
  EXPECT_EQ(lines, 2u * 2u * 6u);  // layers * heads * seq

  std::istringstream in(a);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cell;
    double sum = 0;
    int col = 0;
    while (std::getline(ls, cell, ',')) {
      if (col++ < 3) continue;  // layer, head, row indices
      sum += std::stod(cell);
    }
    EXPECT_EQ(col, 3 + 6);
    EXPECT_NEAR(sum, 1.0, 1e-6);  // each row is a softmax distribution
  }
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

}  // namespace
