#pragma once

// Desk-scale experiment harness: full-model training with an exact integer
// FLOPs ledger, threshold-based cost measurement, paired method comparison,
// and ring-rank ablation.
//
// Accounting conventions (applied uniformly so ratios are meaningful):
//   - a training step costs flops_per_token_train(cfg) x tokens in the batch;
//   - operator warmup is charged to grown methods: per warmup step, the
//     target model's training FLOPs plus 3x the operator contraction cost
//     (same forward:train factor as the model);
//   - evaluation passes are free; every method evaluates on the same
//     schedule, so the comparison is unaffected;
//   - the cost to reach a loss threshold between two logged points is read
//     off the curve by linear interpolation.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "mgrow/tasks.hpp"
#include "mgrow/training.hpp"

namespace mgrow {

// ---- FLOPs bookkeeping ----

struct FlopsLedger {
  std::string method = "scratch";
  uint64_t warmup_flops = 0;  // charged before step 1
  uint64_t step_flops = 0;    // sum of per-step training increments
  double psi = std::numeric_limits<double>::quiet_NaN();
  bool converged = false;

  uint64_t total() const { return warmup_flops + step_flops; }
  void charge(uint64_t inc) {
    if (inc == 0) throw NumericError("ledger: increments must be positive");
    step_flops += inc;
  }
};

inline double flops_saving_ratio(double xi_scratch, double xi_method) {
  if (!(xi_scratch > 0))
    throw NumericError("flops_saving_ratio: scratch cost must be positive");
  return (xi_scratch - xi_method) / xi_scratch;
}

// Contraction cost of one factored operator application, counted as
// 2 * |free_lhs| * |free_rhs| * |bound| per stage.
inline uint64_t mango_apply_flops(const Shape& s1, const Shape& s2, MangoRanks r) {
  const uint64_t B1 = s1[0], I1 = s1[1], O1 = s1[2], L1 = s1[3];
  const uint64_t B2 = s2[0], I2 = s2[1], O2 = s2[2], L2 = s2[3];
  const uint64_t R1 = r.r1, R2 = r.r2, R3 = r.r3, R4 = r.r4;
  uint64_t f = 0;
  f += 2 * B1 * (I1 * O1 * L1) * (R1 * B2 * R2);
  f += 2 * (O1 * R2) * (I1 * L1 * R1 * B2) * (O2 * R3);
  f += 2 * (L1 * R3) * (I1 * R1 * B2 * O2) * (L2 * R4);
  f += 2 * (I1 * R4 * R1) * (B2 * O2 * L2) * I2;
  return f;
}

inline uint64_t ligo_apply_flops(const Shape& s1, const Shape& s2) {
  const uint64_t B = s1[0], I1 = s1[1], O1 = s1[2], L1 = s1[3];
  const uint64_t I2 = s2[1], O2 = s2[2], L2 = s2[3];
  uint64_t per_slab = 0;
  per_slab += 2 * I1 * (O1 * L1) * I2;
  per_slab += 2 * O1 * (L1 * I2) * O2;
  per_slab += 2 * L1 * (I2 * O2) * L2;
  return B * per_slab;
}

// Total charge for an operator warmup: per step, a target-model training
// pass over the batch plus the operator contraction at the training factor.
inline uint64_t warmup_total_flops(const ModelConfig& cfg2, const TaskSpec& task,
                                   const WarmupConfig& wc, uint64_t apply_flops) {
  const uint64_t tokens =
      static_cast<uint64_t>(wc.batch_size) * static_cast<uint64_t>(task.seq_len);
  const uint64_t per_step = flops_per_token_train(cfg2) * tokens + 3 * apply_flops;
  return static_cast<uint64_t>(wc.steps) * per_step;
}

// ---- threshold training ----

struct CurvePoint {
  int step = 0;
  double train_loss = 0;
  double eval_loss = 0;
  uint64_t cum_flops = 0;
};

struct RunResult {
  FlopsLedger ledger;
  std::vector<CurvePoint> curve;
  double best_eval = std::numeric_limits<double>::infinity();
  int steps_run = 0;
};

struct TrainOptions {
  int max_steps = 200;
  int batch = 8;
  double lr = 1e-3;
  int eval_every = 10;
  int eval_batch = 32;
  double psi = -std::numeric_limits<double>::infinity();
  uint64_t flops_budget = std::numeric_limits<uint64_t>::max();
  uint64_t warmup_flops = 0;  // precharged to the ledger
  std::string method = "scratch";

  void validate() const {
    if (max_steps < 0) throw ConfigError("train: max_steps must be >= 0");
    if (batch < 1) throw ConfigError("train: batch must be >= 1");
    if (!(lr > 0)) throw ConfigError("train: lr must be > 0");
    if (eval_every < 1) throw ConfigError("train: eval_every must be >= 1");
    if (eval_batch < 1) throw ConfigError("train: eval_batch must be >= 1");
    if (flops_budget == 0) throw ConfigError("train: budget must be > 0");
  }
};

// Adam-trains `w` on the task until eval loss <= psi, the step cap, or the
// FLOPs budget. The curve logs step 0 (before any update) and every
// eval_every-th step; cum_flops includes the precharged warmup.
template <typename T>
RunResult train_model(ModelWeights<T>& w, const TaskSpec& task,
                      const TrainOptions& o) {
  o.validate();
  check_task_model(task, w.cfg);

  RunResult res;
  res.ledger.method = o.method;
  res.ledger.warmup_flops = o.warmup_flops;
  res.ledger.psi = o.psi;

  const Batch ev = sample_eval(task, o.eval_batch, 0);
  const uint64_t tokens_per_step =
      static_cast<uint64_t>(o.batch) * static_cast<uint64_t>(task.seq_len);
  const uint64_t step_cost = flops_per_token_train(w.cfg) * tokens_per_step;

  auto eval_now = [&] { return eval_loss(w, ev.tokens, ev.targets); };
  {
    const Batch b0 = sample_train(task, o.batch, 0);
    CurvePoint p{0, eval_loss(w, b0.tokens, b0.targets), eval_now(),
                 res.ledger.total()};
    res.curve.push_back(p);
    res.best_eval = p.eval_loss;
    if (p.eval_loss <= o.psi) {
      res.ledger.converged = true;
      return res;
    }
  }

  AdamState<T> adam;
  adam.lr = o.lr;
  double last_train = res.curve.front().train_loss;
  for (int step = 1; step <= o.max_steps; ++step) {
    if (res.ledger.total() + step_cost > o.flops_budget) break;
    const Batch b = sample_train(task, o.batch, step - 1);
    Tape<T> tape;
    ModelVars<T> mv = lift_model(tape, w, /*trainable=*/true);
    Var<T> loss = loss_on_targets(tape, mv, b.tokens, b.targets);
    last_train = static_cast<double>(loss.value()[0]);
    if (!std::isfinite(last_train))
      throw NumericError("train_model: non-finite loss at step " +
                         std::to_string(step));
    tape.backward(loss);
    auto vars = mv.named_vars();
    std::vector<Tensor<T>> grads;
    grads.reserve(vars.size());
    for (auto& [name, v] : vars)
      grads.push_back(v->has_grad() ? v->grad() : Tensor<T>(v->value().shape()));
    adam_step(adam, w.named_tensors(), grads);
    res.ledger.charge(step_cost);
    res.steps_run = step;

    if (step % o.eval_every == 0 || step == o.max_steps) {
      CurvePoint p{step, last_train, eval_now(), res.ledger.total()};
      res.curve.push_back(p);
      res.best_eval = std::min(res.best_eval, p.eval_loss);
      if (p.eval_loss <= o.psi) {
        res.ledger.converged = true;
        break;
      }
    }
  }
  return res;
}

// FLOPs at which the logged eval curve first reaches `psi`, linearly
// interpolated between the two bracketing points; NaN if it never does.
inline double flops_at_threshold(const std::vector<CurvePoint>& curve, double psi) {
  for (size_t i = 0; i < curve.size(); ++i) {
    if (curve[i].eval_loss <= psi) {
      if (i == 0) return static_cast<double>(curve[0].cum_flops);
      const CurvePoint& a = curve[i - 1];
      const CurvePoint& b = curve[i];
      const double de = a.eval_loss - b.eval_loss;
      if (!(de > 0)) return static_cast<double>(b.cum_flops);
      const double frac = (a.eval_loss - psi) / de;
      return static_cast<double>(a.cum_flops) +
             frac * static_cast<double>(b.cum_flops - a.cum_flops);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// ---- paired comparison across growth methods ----

struct MethodSeedRow {
  std::string method;
  uint64_t seed = 0;
  double psi = 0;
  double xi = 0;  // interpolated FLOPs-to-psi, NaN when not reached
  double r = 0;   // saving ratio vs the paired scratch run
  bool converged = false;
  int64_t operator_params = 0;
  std::vector<double> warmup_trace;
  RunResult run;
};

struct CompareOptions {
  std::vector<GrowthMethod> methods = {GrowthMethod::mango, GrowthMethod::ligo,
                                       GrowthMethod::stack, GrowthMethod::net2net,
                                       GrowthMethod::random};
  std::vector<uint64_t> seeds = {1, 2, 3};
  int pretrain_steps = 150;
  TrainOptions pretrain;  // small-model training knobs (max_steps overridden)
  TrainOptions target;    // target-model training knobs (psi set per seed)
  WarmupConfig warmup;    // operator warmup (steps, lr, ranks, noise)
};

struct CompareReport {
  std::vector<MethodSeedRow> rows;
  ModelConfig cfg1, cfg2;
  TaskSpec task;
};

namespace harness_detail {

template <typename T>
ModelWeights<T> pretrain_small(const TaskSpec& task, const ModelConfig& cfg1,
                               uint64_t seed, const CompareOptions& co) {
  ModelWeights<T> small = init_random<T>(cfg1, CounterRng::derive(seed, 11));
  TrainOptions po = co.pretrain;
  po.max_steps = co.pretrain_steps;
  po.method = "pretrain_small";
  train_model(small, task, po);
  return small;
}

}  // namespace harness_detail

// Runs every method from the SAME pretrained small model and the SAME data
// order per seed. The scratch reference (method "random") defines each
// seed's threshold psi as its own best eval loss within budget; every other
// method is then measured by FLOPs-to-psi.
template <typename T>
CompareReport compare_methods(const TaskSpec& task, const ModelConfig& cfg1,
                              const ModelConfig& cfg2, const CompareOptions& co) {
  if (co.seeds.empty()) throw ConfigError("compare: need at least one seed");
  CompareReport rep;
  rep.cfg1 = cfg1;
  rep.cfg2 = cfg2;
  rep.task = task;

  for (uint64_t seed : co.seeds) {
    TaskSpec ts = task;
    ts.data_seed = CounterRng::derive(task.data_seed, seed);

    const ModelWeights<T> small =
        harness_detail::pretrain_small<T>(ts, cfg1, seed, co);

    WarmupConfig wc = co.warmup;
    wc.seed = CounterRng::derive(seed, 13);

    // Scratch reference: the "random" method trained without a threshold.
    GrowResult<T> scratch = grow(small, cfg1, cfg2, GrowthMethod::random,
                                 train_stream(ts, wc.batch_size), wc);
    TrainOptions so = co.target;
    so.method = "random";
    RunResult scratch_run = train_model(scratch.weights, ts, so);
    const double psi = scratch_run.best_eval;
    const double xi_scratch = flops_at_threshold(scratch_run.curve, psi);

    for (GrowthMethod m : co.methods) {
      MethodSeedRow row;
      row.method = method_name(m);
      row.seed = seed;
      row.psi = psi;
      if (m == GrowthMethod::random) {
        row.xi = xi_scratch;
        row.r = 0.0;
        row.converged = true;
        row.run = scratch_run;
        row.run.ledger.psi = psi;
        rep.rows.push_back(std::move(row));
        continue;
      }
      GrowResult<T> g =
          grow(small, cfg1, cfg2, m, train_stream(ts, wc.batch_size), wc);
      row.operator_params = g.operator_params;
      row.warmup_trace = g.warmup_trace;

      TrainOptions to = co.target;
      to.method = row.method;
      to.psi = psi;
      if (m == GrowthMethod::mango || m == GrowthMethod::ligo) {
        const Shape s1 = {cfg1.slabs(), cfg1.dim, cfg1.dim,
                          static_cast<int64_t>(cfg1.layers)};
        const Shape s2 = {cfg2.slabs(), cfg2.dim, cfg2.dim,
                          static_cast<int64_t>(cfg2.layers)};
        const uint64_t apply =
            m == GrowthMethod::mango ? mango_apply_flops(s1, s2, wc.ranks)
                                     : ligo_apply_flops(s1, s2);
        to.warmup_flops = warmup_total_flops(cfg2, ts, wc, apply);
      }
      row.run = train_model(g.weights, ts, to);
      row.converged = row.run.ledger.converged;
      row.xi = flops_at_threshold(row.run.curve, psi);
      // Degenerate scratch runs (best eval already at step 0, xi_scratch = 0)
      // leave the ratio undefined rather than aborting the report.
      row.r = (row.converged && xi_scratch > 0)
                  ? flops_saving_ratio(xi_scratch, row.xi)
                  : std::numeric_limits<double>::quiet_NaN();
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

// ---- ring-rank ablation ----

struct RankRow {
  int64_t rank = 1;
  int64_t operator_params = 0;
  std::vector<double> r_per_seed;       // NaN where not converged
  std::vector<double> warmup_end_eval;  // grown model's eval before training
  double r_mean = 0, r_stddev = 0;
};

struct AblateReport {
  std::vector<RankRow> ranks;
  double r_spread = 0;  // max - min of per-rank mean r (reported, not judged)
  TaskSpec task;
  ModelConfig cfg1, cfg2;
};

template <typename T>
AblateReport ablate_ranks(const TaskSpec& task, const ModelConfig& cfg1,
                          const ModelConfig& cfg2, const std::vector<int64_t>& ranks,
                          const CompareOptions& co) {
  if (ranks.empty()) throw ConfigError("ablate: need at least one rank");
  AblateReport rep;
  rep.task = task;
  rep.cfg1 = cfg1;
  rep.cfg2 = cfg2;
  for (int64_t r : ranks) rep.ranks.push_back(RankRow{r, 0, {}, {}, 0, 0});

  for (uint64_t seed : co.seeds) {
    TaskSpec ts = task;
    ts.data_seed = CounterRng::derive(task.data_seed, seed);
    const ModelWeights<T> small =
        harness_detail::pretrain_small<T>(ts, cfg1, seed, co);

    WarmupConfig base_wc = co.warmup;
    base_wc.seed = CounterRng::derive(seed, 13);
    GrowResult<T> scratch = grow(small, cfg1, cfg2, GrowthMethod::random,
                                 train_stream(ts, base_wc.batch_size), base_wc);
    TrainOptions so = co.target;
    so.method = "random";
    RunResult scratch_run = train_model(scratch.weights, ts, so);
    const double psi = scratch_run.best_eval;
    const double xi_scratch = flops_at_threshold(scratch_run.curve, psi);

    for (RankRow& row : rep.ranks) {
      WarmupConfig wc = base_wc;
      wc.ranks = MangoRanks{row.rank, row.rank, row.rank, row.rank};
      GrowResult<T> g = grow(small, cfg1, cfg2, GrowthMethod::mango,
                             train_stream(ts, wc.batch_size), wc);
      row.operator_params = g.operator_params;

      TrainOptions to = co.target;
      to.method = "mango_r" + std::to_string(row.rank);
      to.psi = psi;
      const Shape s1 = {cfg1.slabs(), cfg1.dim, cfg1.dim,
                        static_cast<int64_t>(cfg1.layers)};
      const Shape s2 = {cfg2.slabs(), cfg2.dim, cfg2.dim,
                        static_cast<int64_t>(cfg2.layers)};
      to.warmup_flops =
          warmup_total_flops(cfg2, ts, wc, mango_apply_flops(s1, s2, wc.ranks));
      RunResult run = train_model(g.weights, ts, to);
      row.warmup_end_eval.push_back(run.curve.front().eval_loss);
      row.r_per_seed.push_back(
          (run.ledger.converged && xi_scratch > 0)
              ? flops_saving_ratio(xi_scratch, flops_at_threshold(run.curve, psi))
              : std::numeric_limits<double>::quiet_NaN());
    }
  }

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (RankRow& row : rep.ranks) {
    double sum = 0, sq = 0;
    int n = 0;
    for (double v : row.r_per_seed)
      if (std::isfinite(v)) {
        sum += v;
        sq += v * v;
        ++n;
      }
    row.r_mean = n ? sum / n : std::numeric_limits<double>::quiet_NaN();
    row.r_stddev = n > 1 ? std::sqrt((sq - sum * sum / n) / (n - 1)) : 0.0;
    if (std::isfinite(row.r_mean)) {
      lo = std::min(lo, row.r_mean);
      hi = std::max(hi, row.r_mean);
    }
  }
  rep.r_spread = (hi >= lo) ? hi - lo : std::numeric_limits<double>::quiet_NaN();
  return rep;
}

// ---- reports ----

namespace harness_detail {

inline std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace harness_detail

inline void write_compare_csv(const CompareReport& rep, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "method,seed,step,train_loss,eval_loss,cum_flops\n";
  for (const MethodSeedRow& row : rep.rows)
    for (const CurvePoint& p : row.run.curve)
      out << row.method << ',' << row.seed << ',' << p.step << ','
          << harness_detail::num17(p.train_loss) << ','
          << harness_detail::num17(p.eval_loss) << ',' << p.cum_flops << '\n';
  if (!out) throw IoError("write failed for '" + path + "'");
}

inline nlohmann::json compare_summary_json(const CompareReport& rep) {
  nlohmann::json j;
  j["format"] = "mgrow.compare.v1";
  j["task"] = task_name(rep.task.kind);
  j["small"] = {{"layers", rep.cfg1.layers}, {"dim", rep.cfg1.dim}};
  j["target"] = {{"layers", rep.cfg2.layers}, {"dim", rep.cfg2.dim}};
  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::string> methods;
  for (const MethodSeedRow& row : rep.rows) {
    nlohmann::json r;
    r["method"] = row.method;
    r["seed"] = row.seed;
    r["psi"] = row.psi;
    r["xi"] = row.xi;
    r["saving_ratio"] = row.r;
    r["converged"] = row.converged;
    r["operator_params"] = row.operator_params;
    r["total_flops"] = row.run.ledger.total();
    r["warmup_flops"] = row.run.ledger.warmup_flops;
    rows.push_back(std::move(r));
    if (std::find(methods.begin(), methods.end(), row.method) == methods.end())
      methods.push_back(row.method);
  }
  j["runs"] = std::move(rows);
  nlohmann::json agg = nlohmann::json::array();
  for (const std::string& m : methods) {
    double sum = 0, sq = 0;
    int n = 0, total = 0;
    for (const MethodSeedRow& row : rep.rows)
      if (row.method == m) {
        ++total;
        if (std::isfinite(row.r)) {
          sum += row.r;
          sq += row.r * row.r;
          ++n;
        }
      }
    nlohmann::json a;
    a["method"] = m;
    a["seeds"] = total;
    a["converged"] = n;
    a["r_mean"] = n ? nlohmann::json(sum / n) : nlohmann::json(nullptr);
    a["r_stddev"] = n > 1 ? std::sqrt((sq - sum * sum / n) / (n - 1)) : 0.0;
    agg.push_back(std::move(a));
  }
  j["aggregate"] = std::move(agg);
  return j;
}

inline nlohmann::json ablate_summary_json(const AblateReport& rep) {
  nlohmann::json j;
  j["format"] = "mgrow.ablate.v1";
  j["task"] = task_name(rep.task.kind);
  j["small"] = {{"layers", rep.cfg1.layers}, {"dim", rep.cfg1.dim}};
  j["target"] = {{"layers", rep.cfg2.layers}, {"dim", rep.cfg2.dim}};
  j["r_spread_across_ranks"] = rep.r_spread;
  nlohmann::json rows = nlohmann::json::array();
  for (const RankRow& row : rep.ranks) {
    nlohmann::json r;
    r["rank"] = row.rank;
    r["operator_params"] = row.operator_params;
    r["r_mean"] = std::isfinite(row.r_mean) ? nlohmann::json(row.r_mean)
                                            : nlohmann::json(nullptr);
    r["r_stddev"] = row.r_stddev;
    r["r_per_seed"] = row.r_per_seed;
    r["warmup_end_eval"] = row.warmup_end_eval;
    rows.push_back(std::move(r));
  }
  j["ranks"] = std::move(rows);
  return j;
}

inline void write_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for '" + path + "'");
}

// One CSV row per (layer, head, query position): layer,head,row,p_0,...,p_{s-1}.
// No header, so the row count is exactly layers * heads * seq.
template <typename T>
void export_attention_maps(const ModelWeights<T>& w, const Tensor<int32_t>& tokens,
                           const std::string& path) {
  const Tensor<T> maps = attention_maps(w, tokens);  // [L, n, s, s]
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  const int64_t L = maps.dim(0), n = maps.dim(1), s = maps.dim(2);
  for (int64_t l = 0; l < L; ++l)
    for (int64_t h = 0; h < n; ++h)
      for (int64_t q = 0; q < s; ++q) {
        out << l << ',' << h << ',' << q;
        for (int64_t c = 0; c < s; ++c)
          out << ','
              << harness_detail::num17(
                     static_cast<double>(maps[((l * n + h) * s + q) * s + c]));
        out << '\n';
      }
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace mgrow
