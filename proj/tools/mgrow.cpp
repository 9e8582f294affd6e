// Command-line front end. One binary, seven subcommands:
//
//   train-small   pretrain the small model, write checkpoint + metrics CSV
//   grow          map a small checkpoint to the target shape (any method)
//   train-target  continue training a grown checkpoint with a FLOPs ledger
//   compare       paired multi-seed comparison across growth methods
//   ablate-ranks  rerun the learned-map pipeline across operator ranks
//   export-attn   dump softmax attention maps for one eval sequence as CSV
//   inspect-ckpt  list a checkpoint's metadata and tensor table
//
// Exit codes: 0 ok, 1 usage/config, 2 numeric failure, 3 I/O failure.
// Output root comes from $MGROW_OUTPUT_ROOT (default "."), joined with the
// config's output_dir (or --out). Given the same config and seeds, every
// artifact is byte-for-byte reproducible; only log lines differ.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "mgrow/checkpoint.hpp"
#include "mgrow/harness.hpp"

namespace fs = std::filesystem;
using namespace mgrow;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_override;
  uint64_t seed = 0;
  bool seed_set = false;
  std::string method_str;
};

void add_common(CLI::App* sub, CommonArgs* a, bool with_method) {
  sub->add_option("-c,--config", a->config_path, "JSON run configuration");
  sub->add_option("-o,--out", a->out_override,
                  "output directory (overrides config output_dir)");
  sub->add_option("--seed", a->seed, "run seed (overrides config seed)")
      ->each([a](const std::string&) { a->seed_set = true; });
  if (with_method)
    sub->add_option("--method", a->method_str,
                    "growth method: mango|ligo|stack|net2net|random");
}

RunConfig load_cfg(const CommonArgs& a) {
  RunConfig rc =
      a.config_path.empty() ? RunConfig{} : load_run_config(a.config_path);
  if (a.seed_set) rc.seed = a.seed;
  if (!a.method_str.empty()) rc.method = method_from_string(a.method_str);
  return rc;
}

fs::path resolve_out_dir(const RunConfig& rc, const CommonArgs& a) {
  const char* root = std::getenv("MGROW_OUTPUT_ROOT");
  fs::path dir = fs::path(root ? root : ".") /
                 (a.out_override.empty() ? rc.output_dir : a.out_override);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() +
                        "': " + ec.message());
  return dir;
}

// Same derivations the comparison harness uses, so a manual
// train-small -> grow -> train-target pipeline at seed s reproduces the
// corresponding rows of `compare` exactly.
TaskSpec paired_task(const RunConfig& rc, uint64_t seed) {
  TaskSpec ts = rc.task;
  ts.data_seed = CounterRng::derive(rc.task.data_seed, seed);
  return ts;
}

void write_curve_csv(const RunResult& run, const std::string& method,
                     uint64_t seed, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << "method,seed,step,train_loss,eval_loss,cum_flops\n";
  for (const CurvePoint& p : run.curve)
    out << method << ',' << seed << ',' << p.step << ','
        << harness_detail::num17(p.train_loss) << ','
        << harness_detail::num17(p.eval_loss) << ',' << p.cum_flops << '\n';
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_warmup_csv(const std::vector<double>& trace, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << "step,loss\n";
  for (size_t i = 0; i < trace.size(); ++i)
    out << i << ',' << harness_detail::num17(trace[i]) << '\n';
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

uint64_t operator_warmup_flops(const RunConfig& rc, const ModelConfig& cfg1,
                               GrowthMethod method, const TaskSpec& ts) {
  const Shape s1 = {cfg1.slabs(), cfg1.dim, cfg1.dim, int64_t(cfg1.layers)};
  const Shape s2 = {rc.target.slabs(), rc.target.dim, rc.target.dim,
                    int64_t(rc.target.layers)};
  uint64_t apply = 0;
  if (method == GrowthMethod::mango)
    apply = mango_apply_flops(s1, s2, rc.warmup.ranks);
  else if (method == GrowthMethod::ligo)
    apply = ligo_apply_flops(s1, s2);
  else
    return 0;
  return warmup_total_flops(rc.target, ts, rc.warmup, apply);
}

int cmd_train_small(const CommonArgs& a) {
  const RunConfig rc = load_cfg(a);
  const fs::path dir = resolve_out_dir(rc, a);
  const TaskSpec ts = paired_task(rc, rc.seed);
  check_task_model(ts, rc.small);

  ModelWeights<double> small =
      init_random<double>(rc.small, CounterRng::derive(rc.seed, 11));
  TrainOptions po = rc.pretrain;
  po.max_steps = rc.pretrain_steps;
  po.method = "pretrain_small";
  const RunResult run = train_model(small, ts, po);

  const fs::path ckpt = dir / "small.ckpt";
  save_model(ckpt.string(), small,
             {{"seeds", {{"run", rc.seed}, {"init", CounterRng::derive(rc.seed, 11)}}},
              {"task", task_to_json(ts)},
              {"trained_steps", run.steps_run}});
  write_curve_csv(run, po.method, rc.seed, dir / "train_small_metrics.csv");

  std::printf("train-small: %d steps, final eval %.6f, train flops %" PRIu64 "\n",
              run.steps_run, run.curve.back().eval_loss, run.ledger.step_flops);
  std::printf("wrote %s and %s\n", ckpt.string().c_str(),
              (dir / "train_small_metrics.csv").string().c_str());
  return 0;
}

int cmd_grow(const CommonArgs& a, const std::string& small_path) {
  const RunConfig rc = load_cfg(a);
  const fs::path dir = resolve_out_dir(rc, a);
  const fs::path in =
      small_path.empty() ? dir / "small.ckpt" : fs::path(small_path);
  const ModelWeights<double> small = load_model<double>(in.string());

  const TaskSpec ts = paired_task(rc, rc.seed);
  WarmupConfig wc = rc.warmup;
  wc.seed = CounterRng::derive(rc.seed, 13);
  const BatchStream data = train_stream(ts, wc.batch_size);

  const GrowResult<double> g =
      grow(small, small.cfg, rc.target, rc.method, data, wc);
  const std::string name = method_name(rc.method);
  const uint64_t wf = operator_warmup_flops(rc, small.cfg, rc.method, ts);

  const fs::path out = dir / ("grown_" + name + ".ckpt");
  save_model(out.string(), g.weights,
             {{"method", name},
              {"warmup_flops", wf},
              {"operator_params", g.operator_params},
              {"seeds", {{"run", rc.seed}, {"warmup", wc.seed}}}});
  if (g.has_cores)
    save_mango_cores((dir / ("cores_" + name + ".ckpt")).string(), g.cores,
                     {{"seeds", {{"run", rc.seed}, {"warmup", wc.seed}}}});
  if (g.has_ligo)
    save_ligo_operator((dir / ("cores_" + name + ".ckpt")).string(), g.ligo,
                       {{"seeds", {{"run", rc.seed}, {"warmup", wc.seed}}}});
  if (!g.warmup_trace.empty())
    write_warmup_csv(g.warmup_trace, dir / ("warmup_" + name + ".csv"));

  std::printf("grow: method=%s operator_params=%" PRId64
              " warmup_steps=%zu warmup_flops=%" PRIu64 "\n",
              name.c_str(), g.operator_params, g.warmup_trace.size(), wf);
  std::printf("wrote %s\n", out.string().c_str());
  return 0;
}

int cmd_train_target(const CommonArgs& a, const std::string& weights_path) {
  const RunConfig rc = load_cfg(a);
  const fs::path dir = resolve_out_dir(rc, a);
  const std::string name = method_name(rc.method);
  const fs::path in = weights_path.empty()
                          ? dir / ("grown_" + name + ".ckpt")
                          : fs::path(weights_path);
  ModelWeights<double> w = load_model<double>(in.string());
  const TaskSpec ts = paired_task(rc, rc.seed);
  check_task_model(ts, w.cfg);

  TrainOptions to = rc.train;
  to.method = name;
  to.warmup_flops =
      inspect_checkpoint(in.string()).meta.value("warmup_flops", uint64_t{0});
  const RunResult run = train_model(w, ts, to);

  write_curve_csv(run, name, rc.seed, dir / ("train_target_" + name + ".csv"));
  const fs::path out = dir / ("target_" + name + ".ckpt");
  save_model(out.string(), w,
             {{"method", name}, {"seeds", {{"run", rc.seed}}}});

  std::printf("train-target: method=%s steps=%d best_eval=%.6f converged=%s "
              "total_flops=%" PRIu64 "\n",
              name.c_str(), run.steps_run, run.best_eval,
              run.ledger.converged ? "yes" : "no", run.ledger.total());
  std::printf("wrote %s\n", out.string().c_str());
  return 0;
}

CompareOptions compare_options(const RunConfig& rc) {
  CompareOptions co;
  co.methods = rc.methods;
  co.seeds = rc.seeds;
  co.pretrain_steps = rc.pretrain_steps;
  co.pretrain = rc.pretrain;
  co.target = rc.train;
  co.warmup = rc.warmup;
  return co;
}

int cmd_compare(const CommonArgs& a) {
  const RunConfig rc = load_cfg(a);
  const fs::path dir = resolve_out_dir(rc, a);
  const CompareOptions co = compare_options(rc);
  const CompareReport rep = compare_methods<double>(rc.task, rc.small, rc.target, co);

  write_compare_csv(rep, (dir / "compare_curves.csv").string());
  write_json(compare_summary_json(rep), (dir / "compare_summary.json").string());

  // One curve file per method (all seeds), same schema as the combined CSV.
  for (GrowthMethod m : co.methods) {
    const std::string name = method_name(m);
    std::ofstream out(dir / ("curve_" + name + ".csv"), std::ios::binary);
    if (!out) throw IoError("cannot write curve file for " + name);
    out << "method,seed,step,train_loss,eval_loss,cum_flops\n";
    for (const MethodSeedRow& row : rep.rows) {
      if (row.method != name) continue;
      for (const CurvePoint& p : row.run.curve)
        out << row.method << ',' << row.seed << ',' << p.step << ','
            << harness_detail::num17(p.train_loss) << ','
            << harness_detail::num17(p.eval_loss) << ',' << p.cum_flops << '\n';
    }
  }

  for (const MethodSeedRow& row : rep.rows)
    std::printf("compare: method=%-8s seed=%" PRIu64 " psi=%.6f xi=%.3g r=%.4f "
                "converged=%s\n",
                row.method.c_str(), row.seed, row.psi, row.xi, row.r,
                row.converged ? "yes" : "no");
  std::printf("wrote %s\n", (dir / "compare_summary.json").string().c_str());
  return 0;
}

int cmd_ablate(const CommonArgs& a) {
  const RunConfig rc = load_cfg(a);
  const fs::path dir = resolve_out_dir(rc, a);
  const CompareOptions co = compare_options(rc);
  const AblateReport rep =
      ablate_ranks<double>(rc.task, rc.small, rc.target, rc.ablate_rank_set, co);

  write_json(ablate_summary_json(rep), (dir / "ablate_summary.json").string());
  {
    std::ofstream out(dir / "ablate_ranks.csv", std::ios::binary);
    if (!out) throw IoError("cannot write ablate_ranks.csv");
    out << "rank,operator_params,seed,r,warmup_end_eval\n";
    for (const RankRow& row : rep.ranks)
      for (size_t i = 0; i < row.r_per_seed.size(); ++i)
        out << row.rank << ',' << row.operator_params << ',' << co.seeds[i]
            << ',' << harness_detail::num17(row.r_per_seed[i]) << ','
            << harness_detail::num17(row.warmup_end_eval[i]) << '\n';
  }

  for (const RankRow& row : rep.ranks)
    std::printf("ablate: rank=%" PRId64 " params=%" PRId64 " r_mean=%.4f "
                "r_stddev=%.4f\n",
                row.rank, row.operator_params, row.r_mean, row.r_stddev);
  std::printf("ablate: r spread across ranks = %.4f\n", rep.r_spread);
  std::printf("wrote %s\n", (dir / "ablate_summary.json").string().c_str());
  return 0;
}

int cmd_export_attn(const CommonArgs& a, const std::string& ckpt_path) {
  const RunConfig rc = load_cfg(a);
  const fs::path dir = resolve_out_dir(rc, a);
  const fs::path in =
      ckpt_path.empty() ? dir / "small.ckpt" : fs::path(ckpt_path);
  const ModelWeights<double> w = load_model<double>(in.string());
  const TaskSpec ts = paired_task(rc, rc.seed);
  check_task_model(ts, w.cfg);

  const Batch ev = sample_eval(ts, 1, 0);
  const fs::path out = dir / "attention.csv";
  export_attention_maps(w, ev.tokens, out.string());
  std::printf("export-attn: %d layers x %d heads x %" PRId64
              " positions -> %s\n",
              w.cfg.layers, w.cfg.heads, ts.seq_len, out.string().c_str());
  return 0;
}

int cmd_inspect(const std::string& path) {
  const CheckpointInfo info = inspect_checkpoint(path);
  std::printf("checkpoint %s\n", path.c_str());
  std::printf("  version: %u\n", unsigned(info.version));
  std::printf("  meta: %s\n", info.meta.dump().c_str());
  int64_t total = 0;
  std::printf("  tensors (%zu):\n", info.entries.size());
  for (const TensorEntry& e : info.entries) {
    std::string dims = "[";
    for (size_t i = 0; i < e.dims.size(); ++i)
      dims += (i ? "," : "") + std::to_string(e.dims[i]);
    dims += "]";
    std::printf("    %-18s %-14s %s  %" PRId64 " bytes\n", e.name.c_str(),
                dims.c_str(), dtype_name(e.dtype),
                e.numel() * dtype_size(e.dtype));
    total += e.numel();
  }
  std::printf("  total parameters: %" PRId64 "\n", total);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mgrow: grow a small transformer into a larger one through a learned "
      "map over its packed weight tensor, with stacking / neuron-splitting / "
      "random baselines and a FLOPs-accounted comparison harness"};
  app.require_subcommand(1);
  app.footer("Output root: $MGROW_OUTPUT_ROOT (default \".\"), joined with the "
             "config's output_dir.\nExit codes: 0 ok, 1 usage, 2 numeric, 3 I/O.");

  CommonArgs a_small, a_grow, a_target, a_cmp, a_abl, a_attn;
  std::string small_path, weights_path, attn_ckpt, inspect_path;

  CLI::App* s1 = app.add_subcommand("train-small", "pretrain the small model");
  add_common(s1, &a_small, false);

  CLI::App* s2 =
      app.add_subcommand("grow", "grow a small checkpoint to the target shape");
  add_common(s2, &a_grow, true);
  s2->add_option("--small", small_path,
                 "small checkpoint (default <out>/small.ckpt)");

  CLI::App* s3 =
      app.add_subcommand("train-target", "train a grown checkpoint to threshold");
  add_common(s3, &a_target, true);
  s3->add_option("--weights", weights_path,
                 "grown checkpoint (default <out>/grown_<method>.ckpt)");

  CLI::App* s4 = app.add_subcommand(
      "compare", "paired multi-seed comparison across growth methods");
  add_common(s4, &a_cmp, false);

  CLI::App* s5 = app.add_subcommand(
      "ablate-ranks", "sweep operator ranks on the learned-map pipeline");
  add_common(s5, &a_abl, false);

  CLI::App* s6 = app.add_subcommand(
      "export-attn", "write attention maps for one eval sequence");
  add_common(s6, &a_attn, false);
  s6->add_option("--ckpt", attn_ckpt, "model checkpoint (default <out>/small.ckpt)");

  CLI::App* s7 =
      app.add_subcommand("inspect-ckpt", "list checkpoint metadata and tensors");
  s7->add_option("path", inspect_path, "checkpoint file")->required();

  try {
    app.parse(argc, argv);
    if (s1->parsed()) return cmd_train_small(a_small);
    if (s2->parsed()) return cmd_grow(a_grow, small_path);
    if (s3->parsed()) return cmd_train_target(a_target, weights_path);
    if (s4->parsed()) return cmd_compare(a_cmp);
    if (s5->parsed()) return cmd_ablate(a_abl);
    if (s6->parsed()) return cmd_export_attn(a_attn, attn_ckpt);
    if (s7->parsed()) return cmd_inspect(inspect_path);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const NumericError& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
