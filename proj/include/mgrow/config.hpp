#pragma once

// Structured-text run configuration. One JSON file drives every subcommand;
// each reads only the sections it needs. Parsing is strict: any key that is
// not part of the schema is rejected, at every nesting level, so typos fail
// loudly instead of silently falling back to defaults.

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "mgrow/harness.hpp"

namespace mgrow {

namespace config_detail {

using nlohmann::json;

inline void expect_object(const json& j, const std::string& ctx) {
  if (!j.is_object())
    throw ConfigError(ctx + ": expected an object");
}

inline void expect_keys(const json& j, const std::string& ctx,
                        const std::set<std::string>& allowed) {
  expect_object(j, ctx);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError(ctx + ": unknown key '" + it.key() + "'");
}

template <typename T>
T get_or(const json& j, const std::string& key, T fallback, const std::string& ctx) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(ctx + "." + key + ": wrong type");
  }
}

}  // namespace config_detail

inline nlohmann::json model_config_to_json(const ModelConfig& c) {
  return nlohmann::json{{"layers", c.layers},     {"dim", c.dim},
                        {"heads", c.heads},       {"ffn_ratio", c.ffn_ratio},
                        {"vocab", c.vocab},       {"seq_len", c.seq_len},
                        {"causal", c.causal},     {"pre_norm", c.pre_norm}};
}

inline ModelConfig model_config_from_json(const nlohmann::json& j,
                                          const std::string& ctx) {
  using config_detail::get_or;
  config_detail::expect_keys(j, ctx,
                             {"layers", "dim", "heads", "ffn_ratio", "vocab",
                              "seq_len", "causal", "pre_norm"});
  ModelConfig c;
  c.layers = get_or(j, "layers", c.layers, ctx);
  c.dim = get_or(j, "dim", c.dim, ctx);
  c.heads = get_or(j, "heads", c.heads, ctx);
  c.ffn_ratio = get_or(j, "ffn_ratio", c.ffn_ratio, ctx);
  c.vocab = get_or(j, "vocab", c.vocab, ctx);
  c.seq_len = get_or(j, "seq_len", c.seq_len, ctx);
  c.causal = get_or(j, "causal", c.causal, ctx);
  c.pre_norm = get_or(j, "pre_norm", c.pre_norm, ctx);
  c.validate();
  return c;
}

inline nlohmann::json task_to_json(const TaskSpec& t) {
  return nlohmann::json{{"kind", task_name(t.kind)},
                        {"vocab", t.vocab},
                        {"seq_len", t.seq_len},
                        {"data_seed", t.data_seed}};
}

inline TaskSpec task_from_json(const nlohmann::json& j, const std::string& ctx) {
  using config_detail::get_or;
  config_detail::expect_keys(j, ctx, {"kind", "vocab", "seq_len", "data_seed"});
  TaskSpec t;
  t.kind = task_from_string(get_or<std::string>(j, "kind", "char_lm", ctx));
  t.vocab = get_or<int64_t>(j, "vocab", t.vocab, ctx);
  t.seq_len = get_or<int64_t>(j, "seq_len", t.seq_len, ctx);
  t.data_seed = get_or<uint64_t>(j, "data_seed", t.data_seed, ctx);
  t.validate();
  return t;
}

inline MangoRanks ranks_from_json(const nlohmann::json& j, const std::string& ctx) {
  if (j.is_number_integer()) {
    const int64_t r = j.get<int64_t>();
    return MangoRanks{r, r, r, r};
  }
  if (j.is_array() && j.size() == 4)
    return MangoRanks{j[0].get<int64_t>(), j[1].get<int64_t>(),
                      j[2].get<int64_t>(), j[3].get<int64_t>()};
  throw ConfigError(ctx + ": ranks must be an integer or a 4-element array");
}

inline WarmupConfig warmup_from_json(const nlohmann::json& j, const std::string& ctx) {
  using config_detail::get_or;
  config_detail::expect_keys(
      j, ctx, {"steps", "lr", "batch_size", "seed", "loss", "ranks", "init_noise"});
  WarmupConfig w;
  w.steps = get_or(j, "steps", w.steps, ctx);
  w.lr = get_or(j, "lr", w.lr, ctx);
  w.batch_size = get_or(j, "batch_size", w.batch_size, ctx);
  w.seed = get_or<uint64_t>(j, "seed", w.seed, ctx);
  const std::string loss = get_or<std::string>(j, "loss", "task_lm", ctx);
  if (loss == "task_lm") {
    w.loss = WarmupLoss::task_lm;
  } else if (loss == "distill_to_small") {
    w.loss = WarmupLoss::distill_to_small;
  } else {
    throw ConfigError(ctx + ".loss: expected task_lm|distill_to_small, got '" +
                      loss + "'");
  }
  if (j.contains("ranks")) w.ranks = ranks_from_json(j.at("ranks"), ctx + ".ranks");
  w.init_noise = get_or(j, "init_noise", w.init_noise, ctx);
  w.validate();
  return w;
}

inline TrainOptions train_from_json(const nlohmann::json& j, const std::string& ctx) {
  using config_detail::get_or;
  config_detail::expect_keys(j, ctx,
                             {"max_steps", "batch", "lr", "eval_every",
                              "eval_batch", "psi", "flops_budget"});
  TrainOptions o;
  o.max_steps = get_or(j, "max_steps", o.max_steps, ctx);
  o.batch = get_or(j, "batch", o.batch, ctx);
  o.lr = get_or(j, "lr", o.lr, ctx);
  o.eval_every = get_or(j, "eval_every", o.eval_every, ctx);
  o.eval_batch = get_or(j, "eval_batch", o.eval_batch, ctx);
  o.psi = get_or(j, "psi", o.psi, ctx);
  o.flops_budget = get_or<uint64_t>(j, "flops_budget", o.flops_budget, ctx);
  o.validate();
  return o;
}

struct RunConfig {
  TaskSpec task;
  ModelConfig small;
  ModelConfig target;
  GrowthMethod method = GrowthMethod::mango;
  std::vector<GrowthMethod> methods = {GrowthMethod::mango, GrowthMethod::ligo,
                                       GrowthMethod::stack, GrowthMethod::net2net,
                                       GrowthMethod::random};
  std::vector<uint64_t> seeds = {1, 2, 3};
  uint64_t seed = 1;
  std::vector<int64_t> ablate_rank_set = {1, 4, 7, 10};
  WarmupConfig warmup;
  TrainOptions pretrain;
  TrainOptions train;
  int pretrain_steps = 200;
  std::string output_dir = "runs";
};

inline RunConfig run_config_from_json(const nlohmann::json& j) {
  using config_detail::get_or;
  config_detail::expect_keys(
      j, "config",
      {"task", "small", "target", "method", "methods", "seeds", "seed",
       "ablate_ranks", "warmup", "pretrain", "train", "pretrain_steps",
       "output_dir"});
  RunConfig rc;
  if (j.contains("task")) rc.task = task_from_json(j.at("task"), "task");
  if (j.contains("small")) rc.small = model_config_from_json(j.at("small"), "small");
  if (j.contains("target"))
    rc.target = model_config_from_json(j.at("target"), "target");
  if (j.contains("method"))
    rc.method = method_from_string(j.at("method").get<std::string>());
  if (j.contains("methods")) {
    rc.methods.clear();
    for (const auto& m : j.at("methods"))
      rc.methods.push_back(method_from_string(m.get<std::string>()));
    if (rc.methods.empty()) throw ConfigError("methods: must not be empty");
  }
  if (j.contains("seeds")) {
    rc.seeds.clear();
    for (const auto& s : j.at("seeds")) rc.seeds.push_back(s.get<uint64_t>());
    if (rc.seeds.empty()) throw ConfigError("seeds: must not be empty");
  }
  rc.seed = get_or<uint64_t>(j, "seed", rc.seed, "config");
  if (j.contains("ablate_ranks")) {
    rc.ablate_rank_set.clear();
    for (const auto& r : j.at("ablate_ranks"))
      rc.ablate_rank_set.push_back(r.get<int64_t>());
    if (rc.ablate_rank_set.empty())
      throw ConfigError("ablate_ranks: must not be empty");
  }
  if (j.contains("warmup")) rc.warmup = warmup_from_json(j.at("warmup"), "warmup");
  if (j.contains("pretrain"))
    rc.pretrain = train_from_json(j.at("pretrain"), "pretrain");
  if (j.contains("train")) rc.train = train_from_json(j.at("train"), "train");
  rc.pretrain_steps = get_or(j, "pretrain_steps", rc.pretrain_steps, "config");
  rc.output_dir = get_or<std::string>(j, "output_dir", rc.output_dir, "config");
  return rc;
}

inline RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return run_config_from_json(j);
}

}  // namespace mgrow
