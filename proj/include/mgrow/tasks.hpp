#pragma once

// Desk-scale tasks that stand in for large pretraining corpora. All three
// produce Batch{tokens, targets} with -1 marking unscored positions, and all
// sampling is a pure function of (spec, step/index), so two runs with the
// same spec see the same data in the same order.
//
// Train/eval disjointness:
//   char_lm     - windows drawn from the first 90% of the corpus for
//                 training, from the last 10% for eval; windows never cross
//                 the boundary.
//   copy_task   - sample ids are split by id % 10 (0 -> eval); the id fully
//                 determines the sequence.
//   modular_add - the (a, b) grid is split by (a * m + b) % 10 (0 -> eval),
//                 so no equation appears on both sides.

#include <string>

#include "mgrow/corpus_text.hpp"
#include "mgrow/rng.hpp"
#include "mgrow/training.hpp"
#include "mgrow/transformer.hpp"

namespace mgrow {

enum class TaskKind { char_lm, copy_task, modular_addition };

inline const char* task_name(TaskKind k) {
  switch (k) {
    case TaskKind::char_lm: return "char_lm";
    case TaskKind::copy_task: return "copy_task";
    case TaskKind::modular_addition: return "modular_addition";
  }
  throw ConfigError("task_name: unknown task");
}

inline TaskKind task_from_string(const std::string& s) {
  if (s == "char_lm") return TaskKind::char_lm;
  if (s == "copy_task") return TaskKind::copy_task;
  if (s == "modular_addition") return TaskKind::modular_addition;
  throw ConfigError("unknown task '" + s +
                    "' (expected char_lm|copy_task|modular_addition)");
}

struct TaskSpec {
  TaskKind kind = TaskKind::char_lm;
  int64_t vocab = 256;   // char_lm: bytes; copy: payload + SEP; modadd: m + SEP
  int64_t seq_len = 32;
  uint64_t data_seed = 1;

  // copy_task sequences are [x_1..x_p, SEP, x_1..x_p]; payload length p.
  int64_t copy_payload() const { return (seq_len - 1) / 2; }
  // modular_addition works on [a, b, SEP, a+b mod m] with m = vocab - 1.
  int64_t modulus() const { return vocab - 1; }

  void validate() const {
    if (seq_len < 2) throw ConfigError("task: seq_len must be >= 2");
    switch (kind) {
      case TaskKind::char_lm:
        if (vocab != 256)
          throw ConfigError("char_lm: vocab must be 256 (byte-level)");
        break;
      case TaskKind::copy_task:
        if (vocab < 3) throw ConfigError("copy_task: vocab must be >= 3");
        if (seq_len % 2 == 0 || copy_payload() < 1)
          throw ConfigError("copy_task: seq_len must be odd and >= 3");
        break;
      case TaskKind::modular_addition:
        if (vocab < 3) throw ConfigError("modular_addition: vocab must be >= 3");
        if (seq_len != 4) throw ConfigError("modular_addition: seq_len must be 4");
        break;
    }
  }
};

// The copy task needs every position to see the whole prompt; the other two
// are next-token tasks.
inline bool task_causal(TaskKind k) { return k != TaskKind::copy_task; }

inline void check_task_model(const TaskSpec& t, const ModelConfig& cfg) {
  t.validate();
  cfg.validate();
  if (cfg.vocab < t.vocab)
    throw ConfigError("task/model: model vocab " + std::to_string(cfg.vocab) +
                      " < task vocab " + std::to_string(t.vocab));
  if (cfg.seq_len < t.seq_len)
    throw ConfigError("task/model: model seq_len " + std::to_string(cfg.seq_len) +
                      " < task seq_len " + std::to_string(t.seq_len));
  if (cfg.causal != task_causal(t.kind))
    throw ConfigError(std::string("task/model: ") + task_name(t.kind) +
                      (task_causal(t.kind) ? " needs a causal model"
                                           : " needs a non-causal model"));
}

namespace task_detail {

inline int64_t char_region_start(bool eval, int64_t corpus_len, int64_t seq_len) {
  const int64_t split = corpus_len * 9 / 10;
  if (!eval) return 0;
  if (corpus_len - split < seq_len + 1)
    throw ConfigError("char_lm: corpus too small for this seq_len");
  return split;
}

inline Batch sample_char_lm(const TaskSpec& t, int batch, uint64_t stream_seed,
                            bool eval) {
  std::string_view corpus = char_corpus();
  const int64_t n = static_cast<int64_t>(corpus.size());
  const int64_t lo = char_region_start(eval, n, t.seq_len);
  const int64_t hi = (eval ? n : n * 9 / 10) - t.seq_len - 1;
  if (hi <= lo) throw ConfigError("char_lm: corpus too small for this seq_len");
  CounterRng rng(stream_seed);
  Tensor<int32_t> toks({batch, t.seq_len});
  for (int64_t r = 0; r < batch; ++r) {
    const int64_t start = lo + static_cast<int64_t>(rng.next_below(
                                   static_cast<uint64_t>(hi - lo)));
    for (int64_t c = 0; c < t.seq_len; ++c)
      toks[r * t.seq_len + c] =
          static_cast<int32_t>(static_cast<unsigned char>(corpus[start + c]));
  }
  return Batch{toks, shift_targets(toks)};
}

inline Batch sample_copy(const TaskSpec& t, int batch, uint64_t stream_seed,
                         bool eval) {
  const int64_t p = t.copy_payload();
  const int32_t sep = static_cast<int32_t>(t.vocab - 1);
  CounterRng id_rng(stream_seed);
  Tensor<int32_t> toks({batch, t.seq_len});
  Tensor<int32_t> tgts({batch, t.seq_len});
  for (int64_t r = 0; r < batch; ++r) {
    // Draw sample ids until one lands in the requested split.
    uint64_t id;
    do {
      id = id_rng.next_u64();
    } while ((id % 10 == 0) != eval);
    CounterRng rng(CounterRng::derive(t.data_seed, id));
    for (int64_t c = 0; c < p; ++c) {
      const int32_t v =
          static_cast<int32_t>(rng.next_below(static_cast<uint64_t>(t.vocab - 1)));
      toks[r * t.seq_len + c] = v;
      toks[r * t.seq_len + p + 1 + c] = v;
      tgts[r * t.seq_len + c] = -1;
      tgts[r * t.seq_len + p + 1 + c] = v;  // scored: reproduce the payload
    }
    toks[r * t.seq_len + p] = sep;
    tgts[r * t.seq_len + p] = -1;
  }
  return Batch{toks, tgts};
}

inline Batch sample_modadd(const TaskSpec& t, int batch, uint64_t stream_seed,
                           bool eval) {
  const int64_t m = t.modulus();
  const int32_t sep = static_cast<int32_t>(m);
  CounterRng rng(stream_seed);
  Tensor<int32_t> toks({batch, 4});
  Tensor<int32_t> tgts({batch, 4});
  for (int64_t r = 0; r < batch; ++r) {
    int64_t a, b;
    do {
      a = static_cast<int64_t>(rng.next_below(static_cast<uint64_t>(m)));
      b = static_cast<int64_t>(rng.next_below(static_cast<uint64_t>(m)));
    } while (((a * m + b) % 10 == 0) != eval);
    const int32_t c = static_cast<int32_t>((a + b) % m);
    toks[r * 4 + 0] = static_cast<int32_t>(a);
    toks[r * 4 + 1] = static_cast<int32_t>(b);
    toks[r * 4 + 2] = sep;
    toks[r * 4 + 3] = c;
    tgts[r * 4 + 0] = -1;
    tgts[r * 4 + 1] = -1;
    tgts[r * 4 + 2] = c;  // predict the sum from just after SEP
    tgts[r * 4 + 3] = -1;
  }
  return Batch{toks, tgts};
}

inline Batch sample(const TaskSpec& t, int batch, uint64_t stream_seed, bool eval) {
  t.validate();
  if (batch < 1) throw ConfigError("task: batch must be >= 1");
  switch (t.kind) {
    case TaskKind::char_lm: return sample_char_lm(t, batch, stream_seed, eval);
    case TaskKind::copy_task: return sample_copy(t, batch, stream_seed, eval);
    case TaskKind::modular_addition:
      return sample_modadd(t, batch, stream_seed, eval);
  }
  throw ConfigError("task: unknown kind");
}

}  // namespace task_detail

inline Batch sample_train(const TaskSpec& t, int batch, int step) {
  return task_detail::sample(
      t, batch, CounterRng::derive(t.data_seed, 2 * static_cast<uint64_t>(step) + 1),
      /*eval=*/false);
}

// A fixed eval batch (index selects among disjoint eval draws if several are
// wanted; index 0 is the canonical one used by the harness).
inline Batch sample_eval(const TaskSpec& t, int batch, int index = 0) {
  return task_detail::sample(
      t, batch,
      CounterRng::derive(t.data_seed ^ 0x9e3779b97f4a7c15ull,
                         2 * static_cast<uint64_t>(index)),
      /*eval=*/true);
}

inline BatchStream train_stream(const TaskSpec& t, int batch) {
  return [t, batch](int step) { return sample_train(t, batch, step); };
}

}  // namespace mgrow
