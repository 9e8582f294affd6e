#pragma once

// Binary checkpoint container. Layout (all integers little-endian):
//
//   bytes 0..3   magic "MGRW"
//   u16          format version (currently 1)
//   u32 + bytes  metadata: UTF-8 JSON (config / ranks, slab-order hash,
//                seed provenance -- whatever the writer wants to pin down)
//   u32          tensor count
//   per tensor:  u32 name length, name bytes,
//                u32 order, u32 per dimension,
//                u8 dtype tag (0 = f32, 1 = f64),
//                raw IEEE-754 payload, little-endian, exactly
//                product(dims) * dtype size bytes
//
// The tensor table is self-describing: names, shapes and dtypes can be
// listed without knowing what the file holds. Round-trips are bitwise.

#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mgrow/config.hpp"
#include "mgrow/growth.hpp"
#include "mgrow/packing.hpp"
#include "mgrow/transformer.hpp"

namespace mgrow {

inline constexpr std::array<char, 4> kCkptMagic = {'M', 'G', 'R', 'W'};
inline constexpr uint16_t kCkptVersion = 1;

template <typename T>
constexpr uint8_t dtype_tag();
template <>
constexpr uint8_t dtype_tag<float>() { return 0; }
template <>
constexpr uint8_t dtype_tag<double>() { return 1; }

inline const char* dtype_name(uint8_t tag) {
  switch (tag) {
    case 0: return "f32";
    case 1: return "f64";
    default: return "unknown";
  }
}

inline int64_t dtype_size(uint8_t tag) {
  switch (tag) {
    case 0: return 4;
    case 1: return 8;
    default: throw IoError("unknown dtype tag " + std::to_string(int(tag)));
  }
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

namespace ckpt_detail {

inline void put_u16(std::string& b, uint16_t v) {
  b.push_back(char(v & 0xff));
  b.push_back(char((v >> 8) & 0xff));
}

inline void put_u32(std::string& b, uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back(char((v >> (8 * i)) & 0xff));
}

inline void put_u64(std::string& b, uint64_t v) {
  for (int i = 0; i < 8; ++i) b.push_back(char((v >> (8 * i)) & 0xff));
}

template <typename T>
void put_payload(std::string& b, const std::vector<T>& data) {
  if constexpr (std::endian::native == std::endian::little) {
    const size_t off = b.size();
    b.resize(off + data.size() * sizeof(T));
    std::memcpy(b.data() + off, data.data(), data.size() * sizeof(T));
  } else {
    for (T x : data) {
      if constexpr (sizeof(T) == 8)
        put_u64(b, std::bit_cast<uint64_t>(x));
      else
        put_u32(b, std::bit_cast<uint32_t>(x));
    }
  }
}

// Bounds-checked cursor over a fully loaded file.
struct Reader {
  const std::string& buf;
  size_t pos = 0;

  void need(size_t n) const {
    if (pos + n > buf.size()) throw IoError("truncated checkpoint");
  }
  uint8_t u8() {
    need(1);
    return uint8_t(buf[pos++]);
  }
  uint16_t u16() {
    need(2);
    uint16_t v = uint16_t(uint8_t(buf[pos])) | uint16_t(uint8_t(buf[pos + 1])) << 8;
    pos += 2;
    return v;
  }
  uint32_t u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= uint32_t(uint8_t(buf[pos + i])) << (8 * i);
    pos += 4;
    return v;
  }
  std::string bytes(size_t n) {
    need(n);
    std::string s = buf.substr(pos, n);
    pos += n;
    return s;
  }
  void skip(size_t n) {
    need(n);
    pos += n;
  }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint '" + path + "'");
  std::string buf((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  if (!in.good() && !in.eof())
    throw IoError("failed reading checkpoint '" + path + "'");
  return buf;
}

// Parses magic + version + metadata, leaving the reader at the tensor count.
inline std::pair<uint16_t, nlohmann::json> read_header(Reader& r,
                                                       const std::string& path) {
  const std::string magic = r.bytes(4);
  if (std::memcmp(magic.data(), kCkptMagic.data(), 4) != 0)
    throw IoError("'" + path + "' is not a checkpoint (bad magic)");
  const uint16_t version = r.u16();
  if (version != kCkptVersion)
    throw IoError("'" + path + "' has checkpoint version " +
                  std::to_string(version) + ", this build reads version " +
                  std::to_string(kCkptVersion));
  const uint32_t meta_len = r.u32();
  const std::string meta_text = r.bytes(meta_len);
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(meta_text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("'" + path + "' has corrupt metadata: " + e.what());
  }
  return {version, meta};
}

}  // namespace ckpt_detail

template <typename T>
void save_checkpoint(
    const std::string& path, const nlohmann::json& meta,
    const std::vector<std::pair<std::string, const Tensor<T>*>>& tensors) {
  using namespace ckpt_detail;
  std::string b;
  b.append(kCkptMagic.data(), 4);
  put_u16(b, kCkptVersion);
  const std::string meta_text = meta.dump();
  put_u32(b, uint32_t(meta_text.size()));
  b += meta_text;
  put_u32(b, uint32_t(tensors.size()));
  for (const auto& [name, ten] : tensors) {
    put_u32(b, uint32_t(name.size()));
    b += name;
    const Shape& s = ten->shape();
    put_u32(b, uint32_t(s.size()));
    for (int64_t d : s) put_u32(b, uint32_t(d));
    b.push_back(char(dtype_tag<T>()));
    put_payload(b, ten->data());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(b.data(), std::streamsize(b.size()));
  if (!out.good()) throw IoError("failed writing checkpoint '" + path + "'");
}

struct TensorEntry {
  std::string name;
  Shape dims;
  uint8_t dtype = 1;

  int64_t numel() const {
    int64_t n = 1;
    for (int64_t d : dims) n *= d;
    return n;
  }
};

struct CheckpointInfo {
  uint16_t version = 0;
  nlohmann::json meta;
  std::vector<TensorEntry> entries;
};

// Lists names/shapes/dtypes without materializing any payload.
inline CheckpointInfo inspect_checkpoint(const std::string& path) {
  using namespace ckpt_detail;
  const std::string buf = read_file(path);
  Reader r{buf};
  CheckpointInfo info;
  std::tie(info.version, info.meta) = read_header(r, path);
  const uint32_t count = r.u32();
  for (uint32_t i = 0; i < count; ++i) {
    TensorEntry e;
    e.name = r.bytes(r.u32());
    const uint32_t order = r.u32();
    for (uint32_t d = 0; d < order; ++d) e.dims.push_back(r.u32());
    e.dtype = r.u8();
    r.skip(size_t(e.numel()) * size_t(dtype_size(e.dtype)));
    info.entries.push_back(std::move(e));
  }
  if (r.pos != buf.size())
    throw IoError("'" + path + "' has " + std::to_string(buf.size() - r.pos) +
                  " trailing bytes after the tensor table");
  return info;
}

template <typename T>
struct Checkpoint {
  uint16_t version = 0;
  nlohmann::json meta;
  std::vector<std::pair<std::string, Tensor<T>>> tensors;
};

template <typename T>
Checkpoint<T> load_checkpoint(const std::string& path) {
  using namespace ckpt_detail;
  const std::string buf = read_file(path);
  Reader r{buf};
  Checkpoint<T> ck;
  std::tie(ck.version, ck.meta) = read_header(r, path);
  const uint32_t count = r.u32();
  for (uint32_t i = 0; i < count; ++i) {
    std::string name = r.bytes(r.u32());
    const uint32_t order = r.u32();
    Shape dims;
    int64_t numel = 1;
    for (uint32_t d = 0; d < order; ++d) {
      dims.push_back(r.u32());
      numel *= dims.back();
    }
    const uint8_t tag = r.u8();
    if (tag != dtype_tag<T>())
      throw IoError("tensor '" + name + "' in '" + path + "' is " +
                    dtype_name(tag) + ", expected " +
                    dtype_name(dtype_tag<T>()));
    std::vector<T> data(static_cast<size_t>(numel));
    r.need(size_t(numel) * sizeof(T));
    if constexpr (std::endian::native == std::endian::little) {
      std::memcpy(data.data(), buf.data() + r.pos, size_t(numel) * sizeof(T));
      r.pos += size_t(numel) * sizeof(T);
    } else {
      for (int64_t k = 0; k < numel; ++k) {
        if constexpr (sizeof(T) == 8) {
          uint64_t v = 0;
          for (int b2 = 0; b2 < 8; ++b2)
            v |= uint64_t(uint8_t(buf[r.pos + b2])) << (8 * b2);
          data[size_t(k)] = std::bit_cast<T>(v);
          r.pos += 8;
        } else {
          data[size_t(k)] = std::bit_cast<T>(r.u32());
        }
      }
    }
    ck.tensors.emplace_back(std::move(name), Tensor<T>(dims, std::move(data)));
  }
  if (r.pos != buf.size())
    throw IoError("'" + path + "' has " + std::to_string(buf.size() - r.pos) +
                  " trailing bytes after the tensor table");
  return ck;
}

// ---- typed wrappers -------------------------------------------------------

template <typename T>
void save_model(const std::string& path, const ModelWeights<T>& w,
                nlohmann::json extra_meta = nlohmann::json::object()) {
  nlohmann::json meta;
  meta["kind"] = "model";
  meta["config"] = model_config_to_json(w.cfg);
  meta["slab_order"] = slab_order_string(w.cfg.ffn_ratio);
  meta["slab_order_hash"] = hex64(fnv1a64(slab_order_string(w.cfg.ffn_ratio)));
  for (auto& [k, v] : extra_meta.items()) meta[k] = v;
  save_checkpoint<T>(path, meta, w.named_tensors());
}

template <typename T>
ModelWeights<T> load_model(const std::string& path) {
  Checkpoint<T> ck = load_checkpoint<T>(path);
  if (ck.meta.value("kind", "") != "model")
    throw IoError("'" + path + "' holds kind '" +
                  ck.meta.value("kind", "<missing>") + "', expected 'model'");
  if (!ck.meta.contains("config"))
    throw IoError("'" + path + "' is missing the model config");
  const ModelConfig cfg =
      model_config_from_json(ck.meta.at("config"), path + ":config");
  const std::string order = slab_order_string(cfg.ffn_ratio);
  if (ck.meta.value("slab_order_hash", hex64(fnv1a64(order))) !=
      hex64(fnv1a64(order)))
    throw IoError("'" + path + "' was written with a different slab order (" +
                  ck.meta.value("slab_order", "?") + " vs " + order + ")");
  ModelWeights<T> w = zero_weights<T>(cfg);
  size_t used = 0;
  for (auto& [name, dst] : w.named_tensors()) {
    bool found = false;
    for (auto& [n2, src] : ck.tensors) {
      if (n2 != name) continue;
      if (src.shape() != dst->shape())
        throw IoError("tensor '" + name + "' in '" + path + "' has shape " +
                      shape_str(src.shape()) + ", model expects " +
                      shape_str(dst->shape()));
      *dst = std::move(src);
      found = true;
      ++used;
      break;
    }
    if (!found)
      throw IoError("tensor '" + name + "' missing from '" + path + "'");
  }
  if (used != ck.tensors.size())
    throw IoError("'" + path + "' holds " + std::to_string(ck.tensors.size()) +
                  " tensors, model uses " + std::to_string(used));
  return w;
}

namespace ckpt_detail {

template <typename Op, typename T>
void assign_named(Op& op, std::vector<std::pair<std::string, Tensor<T>>>& loaded,
                  const std::string& path) {
  size_t used = 0;
  for (auto& [name, dst] : op.named_tensors()) {
    bool found = false;
    for (auto& [n2, src] : loaded) {
      if (n2 != name) continue;
      *dst = std::move(src);
      found = true;
      ++used;
      break;
    }
    if (!found)
      throw IoError("tensor '" + name + "' missing from '" + path + "'");
  }
  if (used != loaded.size())
    throw IoError("'" + path + "' holds " + std::to_string(loaded.size()) +
                  " tensors, operator uses " + std::to_string(used));
}

}  // namespace ckpt_detail

template <typename T>
void save_mango_cores(const std::string& path, const MangoCores<T>& cores,
                      nlohmann::json extra_meta = nlohmann::json::object()) {
  cores.validate();
  const MangoRanks r = cores.ranks();
  nlohmann::json meta;
  meta["kind"] = "mango_cores";
  meta["ranks"] = {r.r1, r.r2, r.r3, r.r4};
  for (auto& [k, v] : extra_meta.items()) meta[k] = v;
  save_checkpoint<T>(path, meta, cores.named_tensors());
}

template <typename T>
MangoCores<T> load_mango_cores(const std::string& path) {
  Checkpoint<T> ck = load_checkpoint<T>(path);
  if (ck.meta.value("kind", "") != "mango_cores")
    throw IoError("'" + path + "' holds kind '" +
                  ck.meta.value("kind", "<missing>") +
                  "', expected 'mango_cores'");
  MangoCores<T> cores;
  ckpt_detail::assign_named(cores, ck.tensors, path);
  cores.validate();
  return cores;
}

template <typename T>
void save_ligo_operator(const std::string& path, const LigoOperator<T>& op,
                        nlohmann::json extra_meta = nlohmann::json::object()) {
  op.validate();
  nlohmann::json meta;
  meta["kind"] = "ligo_operator";
  for (auto& [k, v] : extra_meta.items()) meta[k] = v;
  save_checkpoint<T>(path, meta, op.named_tensors());
}

template <typename T>
LigoOperator<T> load_ligo_operator(const std::string& path) {
  Checkpoint<T> ck = load_checkpoint<T>(path);
  if (ck.meta.value("kind", "") != "ligo_operator")
    throw IoError("'" + path + "' holds kind '" +
                  ck.meta.value("kind", "<missing>") +
                  "', expected 'ligo_operator'");
  LigoOperator<T> op;
  ckpt_detail::assign_named(op, ck.tensors, path);
  op.validate();
  return op;
}

}  // namespace mgrow
