#include "corpus/dataset.hpp"

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "util/hash.hpp"
#include "util/io.hpp"
#include "util/utf8.hpp"

namespace charlab {

using nlohmann::json;

std::span<const int> CorpusSplits::split(const std::string& name) const {
  if (name == "train") return train();
  if (name == "val") return val();
  if (name == "test") return test();
  throw std::invalid_argument("unknown split name: " + name);
}

CorpusSplits split_corpus(std::vector<int> ids, SplitRatios ratios) {
  if (!(ratios.train > 0 && ratios.val > 0 && ratios.test > 0)) {
    throw std::invalid_argument("split ratios must be positive");
  }
  if (std::abs(ratios.train + ratios.val + ratios.test - 1.0) > 1e-9) {
    throw std::invalid_argument("split ratios must sum to 1");
  }
  CorpusSplits s;
  const double len = static_cast<double>(ids.size());
  s.train_end = static_cast<size_t>(std::floor(ratios.train * len));
  s.val_end = static_cast<size_t>(std::floor((ratios.train + ratios.val) * len));
  s.ids = std::move(ids);
  s.ratios = ratios;
  return s;
}

Dataset prep_dataset(const std::string& text_utf8, SplitRatios ratios, std::string_view origin) {
  if (text_utf8.empty()) throw std::invalid_argument("corpus text is empty");
  const std::u32string text = decode_utf8_or_throw(text_utf8, origin);
  Dataset ds;
  ds.vocab = Vocabulary::from_text(text);
  ds.splits = split_corpus(ds.vocab.encode_all(text), ratios);
  ds.content_hash = hash_hex(text_utf8);
  return ds;
}

void save_dataset(const Dataset& ds, const std::string& dir) {
  ensure_dir(dir);
  std::string blob;
  blob.reserve(4 * ds.splits.ids.size());
  for (int id : ds.splits.ids) put_u32(blob, static_cast<std::uint32_t>(id));
  write_file(dir + "/ids.bin", blob);

  json manifest = {
      {"format", "charlab-dataset-v1"},
      {"vocab", ds.vocab.chars_utf8()},
      {"vocab_size", ds.vocab.size()},
      {"length", ds.splits.ids.size()},
      {"train_end", ds.splits.train_end},
      {"val_end", ds.splits.val_end},
      {"ratios", {ds.splits.ratios.train, ds.splits.ratios.val, ds.splits.ratios.test}},
      {"content_hash", ds.content_hash},
      {"ids_file", "ids.bin"},
  };
  write_file(dir + "/manifest.json", manifest.dump(2) + "\n");
}

Dataset load_dataset(const std::string& manifest_path) {
  const json m = json::parse(read_file(manifest_path));
  if (m.value("format", "") != "charlab-dataset-v1") {
    throw IoError("not a dataset manifest: " + manifest_path);
  }
  Dataset ds;
  ds.vocab = Vocabulary::from_chars(decode_utf8_or_throw(m.at("vocab").get<std::string>(), manifest_path));
  ds.content_hash = m.at("content_hash").get<std::string>();

  const std::string dir = std::filesystem::path(manifest_path).parent_path().string();
  const std::string ids_path = (dir.empty() ? std::string(".") : dir) + "/" + m.at("ids_file").get<std::string>();
  const std::string blob = read_file(ids_path);
  const size_t len = m.at("length").get<size_t>();
  if (blob.size() != 4 * len) throw IoError("ids.bin length does not match manifest: " + ids_path);

  ByteReader r(blob);
  CorpusSplits& s = ds.splits;
  s.ids.resize(len);
  const int K = ds.vocab.size();
  for (size_t i = 0; i < len; ++i) {
    const auto id = static_cast<int>(r.u32());
    if (id < 0 || id >= K) throw IoError("corrupt ids.bin: id out of range");
    s.ids[i] = id;
  }
  s.train_end = m.at("train_end").get<size_t>();
  s.val_end = m.at("val_end").get<size_t>();
  const auto& rr = m.at("ratios");
  s.ratios = {rr.at(0).get<double>(), rr.at(1).get<double>(), rr.at(2).get<double>()};
  if (s.train_end > s.val_end || s.val_end > s.ids.size()) throw IoError("corrupt split boundaries in " + manifest_path);

  const std::string round_trip = encode_utf8(ds.vocab.decode_all(s.ids));
  if (hash_hex(round_trip) != ds.content_hash) throw IoError("content hash mismatch for " + manifest_path);
  return ds;
}

BatchCursor::BatchCursor(size_t train_len, int batch, int unroll) : B_(batch), T_(unroll) {
  if (batch < 1 || unroll < 1) throw std::invalid_argument("batch size and unroll length must be >= 1");
  stripe_len_ = train_len / static_cast<size_t>(batch);
  if (stripe_len_ < static_cast<size_t>(unroll) + 1) {
    throw std::invalid_argument("training split too short for batch " + std::to_string(batch) + " and unroll " +
                                std::to_string(unroll));
  }
  // targets need one lookahead id inside the stripe
  windows_per_stripe_ = (stripe_len_ - 1) / static_cast<size_t>(unroll);
}

BatchCursor::Batch BatchCursor::next(std::span<const int> train) {
  if (train.size() / static_cast<size_t>(B_) != stripe_len_) {
    throw std::invalid_argument("training split does not match cursor geometry");
  }
  Batch out;
  const auto T = static_cast<size_t>(T_);
  out.inputs.resize(static_cast<size_t>(B_) * T);
  out.targets.resize(static_cast<size_t>(B_) * T);
  for (int b = 0; b < B_; ++b) {
    const size_t base = static_cast<size_t>(b) * stripe_len_ + window_ * T;
    for (size_t t = 0; t < T; ++t) {
      out.inputs[static_cast<size_t>(b) * T + t] = train[base + t];
      out.targets[static_cast<size_t>(b) * T + t] = train[base + t + 1];
    }
  }
  ++window_;
  if (window_ >= windows_per_stripe_) {
    out.epoch_wrapped = true;
    window_ = 0;
  }
  return out;
}

}  // namespace charlab
