#pragma once

#include <span>
#include <string>
#include <vector>

#include "corpus/vocabulary.hpp"

namespace charlab {

struct SplitRatios {
  double train = 0.8;
  double val = 0.1;
  double test = 0.1;
};

// Contiguous, document-order train/val/test partition of the encoded corpus.
// Boundary rule: train ends at floor(f_train*len), val at
// floor((f_train+f_val)*len); floor-rounding remainders land in test.
struct CorpusSplits {
  std::vector<int> ids;
  size_t train_end = 0;
  size_t val_end = 0;
  SplitRatios ratios;

  std::span<const int> train() const { return {ids.data(), train_end}; }
  std::span<const int> val() const { return {ids.data() + train_end, val_end - train_end}; }
  std::span<const int> test() const { return {ids.data() + val_end, ids.size() - val_end}; }
  std::span<const int> split(const std::string& name) const;  // "train"|"val"|"test"
};

CorpusSplits split_corpus(std::vector<int> ids, SplitRatios ratios);

// A prepared dataset: the full-corpus vocabulary plus encoded splits.
// Persisted as manifest.json + ids.bin so every downstream artifact can
// verify it was produced from the same data (content_hash covers the
// corpus bytes).
struct Dataset {
  Vocabulary vocab;
  CorpusSplits splits;
  std::string content_hash;

  std::u32string decode_split(const std::string& name) const { return vocab.decode_all(splits.split(name)); }
};

Dataset prep_dataset(const std::string& text_utf8, SplitRatios ratios, std::string_view origin = "corpus");
void save_dataset(const Dataset& ds, const std::string& dir);
Dataset load_dataset(const std::string& manifest_path);

// Stateful minibatch cursor for truncated-BPTT training. The training
// split is cut into B contiguous stripes of floor(len/B) ids; window k
// of every stripe starts at k*T, so consecutive windows abut exactly and
// hidden state can be carried across them. A final partial window is
// dropped.
class BatchCursor {
 public:
  BatchCursor(size_t train_len, int batch, int unroll);

  struct Batch {
    std::vector<int> inputs;   // B*T, row-major
    std::vector<int> targets;  // B*T, shifted by one within the stripe
    bool epoch_wrapped = false;
  };

  Batch next(std::span<const int> train);
  void reset() { window_ = 0; }

  int batch_size() const { return B_; }
  int unroll() const { return T_; }
  size_t stripe_len() const { return stripe_len_; }
  size_t windows_per_epoch() const { return windows_per_stripe_; }

 private:
  size_t stripe_len_;
  size_t windows_per_stripe_;
  int B_;
  int T_;
  size_t window_ = 0;
};

}  // namespace charlab
