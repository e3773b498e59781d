#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cwlm/char_encoding.hpp"
#include "cwlm/vocab.hpp"

namespace cwlm {

/// An encoded token stream plus the raw surfaces it came from. Surfaces are
/// kept so OOV positions can still contribute characters (and so OOV analysis
/// can find them).
struct CorpusData {
  std::vector<std::int32_t> ids;
  std::vector<std::string> surfaces;

  std::size_t size() const { return ids.size(); }
};

CorpusData encode_tokens(std::vector<std::string> tokens, const Vocabulary& vocab);
CorpusData load_corpus(const std::filesystem::path& path, const Vocabulary& vocab);

/// One truncated-BPTT block: word ids [B x T], aligned character ids
/// [B x T x n] and next-word targets [B x T], all row-major.
struct Batch {
  int batch_size = 0;
  int unroll = 0;
  int n_chars = 0;
  std::vector<std::int32_t> inputs;
  std::vector<std::int32_t> char_inputs;
  std::vector<std::int32_t> targets;

  std::int32_t input(int b, int t) const { return inputs[static_cast<std::size_t>(b) * unroll + t]; }
  std::int32_t target(int b, int t) const { return targets[static_cast<std::size_t>(b) * unroll + t]; }
  const std::int32_t* chars(int b, int t) const {
    return char_inputs.data() + (static_cast<std::size_t>(b) * unroll + t) * n_chars;
  }
};

/// Splits the stream into `batch_size` contiguous lanes and cuts each lane
/// into unroll-sized blocks; consecutive batches continue the lanes so the
/// trainer can carry hidden state. The trailing remainder is dropped.
/// `control_seed` feeds the per-type random-control table when
/// cw.random_control is set.
std::vector<Batch> batchify(const CorpusData& data, int batch_size, int unroll,
                            const CWConfig& cw, const Vocabulary& vocab, const CharVocab& cv,
                            std::uint64_t control_seed = 0);

}  // namespace cwlm
