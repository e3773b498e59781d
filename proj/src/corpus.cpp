#include "cwlm/corpus.hpp"

#include <fstream>
#include <utility>

namespace cwlm {

CorpusData encode_tokens(std::vector<std::string> tokens, const Vocabulary& vocab) {
  CorpusData data;
  data.ids.reserve(tokens.size());
  data.surfaces.reserve(tokens.size());
  for (auto& t : tokens) {
    data.ids.push_back(vocab.id_of(t));
    data.surfaces.push_back(std::move(t));
  }
  return data;
}

CorpusData load_corpus(const std::filesystem::path& path, const Vocabulary& vocab) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read corpus file: " + path.string());
  return encode_tokens(tokenize_lines(in), vocab);
}

std::vector<Batch> batchify(const CorpusData& data, int batch_size, int unroll,
                            const CWConfig& cw, const Vocabulary& vocab, const CharVocab& cv,
                            std::uint64_t control_seed) {
  if (batch_size < 1 || unroll < 1) throw ConfigError("batch_size and unroll must be >= 1");
  const auto total = static_cast<std::int64_t>(data.ids.size());
  const std::int64_t need = static_cast<std::int64_t>(batch_size) * (unroll + 1);
  if (total < need)
    throw CorpusError("corpus too short to batch: " + std::to_string(total) + " tokens, need at least " +
                      std::to_string(need) + " for batch_size " + std::to_string(batch_size) +
                      " and unroll " + std::to_string(unroll));

  const std::int64_t lane_len = total / batch_size;
  const std::int64_t num_batches = (lane_len - 1) / unroll;
  const int n = cw.n;

  const auto table = type_char_table(vocab, cw, cv, control_seed);
  const bool oov_surfaces = cw.use_oov_surfaces && !cw.random_control;

  std::vector<Batch> batches(static_cast<std::size_t>(num_batches));
  for (std::int64_t k = 0; k < num_batches; ++k) {
    Batch& batch = batches[static_cast<std::size_t>(k)];
    batch.batch_size = batch_size;
    batch.unroll = unroll;
    batch.n_chars = n;
    batch.inputs.resize(static_cast<std::size_t>(batch_size) * unroll);
    batch.targets.resize(static_cast<std::size_t>(batch_size) * unroll);
    batch.char_inputs.resize(static_cast<std::size_t>(batch_size) * unroll * n);
    for (int b = 0; b < batch_size; ++b) {
      const std::int64_t lane_start = static_cast<std::int64_t>(b) * lane_len;
      for (int t = 0; t < unroll; ++t) {
        const std::int64_t pos = lane_start + k * unroll + t;
        const std::int32_t id = data.ids[static_cast<std::size_t>(pos)];
        const std::size_t cell = static_cast<std::size_t>(b) * unroll + t;
        batch.inputs[cell] = id;
        batch.targets[cell] = data.ids[static_cast<std::size_t>(pos + 1)];
        if (n == 0) continue;
        std::int32_t* chars = batch.char_inputs.data() + cell * n;
        if (oov_surfaces && id == Vocabulary::kUnkId &&
            data.surfaces[static_cast<std::size_t>(pos)] != kUnkSurface) {
          const auto seq = char_sequence(data.surfaces[static_cast<std::size_t>(pos)], n, cw.order, cv);
          std::copy(seq.begin(), seq.end(), chars);
        } else {
          const std::int32_t* row = table.data() + static_cast<std::size_t>(id) * n;
          std::copy(row, row + n, chars);
        }
      }
    }
  }
  return batches;
}

}  // namespace cwlm
