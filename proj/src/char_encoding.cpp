#include "cwlm/char_encoding.hpp"

#include <algorithm>

namespace cwlm {

std::string to_string(CharOrder order) {
  switch (order) {
    case CharOrder::forward: return "forward";
    case CharOrder::backward: return "backward";
    case CharOrder::both: return "both";
  }
  return "forward";
}

CharOrder char_order_from_string(std::string_view s) {
  if (s == "forward") return CharOrder::forward;
  if (s == "backward") return CharOrder::backward;
  if (s == "both") return CharOrder::both;
  throw ConfigError("unknown character order '" + std::string(s) +
                    "' (expected forward, backward or both)");
}

void CWConfig::validate(int total_emb) const {
  if (n < 0) throw ConfigError("n_chars must be >= 0");
  if (n > 0 && char_emb < 1) throw ConfigError("char_emb must be >= 1 when n_chars > 0");
  if (order == CharOrder::both && n % 2 != 0)
    throw ConfigError("char_order 'both' needs an even n_chars (got " + std::to_string(n) + ")");
  if (n > 0 && static_cast<std::int64_t>(n) * char_emb >= total_emb)
    throw ConfigError("n_chars * char_emb (=" + std::to_string(static_cast<std::int64_t>(n) * char_emb) +
                      ") must stay below the total embedding size (=" + std::to_string(total_emb) + ")");
  if (max_random_len < 0) throw ConfigError("max_random_len must be >= 0");
}

namespace {

// Forward slots: first min(len, n) characters, pads after.
void fill_forward(const std::vector<char32_t>& cps, int n, const CharVocab& cv, std::int32_t* out) {
  const int take = std::min<int>(static_cast<int>(cps.size()), n);
  for (int k = 0; k < take; ++k) out[k] = cv.id_of(cps[k]);
  for (int k = take; k < n; ++k) out[k] = CharVocab::kPadId;
}

// Backward slots: last min(len, n) characters in reversed order, pads after.
void fill_backward(const std::vector<char32_t>& cps, int n, const CharVocab& cv, std::int32_t* out) {
  const int len = static_cast<int>(cps.size());
  const int take = std::min(len, n);
  for (int k = 0; k < take; ++k) out[k] = cv.id_of(cps[len - 1 - k]);
  for (int k = take; k < n; ++k) out[k] = CharVocab::kPadId;
}

}  // namespace

std::vector<std::int32_t> char_sequence(std::string_view surface, int n, CharOrder order,
                                        const CharVocab& cv) {
  std::vector<std::int32_t> out(static_cast<std::size_t>(std::max(n, 0)), CharVocab::kPadId);
  if (n <= 0) return out;
  const auto cps = decode_utf8(surface);
  switch (order) {
    case CharOrder::forward:
      fill_forward(cps, n, cv, out.data());
      break;
    case CharOrder::backward:
      fill_backward(cps, n, cv, out.data());
      break;
    case CharOrder::both: {
      const int half = n / 2;
      fill_forward(cps, half, cv, out.data());
      fill_backward(cps, half, cv, out.data() + half);
      break;
    }
  }
  return out;
}

std::vector<std::int32_t> random_char_sequence(Rng& rng, int n, int max_len, const CharVocab& cv) {
  if (max_len < 1) throw ConfigError("random_char_sequence needs max_len >= 1");
  if (cv.real_count() < 1) throw ConfigError("random_char_sequence needs at least one real character");
  std::vector<std::int32_t> out(static_cast<std::size_t>(std::max(n, 0)), CharVocab::kPadId);
  if (n <= 0) return out;
  const auto len = rng.uniform_int(1, max_len);
  const auto take = std::min<std::int64_t>(len, n);
  for (std::int64_t k = 0; k < take; ++k)
    out[static_cast<std::size_t>(k)] =
        static_cast<std::int32_t>(rng.uniform_int(2, cv.size() - 1));
  return out;
}

std::vector<std::int32_t> type_char_table(const Vocabulary& vocab, const CWConfig& cw,
                                          const CharVocab& cv, std::uint64_t control_seed) {
  const int n = cw.n;
  const int V = vocab.size();
  std::vector<std::int32_t> table(static_cast<std::size_t>(V) * n, CharVocab::kPadId);
  if (n == 0) return table;
  if (cw.random_control) {
    Rng rng(control_seed);
    for (int v = 0; v < V; ++v) {
      auto seq = random_char_sequence(rng, n, cw.random_len_cap(), cv);
      std::copy(seq.begin(), seq.end(), table.begin() + static_cast<std::size_t>(v) * n);
    }
    return table;
  }
  for (int v = 0; v < V; ++v) {
    if (v == Vocabulary::kUnkId || v == Vocabulary::kEosId) continue;  // stays all-pad
    auto seq = char_sequence(vocab.surface_of(v), n, cw.order, cv);
    std::copy(seq.begin(), seq.end(), table.begin() + static_cast<std::size_t>(v) * n);
  }
  return table;
}

}  // namespace cwlm
