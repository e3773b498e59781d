#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cwlm/common.hpp"
#include "cwlm/vocab.hpp"

namespace cwlm {

enum class CharOrder { forward, backward, both };

std::string to_string(CharOrder order);
CharOrder char_order_from_string(std::string_view s);

/// Architecture knobs for the character-word embedding. n == 0 is the pure
/// word-level model.
struct CWConfig {
  int n = 0;               // character slots per word
  int char_emb = 0;        // embedding size per character slot
  CharOrder order = CharOrder::forward;
  bool shared_weights = false;
  bool use_oov_surfaces = false;
  bool random_control = false;
  int max_random_len = 0;  // 0 defaults to n

  /// Checks the slot/order arithmetic against the total embedding size.
  void validate(int total_emb) const;

  int random_len_cap() const { return max_random_len > 0 ? max_random_len : n; }
};

/// Fixed-length character-id sequence for a surface form.
///   forward:  first min(len, n) characters, then pads
///   backward: last min(len, n) characters reversed, then pads
///   both:     forward sequence of n/2 followed by backward sequence of n/2
std::vector<std::int32_t> char_sequence(std::string_view surface, int n, CharOrder order,
                                        const CharVocab& cv);

/// Random-control sequence: length uniform on [1, max_len], ids uniform over
/// the real characters, padded to n.
std::vector<std::int32_t> random_char_sequence(Rng& rng, int n, int max_len, const CharVocab& cv);

/// Per-word-type character ids, flattened [V x n]. Under random control every
/// type gets a control sequence drawn from `control_seed`; otherwise types get
/// their surface characters and the specials all-pad rows.
std::vector<std::int32_t> type_char_table(const Vocabulary& vocab, const CWConfig& cw,
                                          const CharVocab& cv, std::uint64_t control_seed = 0);

}  // namespace cwlm
