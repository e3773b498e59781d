#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cwlm/common.hpp"

namespace cwlm {

// Surface markers for the two reserved word ids. Corpora that already contain
// the literal marker (PTB ships pre-unked text) map it onto the special id.
inline constexpr const char* kUnkSurface = "<unk>";
inline constexpr const char* kEosSurface = "<eos>";

/// Splits line-delimited text into whitespace tokens, appending one
/// end-of-sentence marker per line. Lines with no tokens are skipped.
std::vector<std::string> tokenize_lines(std::istream& in);
std::vector<std::string> tokenize_lines(std::string_view text);

/// Lenient UTF-8 decoding; bytes that do not form a valid sequence are kept
/// as single code points so that encoding never fails.
std::vector<char32_t> decode_utf8(std::string_view s);

/// Bidirectional token <-> id map. Ids 0 and 1 are reserved for <unk> and
/// <eos>; the remaining slots hold the most frequent tokens, ties broken
/// lexicographically. Encoding is total: unseen tokens map to unk.
class Vocabulary {
 public:
  static constexpr int kUnkId = 0;
  static constexpr int kEosId = 1;

  Vocabulary() = default;

  static Vocabulary build(const std::vector<std::string>& tokens, int max_size);

  int id_of(std::string_view token) const {
    auto it = ids_.find(std::string(token));
    return it == ids_.end() ? kUnkId : it->second;
  }

  bool contains(std::string_view token) const {
    return ids_.find(std::string(token)) != ids_.end();
  }

  const std::string& surface_of(int id) const { return surfaces_.at(id); }

  int size() const { return static_cast<int>(surfaces_.size()); }
  int unk_id() const { return kUnkId; }
  int eos_id() const { return kEosId; }

  /// One token per line, line number == id, specials on lines 0-1.
  void save(const std::filesystem::path& path) const;
  static Vocabulary load(const std::filesystem::path& path);

  std::string to_text() const;
  static Vocabulary from_text(std::string_view text);

 private:
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> surfaces_;

  void push(std::string surface);
};

/// Character <-> id map with a padding id and an unknown-character id on
/// slots 0 and 1. Built over the raw training surfaces; the special word
/// markers contribute no characters.
class CharVocab {
 public:
  static constexpr int kPadId = 0;
  static constexpr int kUnkCharId = 1;

  CharVocab() = default;

  static CharVocab build(const std::vector<std::string>& surfaces);

  int id_of(char32_t c) const {
    auto it = ids_.find(c);
    return it == ids_.end() ? kUnkCharId : it->second;
  }

  /// Total id count, the two specials included.
  int size() const { return static_cast<int>(chars_.size()); }
  /// Characters actually seen in training, the count reported to the user.
  int real_count() const { return size() - 2; }

  int pad_id() const { return kPadId; }
  int unk_char_id() const { return kUnkCharId; }

  char32_t char_at(int id) const { return chars_.at(id); }

  void save(const std::filesystem::path& path) const;
  static CharVocab load(const std::filesystem::path& path);

  std::string to_text() const;
  static CharVocab from_text(std::string_view text);

 private:
  std::unordered_map<char32_t, int> ids_;
  std::vector<char32_t> chars_;

  void push(char32_t c);
};

}  // namespace cwlm
