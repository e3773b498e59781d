#include "cwlm/vocab.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace cwlm {

std::vector<std::string> tokenize_lines(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = tokens.size();
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) tokens.emplace_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.size() > start) tokens.emplace_back(kEosSurface);
  }
  return tokens;
}

std::vector<std::string> tokenize_lines(std::string_view text) {
  std::istringstream in{std::string(text)};
  return tokenize_lines(in);
}

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    int extra = 0;
    char32_t cp = b0;
    if (b0 < 0x80) {
      extra = 0;
    } else if ((b0 & 0xe0) == 0xc0) {
      extra = 1;
      cp = b0 & 0x1f;
    } else if ((b0 & 0xf0) == 0xe0) {
      extra = 2;
      cp = b0 & 0x0f;
    } else if ((b0 & 0xf8) == 0xf0) {
      extra = 3;
      cp = b0 & 0x07;
    } else {
      out.push_back(b0);  // stray continuation byte, keep as-is
      ++i;
      continue;
    }
    if (i + extra >= s.size()) {
      out.push_back(b0);  // truncated sequence
      ++i;
      continue;
    }
    bool valid = true;
    for (int k = 1; k <= extra; ++k) {
      const auto bk = static_cast<unsigned char>(s[i + k]);
      if ((bk & 0xc0) != 0x80) {
        valid = false;
        break;
      }
      cp = (cp << 6) | (bk & 0x3f);
    }
    if (!valid) {
      out.push_back(b0);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += 1 + extra;
  }
  return out;
}

static std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xc0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xe0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  } else {
    out += static_cast<char>(0xf0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3f));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (cp & 0x3f));
  }
  return out;
}

void Vocabulary::push(std::string surface) {
  ids_.emplace(surface, static_cast<int>(surfaces_.size()));
  surfaces_.push_back(std::move(surface));
}

Vocabulary Vocabulary::build(const std::vector<std::string>& tokens, int max_size) {
  if (max_size < 2) throw ConfigError("vocabulary max_size must be >= 2 to hold <unk> and <eos>");

  // std::map keeps types sorted lexicographically, which settles frequency
  // ties deterministically.
  std::map<std::string, std::int64_t> counts;
  for (const auto& t : tokens) counts[t]++;
  counts.erase(kUnkSurface);
  counts.erase(kEosSurface);

  std::vector<const std::pair<const std::string, std::int64_t>*> order;
  order.reserve(counts.size());
  for (const auto& kv : counts) order.push_back(&kv);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* a, const auto* b) { return a->second > b->second; });

  Vocabulary v;
  v.push(kUnkSurface);
  v.push(kEosSurface);
  for (const auto* kv : order) {
    if (v.size() >= max_size) break;
    v.push(kv->first);
  }
  return v;
}

std::string Vocabulary::to_text() const {
  std::string out;
  for (const auto& s : surfaces_) {
    out += s;
    out += '\n';
  }
  return out;
}

Vocabulary Vocabulary::from_text(std::string_view text) {
  Vocabulary v;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string token(text.substr(pos, nl - pos));
    if (!token.empty() && token.back() == '\r') token.pop_back();
    if (!token.empty()) v.push(std::move(token));
    pos = nl + 1;
  }
  if (v.size() < 2 || v.surface_of(kUnkId) != kUnkSurface || v.surface_of(kEosId) != kEosSurface)
    throw CorpusError("vocabulary file must carry <unk> and <eos> on lines 0 and 1");
  return v;
}

void Vocabulary::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError("cannot write vocabulary file: " + path.string());
  out << to_text();
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read vocabulary file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

void CharVocab::push(char32_t c) {
  ids_.emplace(c, static_cast<int>(chars_.size()));
  chars_.push_back(c);
}

CharVocab CharVocab::build(const std::vector<std::string>& surfaces) {
  std::vector<char32_t> seen;
  for (const auto& s : surfaces) {
    if (s == kUnkSurface || s == kEosSurface) continue;  // markers, not surfaces
    for (char32_t c : decode_utf8(s)) seen.push_back(c);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

  CharVocab cv;
  cv.push(0);  // pad
  cv.push(0);  // unknown character
  for (char32_t c : seen) cv.push(c);
  return cv;
}

std::string CharVocab::to_text() const {
  // Specials have no character; store only the real ones, one per line.
  std::string out = "<pad>\n<unkc>\n";
  for (std::size_t i = 2; i < chars_.size(); ++i) {
    out += encode_utf8(chars_[i]);
    out += '\n';
  }
  return out;
}

CharVocab CharVocab::from_text(std::string_view text) {
  CharVocab cv;
  cv.push(0);
  cv.push(0);
  std::size_t pos = 0;
  int line = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string entry(text.substr(pos, nl - pos));
    if (!entry.empty() && entry.back() == '\r') entry.pop_back();
    pos = nl + 1;
    if (line == 0 || line == 1) {
      if ((line == 0 && entry != "<pad>") || (line == 1 && entry != "<unkc>"))
        throw CorpusError("character vocabulary file must carry <pad> and <unkc> on lines 0 and 1");
      ++line;
      continue;
    }
    ++line;
    if (entry.empty()) continue;
    auto cps = decode_utf8(entry);
    if (cps.size() != 1) throw CorpusError("character vocabulary line holds more than one character: " + entry);
    cv.push(cps[0]);
  }
  return cv;
}

void CharVocab::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError("cannot write character vocabulary file: " + path.string());
  out << to_text();
}

CharVocab CharVocab::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read character vocabulary file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

}  // namespace cwlm
