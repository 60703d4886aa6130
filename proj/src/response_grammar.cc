// Copyright 2026 The VidThinker Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vidthinker/response_grammar.h"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>

#include "vidthinker/domain.h"
#include "vidthinker/errors.h"

namespace vidthinker {
namespace {

using nlohmann::json;

// Maximum digits accepted for a clip index.
constexpr size_t kMaxIndexDigits = 9;

char Lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

// Cursor over the clip_num value.
class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void SkipSpace() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  bool Done() {
    SkipSpace();
    return pos_ == s_.size();
  }
  // Case-insensitive keyword match; spaces in `word` match any run of
  // whitespace.
  bool Keyword(std::string_view word) {
    SkipSpace();
    size_t p = pos_;
    for (size_t i = 0; i < word.size(); ++i) {
      if (word[i] == ' ') {
        if (p >= s_.size() || !std::isspace(static_cast<unsigned char>(s_[p])))
          return false;
        while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p])))
          ++p;
        continue;
      }
      if (p >= s_.size() || Lower(s_[p]) != Lower(word[i])) return false;
      ++p;
    }
    pos_ = p;
    return true;
  }
  bool Char(char c) {
    SkipSpace();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::optional<int64_t> Number() {
    SkipSpace();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    const size_t len = pos_ - start;
    if (len == 0 || len > kMaxIndexDigits) return std::nullopt;
    return std::stoll(std::string(s_.substr(start, len)));
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

std::optional<int64_t> ClipRef(Scanner& sc) {
  if (!sc.Keyword("clip")) return std::nullopt;
  sc.Char('-');
  return sc.Number();
}

// Returns the balanced {...} starting at `open`, honoring quoted strings, or
// npos if it never closes.
size_t MatchBrace(std::string_view text, size_t open) {
  int depth = 0;
  char quote = 0;
  for (size_t i = open; i < text.size(); ++i) {
    const char c = text[i];
    if (quote != 0) {
      if (c == '\\') {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return i;
    }
  }
  return std::string_view::npos;
}

// Rewrites single-quoted strings as double-quoted JSON strings.
std::string PythonDictToJson(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  char quote = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quote == 0) {
      if (c == '\'') {
        quote = '\'';
        out.push_back('"');
      } else {
        if (c == '"') quote = '"';
        out.push_back(c);
      }
      continue;
    }
    if (c == '\\' && i + 1 < text.size()) {
      if (quote == '\'' && text[i + 1] == '\'') {
        out.push_back('\'');
      } else {
        out.push_back(c);
        out.push_back(text[i + 1]);
      }
      ++i;
    } else if (c == quote) {
      out.push_back('"');
      quote = 0;
    } else if (quote == '\'' && c == '"') {
      out += "\\\"";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::optional<json> ParseObject(std::string_view candidate) {
  json parsed = json::parse(candidate, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) {
    parsed = json::parse(PythonDictToJson(candidate), nullptr, false);
  }
  if (parsed.is_object() && parsed.contains("clip_num")) return parsed;
  return std::nullopt;
}

}  // namespace

std::vector<int64_t> ParseClipNumValue(std::string_view value,
                                       std::optional<int64_t> clip_count) {
  const std::string raw(value);
  std::vector<int64_t> clips;
  Scanner sc(value);
  if (sc.Keyword("none")) {
    sc.Char('.');
    if (!sc.Done()) throw ParseError("clip_num: text after 'None'", raw);
    return clips;
  }
  if (sc.Keyword("one clip")) {
    if (!sc.Char(':') || !sc.Char('[')) {
      throw ParseError("clip_num: expected ': [' after 'One clip'", raw);
    }
    auto index = ClipRef(sc);
    if (!index || !sc.Char(']')) {
      throw ParseError("clip_num: malformed single clip reference", raw);
    }
    clips.push_back(*index);
  } else if (sc.Keyword("multiple clips")) {
    if (!sc.Char(':') || !sc.Char('[')) {
      throw ParseError("clip_num: expected ': [' after 'Multiple clips'", raw);
    }
    if (!sc.Char(']')) {
      do {
        auto index = ClipRef(sc);
        if (!index) {
          throw ParseError("clip_num: malformed clip reference in list", raw);
        }
        clips.push_back(*index);
      } while (sc.Char(','));
      if (!sc.Char(']')) throw ParseError("clip_num: unterminated list", raw);
    }
  } else {
    throw ParseError("clip_num: matches no grammar arm", raw);
  }
  sc.Char('.');
  if (!sc.Done()) throw ParseError("clip_num: trailing text", raw);

  std::sort(clips.begin(), clips.end());
  clips.erase(std::unique(clips.begin(), clips.end()), clips.end());
  if (clip_count.has_value()) {
    for (int64_t c : clips) {
      if (c >= *clip_count) {
        throw ParseError("clip_num: Clip-" + std::to_string(c) +
                             " is out of range for " +
                             std::to_string(*clip_count) + " clips",
                         raw);
      }
    }
  }
  return clips;
}

RetrievalResult ParseClipNum(std::string_view text,
                             std::optional<int64_t> clip_count) {
  std::optional<json> object;
  for (size_t open = text.find('{'); open != std::string_view::npos;) {
    const size_t close = MatchBrace(text, open);
    if (close == std::string_view::npos) {
      open = text.find('{', open + 1);
      continue;
    }
    object = ParseObject(text.substr(open, close - open + 1));
    if (object) break;
    open = text.find('{', open + 1);
  }
  if (!object) {
    throw ParseError("retrieval response has no JSON object with clip_num",
                     std::string(text));
  }
  const json& clip_num = (*object)["clip_num"];
  if (!clip_num.is_string()) {
    throw ParseError("clip_num is not a string", std::string(text));
  }
  RetrievalResult result;
  if (object->contains("explanation")) {
    const json& explanation = (*object)["explanation"];
    result.explanation =
        explanation.is_string() ? explanation.get<std::string>()
                                : explanation.dump();
  }
  try {
    result.clips =
        ParseClipNumValue(clip_num.get_ref<const std::string&>(), clip_count);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), std::string(text));
  }
  return result;
}

std::string RenderClipNum(const std::vector<int64_t>& clips) {
  if (clips.empty()) return "None.";
  if (clips.size() == 1) {
    return "One clip: [Clip-" + std::to_string(clips.front()) + "]";
  }
  std::string out = "Multiple clips: [";
  for (size_t i = 0; i < clips.size(); ++i) {
    if (i > 0) out += ", ";
    out += "Clip-" + std::to_string(clips[i]);
  }
  return out + "]";
}

bool ParseYesNo(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size() &&
         !std::isalnum(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  std::string word;
  while (pos < text.size() &&
         std::isalpha(static_cast<unsigned char>(text[pos]))) {
    word.push_back(Lower(text[pos++]));
  }
  if (word == "yes") return true;
  if (word == "no") return false;
  throw ParseError("expected 'Yes' or 'No'", std::string(text));
}

}  // namespace vidthinker
