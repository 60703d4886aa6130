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

#ifndef VIDTHINKER_RESPONSE_GRAMMAR_H_
#define VIDTHINKER_RESPONSE_GRAMMAR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vidthinker {

// Parsed answer of the clip-retrieval step. An empty `clips` list is the
// "None." state.
struct RetrievalResult {
  std::string explanation;
  std::vector<int64_t> clips;  // strictly increasing

  bool none() const { return clips.empty(); }

  friend bool operator==(const RetrievalResult&,
                         const RetrievalResult&) = default;
};

// Parses a retrieval response. The first JSON object in `text` carrying a
// "clip_num" string is used; surrounding prose and markdown fences are
// ignored, and single-quoted Python dict syntax is accepted. The clip_num
// grammar is one of
//
//   One clip: [Clip-<i>]
//   Multiple clips: [Clip-<i>, Clip-<j>, ...]
//   None.                      (period optional)
//
// Indices come back sorted and deduplicated. When `clip_count` is given, any
// index >= clip_count is rejected. Throws ParseError carrying `text`.
RetrievalResult ParseClipNum(std::string_view text,
                             std::optional<int64_t> clip_count = {});

// Parses only the clip_num value (no JSON envelope).
std::vector<int64_t> ParseClipNumValue(std::string_view value,
                                       std::optional<int64_t> clip_count = {});

// Inverse of ParseClipNumValue for a well-formed list.
std::string RenderClipNum(const std::vector<int64_t>& clips);

// Case-insensitive yes/no on the first word after leading punctuation and
// whitespace. Throws ParseError when the first word is neither.
bool ParseYesNo(std::string_view text);

}  // namespace vidthinker

#endif  // VIDTHINKER_RESPONSE_GRAMMAR_H_
