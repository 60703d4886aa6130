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

#ifndef VIDTHINKER_PROMPTS_H_
#define VIDTHINKER_PROMPTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "vidthinker/domain.h"

namespace vidthinker {

// Prompt builders for every reasoning call. All output is byte-stable for
// fixed inputs.
//
// The retrieval, motion and non-existence prompts reproduce the published
// annotation templates. The key-phrase, caption, frame-verdict, holistic and
// semantic prompts are reconstructions written in the same style; no
// reference wording exists for them.

// Question, options (one per line) and answer, as appended to every prompt.
std::string RenderQA(const QAPair& qa);

std::string BuildKeyPhrasePrompt(const QAPair& qa);

// `clip` supplies the label and time span; the clip imagery itself travels as
// an attachment.
std::string BuildCaptionPrompt(const std::string& cue, const Clip& clip);

// Captions are labeled Clip-0 ... Clip-(n-1) in the order given.
std::string BuildRetrievalPrompt(const std::vector<std::string>& captions,
                                 const QAPair& qa);

std::string BuildFrameVerdictPrompt(int64_t frame_index, double timestamp_s,
                                    const QAPair& qa);

std::string BuildMotionPrompt(const QAPair& qa);
std::string BuildNonExistencePrompt(const QAPair& qa);
std::string BuildHolisticPrompt(const QAPair& qa);
std::string BuildSemanticPrompt(const QAPair& qa);

}  // namespace vidthinker

#endif  // VIDTHINKER_PROMPTS_H_
