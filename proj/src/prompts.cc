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

#include "vidthinker/prompts.h"

#include <cstdio>
#include <stdexcept>

#include "vidthinker/errors.h"

namespace vidthinker {
namespace {

constexpr char kRetrievalTemplate[] =
    R"(Task:
You are an expert in analyzing video clip descriptions. Your task is to select which clip or combination of clips is necessary to answer the given question, ensuring the selected clips effectively cover the content of both the question and the answer.

Guidelines:
- Carefully read the descriptions to determine which clip(s) provide relevant content for the question and the answer.
- Clip descriptions are in chronological order. Use clip number to locate clips based on time-related expressions (e.g., "at the beginning of the video" suggests a smaller clip number, while "at the end of the video" suggests a larger one).
- First, determine if one clip can answer the question or if multiple clips are needed. Then, return a list containing the selected clip(s) and an explanation.
- If the question asks about the existence/movement of an object or event. The object/action/movement may not exist, meaning you can't find the answer in the description, but the question might still provide some clues. You need to find the sentence closest to those clues.
- If asked about the whole video description or overall atmosphere, you should return all clip numbers.
- If multiple clips provide similar descriptions of the content and any of them can be used to answer the question, return all corresponding clips.
- If there are no clues in all descriptions and cannot answer the question, return "None.".
- Important: Avoid including unnecessary clips.

Output Format:
1. Your output should be formed in a JSON file.
2. Only return the Python dictionary string.
For example:
{"explanation": "...", "clip_num": "One clip: [Clip-2]"}
{"explanation": "...", "clip_num": "Multiple clips: [Clip-1, Clip-7, Clip-8]"}
{"explanation": "...", "clip_num": "None."}
)";

constexpr char kMotionTemplate[] =
    R"(Task:
Analyze the given QA pair to determine if the question is related to speed. Specifically, check if it involves either absolute speed (the speed of a specific object) or relative speed (comparing the speed of different objects). Provide an output of "Yes" if the question pertains to speed, and "No" otherwise.
Important: Respond with "Yes" or "No" only.

Example:
Question 1: Which is faster, the white car or the bicycle? Options:
A. The bicycle.
B. The white car.
C. Both are at the same speed.
D. None of the above.
Answer 1: B. The white car.
Output: Yes.
Question 2: What color is the cat ?Options:
A. black
B. white
C. orange
D. gray
Answer 2: C. orange
Output: No.
)";

constexpr char kNonExistenceTemplate[] =
    R"(Task:
Analyze the given QA pair to determine if the question inquires about the existence of an object or action. If it does, and the answer is "No" (indicating non-existence), output "Yes." If the question is not about existence, or the answer is "Yes" (indicating existence), output "No."
Important: Respond with "Yes" or "No" only.

Example:
Question 1: After going through the bag, does the person meticulously clean the area around the sink?
Answer 1: No, the person does not clean the area around the sink after going through the bag. The video primarily focuses on the action of the person with the bag and items, not on cleaning activities.
Output: Yes.
Question 2: Is there a cat sitting on the windowsill in the video?
Answer 2: Yes, there is a cat sitting on the windowsill throughout the video.
Output: No.
)";

constexpr char kHolisticTemplate[] =
    R"(Task:
Analyze the given QA pair to determine if the question is open-ended or vague about the video as a whole, such as asking for a detailed description of the entire video or its overall atmosphere, without pointing to a specific object, action, or moment. Provide an output of "Yes" if it does, and "No" otherwise.
Important: Respond with "Yes" or "No" only.

Example:
Question 1: Please describe the video in detail.
Answer 1: The video opens in a kitchen where a woman prepares a salad, then moves to a dining room where a family eats together.
Output: Yes.
Question 2: What color is the cat ?
Answer 2: orange
Output: No.
)";

constexpr char kSemanticTemplate[] =
    R"(Task:
Analyze the given QA pair to determine if answering the question requires recognizing specific visual content, such as people, objects, scenes, or their attributes, in addition to any motion. Provide an output of "Yes" if it does, and "No" otherwise.
Important: Respond with "Yes" or "No" only.

Example:
Question 1: Could you describe the camera movement in the video?
Answer 1: The camera pans from the drummer's hands down to his feet on the pedals.
Output: Yes.
Question 2: How does the person jump off the diving board?
Answer 2: With a forward somersault.
Output: No.
)";

constexpr char kKeyPhraseTemplate[] =
    R"(Task:
Read the question and its answer below and distill the key phrase that captures the core information needed to fulfill the instruction. Combine the subject, the action, and the objects involved into one short declarative sentence.
Important: Respond with the phrase only.
)";

constexpr char kCaptionTemplate[] =
    R"(Task:
Describe the attached video clip in one or two sentences. Use the reference cue to focus on the elements it mentions, but describe only what is visible in this clip. Mention something from the cue only if it can be observed in the clip.
)";

constexpr char kVerdictTemplate[] =
    R"(Task:
Look at the attached video frame and decide whether it is relevant to the question and answer below, that is, whether it shows visual evidence needed to answer the question.
Important: Respond with "Yes" or "No" only.
)";

std::string FormatSeconds(double seconds) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1fs", seconds);
  return buffer;
}

std::string ClassifierPrompt(const char* tmpl, const QAPair& qa) {
  return std::string(tmpl) + "\n" + RenderQA(qa) + "Output:";
}

}  // namespace

std::string RenderQA(const QAPair& qa) {
  std::string out = "Question: " + qa.question + "\n";
  if (!qa.options.empty()) {
    out += "Options:\n";
    for (const std::string& option : qa.options) out += option + "\n";
  }
  out += "Answer: " + qa.answer + "\n";
  return out;
}

std::string BuildKeyPhrasePrompt(const QAPair& qa) {
  return std::string(kKeyPhraseTemplate) + "\n" + RenderQA(qa);
}

std::string BuildCaptionPrompt(const std::string& cue, const Clip& clip) {
  return std::string(kCaptionTemplate) + "\nClip: Clip-" +
         std::to_string(clip.index) + " (" + FormatSeconds(clip.start_s) +
         " to " + FormatSeconds(clip.end_s) + ")\nReference cue: " +
         (cue.empty() ? std::string("(none)") : cue) + "\n";
}

std::string BuildRetrievalPrompt(const std::vector<std::string>& captions,
                                 const QAPair& qa) {
  if (captions.empty()) {
    throw ValidationError("retrieval prompt needs at least one caption");
  }
  std::string out = kRetrievalTemplate;
  out += "\nClip descriptions:\n";
  for (size_t i = 0; i < captions.size(); ++i) {
    out += "Clip-" + std::to_string(i) + ": " + captions[i] + "\n";
  }
  out += "\n" + RenderQA(qa);
  return out;
}

std::string BuildFrameVerdictPrompt(int64_t frame_index, double timestamp_s,
                                    const QAPair& qa) {
  return std::string(kVerdictTemplate) + "\nFrame: " +
         std::to_string(frame_index) + " (" + FormatSeconds(timestamp_s) +
         ")\n" + RenderQA(qa);
}

std::string BuildMotionPrompt(const QAPair& qa) {
  return ClassifierPrompt(kMotionTemplate, qa);
}

std::string BuildNonExistencePrompt(const QAPair& qa) {
  return ClassifierPrompt(kNonExistenceTemplate, qa);
}

std::string BuildHolisticPrompt(const QAPair& qa) {
  return ClassifierPrompt(kHolisticTemplate, qa);
}

std::string BuildSemanticPrompt(const QAPair& qa) {
  return ClassifierPrompt(kSemanticTemplate, qa);
}

}  // namespace vidthinker
