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

#include "vidthinker/reasoner.h"

#include <algorithm>
#include <thread>
#include <utility>

#include "vidthinker/errors.h"
#include "vidthinker/prompts.h"

namespace vidthinker {
namespace {

constexpr ReasonRole kAllRoles[] = {
    ReasonRole::kKeyPhrases,        ReasonRole::kClipCaption,
    ReasonRole::kClipRetrieval,     ReasonRole::kFrameVerdict,
    ReasonRole::kClassifyMotion,    ReasonRole::kClassifyNonExistence,
    ReasonRole::kClassifyHolistic,  ReasonRole::kClassifySemantic,
};

// Releases a semaphore slot on scope exit.
class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<4096>& slots) : slots_(slots) {
    slots_.acquire();
  }
  ~SlotGuard() { slots_.release(); }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  std::counting_semaphore<4096>& slots_;
};

}  // namespace

std::string_view ReasonRoleName(ReasonRole role) {
  switch (role) {
    case ReasonRole::kKeyPhrases:
      return "key_phrases";
    case ReasonRole::kClipCaption:
      return "clip_caption";
    case ReasonRole::kClipRetrieval:
      return "clip_retrieval";
    case ReasonRole::kFrameVerdict:
      return "frame_verdict";
    case ReasonRole::kClassifyMotion:
      return "classify_motion";
    case ReasonRole::kClassifyNonExistence:
      return "classify_nonexistence";
    case ReasonRole::kClassifyHolistic:
      return "classify_holistic";
    case ReasonRole::kClassifySemantic:
      return "classify_semantic";
  }
  return "unknown";
}

ReasonRole ParseReasonRole(std::string_view name) {
  for (ReasonRole role : kAllRoles) {
    if (ReasonRoleName(role) == name) return role;
  }
  throw ValidationError("unknown reasoner role '" + std::string(name) + "'");
}

bool RoleTakesAttachments(ReasonRole role) {
  return role == ReasonRole::kClipCaption || role == ReasonRole::kFrameVerdict;
}

void ReasonRequest::Validate() const {
  if (prompt.empty()) throw ValidationError("reason request: empty prompt");
  if (RoleTakesAttachments(role) == attachments.empty()) {
    throw ValidationError(std::string("reason request: role ") +
                          std::string(ReasonRoleName(role)) +
                          (attachments.empty() ? " requires attachments"
                                               : " takes no attachments"));
  }
}

std::string ClipRef(std::string_view video_id, int64_t clip_index) {
  return std::string(video_id) + "/clip/" + std::to_string(clip_index);
}

std::string FrameRef(std::string_view video_id, int64_t frame_index) {
  return std::string(video_id) + "/frame/" + std::to_string(frame_index);
}

std::chrono::milliseconds BackoffForAttempt(const RetryOptions& options,
                                            int attempt) {
  const int shift = std::clamp(attempt, 0, 30);
  const auto delay = options.initial_backoff * (int64_t{1} << shift);
  return std::min(delay, options.max_backoff);
}

ReasonerClient::ReasonerClient(std::shared_ptr<ReasonerBackend> backend,
                               ClientOptions options)
    : backend_(std::move(backend)),
      options_(options),
      slots_(std::clamp(options.max_parallelism, 1, 4096)) {
  if (!backend_) throw ValidationError("reasoner client: null backend");
  if (options_.max_parallelism < 1 || options_.max_parallelism > 4096) {
    throw ValidationError(
        "reasoner client: max_parallelism must be in [1, 4096]");
  }
  if (options_.retry.max_retries < 0) {
    throw ValidationError("reasoner client: max_retries must be >= 0");
  }
}

std::string ReasonerClient::Call(const ReasonRequest& request, CallLog* log) {
  request.Validate();
  std::string response;
  for (int attempt = 0;; ++attempt) {
    try {
      SlotGuard slot(slots_);
      response = backend_->Complete(request);
      break;
    } catch (const TransportError& e) {
      if (attempt >= options_.retry.max_retries) {
        throw TransportError(std::string(ReasonRoleName(request.role)) +
                             ": all " + std::to_string(attempt + 1) +
                             " attempts failed: " + e.what());
      }
    }
    std::this_thread::sleep_for(BackoffForAttempt(options_.retry, attempt));
  }
  if (log != nullptr) {
    log->push_back(CallRecord{request.role, request.prompt,
                              request.attachments, response});
  }
  return response;
}

std::string ExtractKeyPhrases(ReasonerClient& client, const QAPair& qa,
                              CallLog* log) {
  return client.Call({ReasonRole::kKeyPhrases, BuildKeyPhrasePrompt(qa), {}},
                     log);
}

std::string CaptionClip(ReasonerClient& client, const std::string& cue,
                        std::string_view video_id, const Clip& clip,
                        CallLog* log) {
  return client.Call({ReasonRole::kClipCaption, BuildCaptionPrompt(cue, clip),
                      {ClipRef(video_id, clip.index)}},
                     log);
}

RetrievalResult RetrieveClips(ReasonerClient& client,
                              const std::vector<std::string>& captions,
                              const QAPair& qa, CallLog* log) {
  const std::string text = client.Call(
      {ReasonRole::kClipRetrieval, BuildRetrievalPrompt(captions, qa), {}},
      log);
  return ParseClipNum(text, static_cast<int64_t>(captions.size()));
}

FrameVerdict VerdictFrame(ReasonerClient& client, std::string_view video_id,
                          int64_t frame_index, double timestamp_s,
                          const QAPair& qa, CallLog* log) {
  const std::string text = client.Call(
      {ReasonRole::kFrameVerdict,
       BuildFrameVerdictPrompt(frame_index, timestamp_s, qa),
       {FrameRef(video_id, frame_index)}},
      log);
  return FrameVerdict{frame_index, ParseYesNo(text)};
}

bool AskClassifier(ReasonerClient& client, ReasonRole role, const QAPair& qa,
                   CallLog* log) {
  std::string prompt;
  switch (role) {
    case ReasonRole::kClassifyMotion:
      prompt = BuildMotionPrompt(qa);
      break;
    case ReasonRole::kClassifyNonExistence:
      prompt = BuildNonExistencePrompt(qa);
      break;
    case ReasonRole::kClassifyHolistic:
      prompt = BuildHolisticPrompt(qa);
      break;
    case ReasonRole::kClassifySemantic:
      prompt = BuildSemanticPrompt(qa);
      break;
    default:
      throw ValidationError(std::string("not a classifier role: ") +
                            std::string(ReasonRoleName(role)));
  }
  return ParseYesNo(client.Call({role, std::move(prompt), {}}, log));
}

}  // namespace vidthinker
