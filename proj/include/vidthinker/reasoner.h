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

#ifndef VIDTHINKER_REASONER_H_
#define VIDTHINKER_REASONER_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <semaphore>
#include <string>
#include <string_view>
#include <vector>

#include "vidthinker/domain.h"
#include "vidthinker/response_grammar.h"

namespace vidthinker {

enum class ReasonRole {
  kKeyPhrases,
  kClipCaption,
  kClipRetrieval,
  kFrameVerdict,
  kClassifyMotion,
  kClassifyNonExistence,
  kClassifyHolistic,
  kClassifySemantic,
};

// Wire names, e.g. "clip_retrieval".
std::string_view ReasonRoleName(ReasonRole role);
ReasonRole ParseReasonRole(std::string_view name);

// True for roles whose request carries imagery.
bool RoleTakesAttachments(ReasonRole role);

struct ReasonRequest {
  ReasonRole role = ReasonRole::kKeyPhrases;
  std::string prompt;
  // Opaque clip/frame references the backend resolves to imagery.
  std::vector<std::string> attachments;

  // Throws ValidationError on an empty prompt or when attachments are present
  // for a text-only role (or missing for an imagery role).
  void Validate() const;
};

// Attachment ids understood by backends: "<video>/clip/<i>", "<video>/frame/<i>".
std::string ClipRef(std::string_view video_id, int64_t clip_index);
std::string FrameRef(std::string_view video_id, int64_t frame_index);

// A reasoning model behind some transport. Implementations must be safe to
// call from several threads at once. Transient failures are reported as
// TransportError; everything else propagates unchanged.
class ReasonerBackend {
 public:
  virtual ~ReasonerBackend() = default;
  virtual std::string Complete(const ReasonRequest& request) = 0;
};

struct CallRecord {
  ReasonRole role;
  std::string prompt;
  std::vector<std::string> attachments;
  std::string response;
};
using CallLog = std::vector<CallRecord>;

struct RetryOptions {
  int max_retries = 3;
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::milliseconds max_backoff{5000};
};

// Delay before retry number `attempt` (0-based): initial * 2^attempt, capped.
std::chrono::milliseconds BackoffForAttempt(const RetryOptions& options,
                                            int attempt);

struct ClientOptions {
  RetryOptions retry;
  int max_parallelism = 8;
};

// Front end for a backend: validates requests, bounds the number of requests
// in flight, retries TransportError with exponential backoff, and appends
// every completed exchange to the caller's log.
class ReasonerClient {
 public:
  ReasonerClient(std::shared_ptr<ReasonerBackend> backend,
                 ClientOptions options = {});

  std::string Call(const ReasonRequest& request, CallLog* log = nullptr);

  const ClientOptions& options() const { return options_; }

 private:
  std::shared_ptr<ReasonerBackend> backend_;
  ClientOptions options_;
  std::counting_semaphore<4096> slots_;
};

struct FrameVerdict {
  int64_t frame_index = 0;
  bool relevant = false;
};

// Distilled cue text for a QA pair, verbatim from the backend (may be empty).
std::string ExtractKeyPhrases(ReasonerClient& client, const QAPair& qa,
                              CallLog* log = nullptr);

std::string CaptionClip(ReasonerClient& client, const std::string& cue,
                        std::string_view video_id, const Clip& clip,
                        CallLog* log = nullptr);

// Clip indices are bounded by captions.size().
RetrievalResult RetrieveClips(ReasonerClient& client,
                              const std::vector<std::string>& captions,
                              const QAPair& qa, CallLog* log = nullptr);

FrameVerdict VerdictFrame(ReasonerClient& client, std::string_view video_id,
                          int64_t frame_index, double timestamp_s,
                          const QAPair& qa, CallLog* log = nullptr);

// One yes/no classifier call; `role` picks the template.
bool AskClassifier(ReasonerClient& client, ReasonRole role, const QAPair& qa,
                   CallLog* log = nullptr);

}  // namespace vidthinker

#endif  // VIDTHINKER_REASONER_H_
