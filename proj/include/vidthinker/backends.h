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

#ifndef VIDTHINKER_BACKENDS_H_
#define VIDTHINKER_BACKENDS_H_

#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "vidthinker/reasoner.h"

namespace vidthinker {

// Environment variable holding the reasoner endpoint for "--reasoner http".
inline constexpr char kReasonerUrlEnv[] = "VIDTHINKER_REASONER_URL";

// Lower-case hex SHA-256 of `data`.
std::string Sha256Hex(std::string_view data);

// "<role>:<first 16 hex digits of sha256(prompt)>".
std::string PromptKey(const ReasonRequest& request);

// "<role>@<attachment>[,<attachment>...]".
std::string AttachmentKey(const ReasonRequest& request);

// Canned responses for deterministic runs, loaded from JSON:
//
//   {
//     "responses": { "<role>:<hash16>": "...", "<role>@<refs>": "..." },
//     "defaults":  { "<role>": "..." }
//   }
//
// Lookup order is prompt key, attachment key, role default. The literal
// "{attachments}" inside a response expands to the comma-joined attachment
// ids, so one default can answer per clip or per frame.
struct MockScenario {
  std::map<std::string, std::string> responses;
  std::map<std::string, std::string> defaults;

  static MockScenario FromJsonText(std::string_view text);
  static MockScenario Load(const std::filesystem::path& path);
};

class MockBackend : public ReasonerBackend {
 public:
  explicit MockBackend(MockScenario scenario)
      : scenario_(std::move(scenario)) {}

  // Throws ProtocolError when the scenario has no answer for the request.
  std::string Complete(const ReasonRequest& request) override;

  int64_t call_count() const { return calls_.load(); }

 private:
  MockScenario scenario_;
  std::atomic<int64_t> calls_{0};
};

struct HttpOptions {
  std::chrono::milliseconds connect_timeout{5000};
  std::chrono::milliseconds read_timeout{60000};
};

// Splits "http://host:port/path" into ("http://host:port", "/path").
std::pair<std::string, std::string> SplitUrl(std::string_view url);

// POSTs {"role", "prompt", "attachments"} as JSON and expects {"text": ...}.
// Connection failures, 429 and 5xx raise TransportError; other non-2xx
// statuses and malformed bodies raise ProtocolError.
class HttpReasonerBackend : public ReasonerBackend {
 public:
  explicit HttpReasonerBackend(std::string url, HttpOptions options = {});

  std::string Complete(const ReasonRequest& request) override;

 private:
  std::string base_;
  std::string path_;
  HttpOptions options_;
};

// Builds a backend from "mock:<scenario.json>", "http:<url>" or "http"
// (endpoint from VIDTHINKER_REASONER_URL).
std::shared_ptr<ReasonerBackend> MakeReasonerBackend(std::string_view spec,
                                                     HttpOptions options = {});

}  // namespace vidthinker

#endif  // VIDTHINKER_BACKENDS_H_
