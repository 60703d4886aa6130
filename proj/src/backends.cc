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

#include "vidthinker/backends.h"

#include <openssl/evp.h>

#include <cstdlib>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "vidthinker/errors.h"
#include "vidthinker/features.h"

namespace vidthinker {
namespace {

using nlohmann::json;

std::string JoinAttachments(const std::vector<std::string>& attachments) {
  std::string out;
  for (size_t i = 0; i < attachments.size(); ++i) {
    if (i > 0) out += ",";
    out += attachments[i];
  }
  return out;
}

std::string ExpandPlaceholders(std::string text,
                               const ReasonRequest& request) {
  static constexpr std::string_view kToken = "{attachments}";
  const std::string joined = JoinAttachments(request.attachments);
  for (size_t pos = text.find(kToken); pos != std::string::npos;
       pos = text.find(kToken, pos + joined.size())) {
    text.replace(pos, kToken.size(), joined);
  }
  return text;
}

std::map<std::string, std::string> StringMap(const json& scenario,
                                             const char* field) {
  std::map<std::string, std::string> out;
  if (!scenario.contains(field)) return out;
  const json& object = scenario[field];
  if (!object.is_object()) {
    throw ValidationError(std::string("mock scenario: '") + field +
                          "' must be an object");
  }
  for (const auto& [key, value] : object.items()) {
    if (!value.is_string()) {
      throw ValidationError("mock scenario: value for '" + key +
                            "' must be a string");
    }
    out.emplace(key, value.get<std::string>());
  }
  return out;
}

}  // namespace

std::string Sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

std::string PromptKey(const ReasonRequest& request) {
  return std::string(ReasonRoleName(request.role)) + ":" +
         Sha256Hex(request.prompt).substr(0, 16);
}

std::string AttachmentKey(const ReasonRequest& request) {
  return std::string(ReasonRoleName(request.role)) + "@" +
         JoinAttachments(request.attachments);
}

MockScenario MockScenario::FromJsonText(std::string_view text) {
  json scenario = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (scenario.is_discarded() || !scenario.is_object()) {
    throw ValidationError("mock scenario: not a JSON object");
  }
  MockScenario out;
  out.responses = StringMap(scenario, "responses");
  out.defaults = StringMap(scenario, "defaults");
  for (const auto& [role, _] : out.defaults) ParseReasonRole(role);
  return out;
}

MockScenario MockScenario::Load(const std::filesystem::path& path) {
  return FromJsonText(ReadFileBytes(path));
}

std::string MockBackend::Complete(const ReasonRequest& request) {
  calls_.fetch_add(1);
  if (auto it = scenario_.responses.find(PromptKey(request));
      it != scenario_.responses.end()) {
    return ExpandPlaceholders(it->second, request);
  }
  if (!request.attachments.empty()) {
    if (auto it = scenario_.responses.find(AttachmentKey(request));
        it != scenario_.responses.end()) {
      return ExpandPlaceholders(it->second, request);
    }
  }
  if (auto it = scenario_.defaults.find(std::string(ReasonRoleName(request.role)));
      it != scenario_.defaults.end()) {
    return ExpandPlaceholders(it->second, request);
  }
  throw ProtocolError("mock scenario has no response for " +
                      PromptKey(request));
}

std::pair<std::string, std::string> SplitUrl(std::string_view url) {
  constexpr std::string_view kScheme = "http://";
  if (!url.starts_with(kScheme) || url.size() == kScheme.size()) {
    throw ValidationError("url must look like http://host[:port]/path, got '" +
                          std::string(url) + "'");
  }
  const size_t slash = url.find('/', kScheme.size());
  if (slash == std::string_view::npos) return {std::string(url), "/"};
  return {std::string(url.substr(0, slash)), std::string(url.substr(slash))};
}

HttpReasonerBackend::HttpReasonerBackend(std::string url, HttpOptions options)
    : options_(options) {
  std::tie(base_, path_) = SplitUrl(url);
}

std::string HttpReasonerBackend::Complete(const ReasonRequest& request) {
  const json body = {{"role", ReasonRoleName(request.role)},
                     {"prompt", request.prompt},
                     {"attachments", request.attachments}};
  httplib::Client client(base_);
  client.set_connection_timeout(options_.connect_timeout);
  client.set_read_timeout(options_.read_timeout);
  auto result = client.Post(path_, body.dump(), "application/json");
  if (!result) {
    throw TransportError("reasoner " + base_ + path_ + ": " +
                         httplib::to_string(result.error()));
  }
  if (result->status == 429 || result->status >= 500) {
    throw TransportError("reasoner " + base_ + path_ + ": HTTP " +
                         std::to_string(result->status));
  }
  if (result->status < 200 || result->status >= 300) {
    throw ProtocolError("reasoner " + base_ + path_ + ": HTTP " +
                        std::to_string(result->status));
  }
  json reply = json::parse(result->body, nullptr, /*allow_exceptions=*/false);
  if (reply.is_discarded() || !reply.is_object() || !reply.contains("text") ||
      !reply["text"].is_string()) {
    throw ProtocolError("reasoner reply must be {\"text\": string}");
  }
  return reply["text"].get<std::string>();
}

std::shared_ptr<ReasonerBackend> MakeReasonerBackend(std::string_view spec,
                                                     HttpOptions options) {
  if (spec.starts_with("mock:")) {
    return std::make_shared<MockBackend>(MockScenario::Load(
        std::filesystem::path(std::string(spec.substr(5)))));
  }
  if (spec == "http") {
    const char* url = std::getenv(kReasonerUrlEnv);
    if (url == nullptr || *url == '\0') {
      throw ValidationError(std::string("--reasoner http needs ") +
                            kReasonerUrlEnv + " to be set");
    }
    return std::make_shared<HttpReasonerBackend>(url, options);
  }
  if (spec.starts_with("http://")) {
    return std::make_shared<HttpReasonerBackend>(std::string(spec), options);
  }
  if (spec.starts_with("http:")) {
    return std::make_shared<HttpReasonerBackend>(std::string(spec.substr(5)),
                                                 options);
  }
  throw ValidationError("reasoner must be mock:<file>, http:<url> or http; got '" +
                        std::string(spec) + "'");
}

}  // namespace vidthinker
