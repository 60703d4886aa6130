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

#ifndef VIDTHINKER_ERRORS_H_
#define VIDTHINKER_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace vidthinker {

// Root of every error the library throws. Callers that only need to report a
// failure can catch this; callers that branch on the failure class catch the
// concrete subclasses below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates a documented precondition or type invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An index or time lies outside the valid range of a timeline.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Similarity or normalization over a degenerate vector.
class MathDomainError : public Error {
 public:
  using Error::Error;
};

// Text returned by a reasoning service does not match the expected grammar.
// `raw()` carries the offending text verbatim.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string raw)
      : Error(message), raw_(std::move(raw)) {}

  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

// A remote call could not be completed (connection, timeout, HTTP status).
class TransportError : public Error {
 public:
  using Error::Error;
};

// A remote call completed but the response violates the wire contract.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Binary or line-oriented file contents are malformed.
class FormatError : public Error {
 public:
  enum class Code {
    kIo,
    kBadMagic,
    kVersionMismatch,
    kTruncated,
    kTrailingBytes,
    kReservedNonZero,
    kNonFinite,
    kNotNormalized,
    kBadHeader,
    kBadRecord,
  };

  FormatError(Code code, const std::string& message)
      : Error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

}  // namespace vidthinker

#endif  // VIDTHINKER_ERRORS_H_
