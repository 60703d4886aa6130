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

#include "vidthinker/taxonomy.h"


#include "vidthinker/errors.h"

namespace vidthinker {

void TaxonomySignals::Validate() const {
  if (retrieval_breadth.has_value() &&
      !(*retrieval_breadth >= 0.0 && *retrieval_breadth <= 1.0)) {
    throw ValidationError("retrieval breadth must lie in [0, 1]");
  }
}

void ApplyRetrieval(TaxonomySignals& signals, const RetrievalResult& retrieval,
                    int64_t clip_count) {
  if (clip_count < 1) throw ValidationError("clip count must be >= 1");
  signals.retrieval_none = retrieval.none();
  signals.retrieval_breadth = static_cast<double>(retrieval.clips.size()) /
                              static_cast<double>(clip_count);
}

InstructionType Classify(const TaxonomySignals& signals) {
  signals.Validate();
  const bool everything_retrieved =
      signals.retrieval_breadth.has_value() && *signals.retrieval_breadth >= 1.0;
  if (signals.holistic || signals.retrieval_none || everything_retrieved) {
    return InstructionType::kNonClues;
  }
  if (signals.motion && !signals.nonexistence) {
    return signals.semantic ? InstructionType::kSemanticMotion
                            : InstructionType::kMotionOnly;
  }
  return InstructionType::kSemanticOnly;
}

bool NeedsClueWidening(const TaxonomySignals& signals) {
  return signals.nonexistence &&
         Classify(signals) == InstructionType::kSemanticOnly;
}

TaxonomySignals ProbeSignals(ReasonerClient& client, const QAPair& qa,
                             CallLog* log) {
  TaxonomySignals signals;
  signals.motion = AskClassifier(client, ReasonRole::kClassifyMotion, qa, log);
  signals.nonexistence =
      AskClassifier(client, ReasonRole::kClassifyNonExistence, qa, log);
  signals.holistic =
      AskClassifier(client, ReasonRole::kClassifyHolistic, qa, log);
  signals.semantic =
      AskClassifier(client, ReasonRole::kClassifySemantic, qa, log);
  return signals;
}

}  // namespace vidthinker
