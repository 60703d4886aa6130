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

#ifndef VIDTHINKER_TAXONOMY_H_
#define VIDTHINKER_TAXONOMY_H_

#include <optional>

#include "vidthinker/domain.h"
#include "vidthinker/reasoner.h"
#include "vidthinker/response_grammar.h"

namespace vidthinker {

// Inputs to instruction-type routing. The four flags come from yes/no
// classifier calls; the retrieval fields exist only once clip retrieval ran.
struct TaxonomySignals {
  bool motion = false;          // question is about absolute or relative speed
  bool nonexistence = false;    // existence question answered negatively
  bool holistic = false;        // open-ended question about the whole video
  bool semantic = false;        // needs people/objects/scenes besides motion
  bool retrieval_none = false;  // retrieval answered "None."
  // Fraction of clips the retrieval returned, in [0, 1].
  std::optional<double> retrieval_breadth;

  // Throws ValidationError for a breadth outside [0, 1].
  void Validate() const;

  friend bool operator==(const TaxonomySignals&,
                         const TaxonomySignals&) = default;
};

// Fills the breadth fields from a retrieval over `clip_count` clips.
void ApplyRetrieval(TaxonomySignals& signals, const RetrievalResult& retrieval,
                    int64_t clip_count);

// Routing, first match wins:
//   holistic, retrieval None, or every clip retrieved  -> NonClues
//   motion, not non-existence                          -> SemanticMotion if
//                                                         semantic, else
//                                                         MotionOnly
//   otherwise                                          -> SemanticOnly
InstructionType Classify(const TaxonomySignals& signals);

// True when a SemanticOnly label comes from a non-existence question; the
// pipeline then widens the clip set around the retrieved clues.
bool NeedsClueWidening(const TaxonomySignals& signals);

// Asks the four classifier probes. Retrieval fields are left unset.
TaxonomySignals ProbeSignals(ReasonerClient& client, const QAPair& qa,
                             CallLog* log = nullptr);

}  // namespace vidthinker

#endif  // VIDTHINKER_TAXONOMY_H_
