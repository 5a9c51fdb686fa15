#pragma once

#include <string>
#include <vector>

#include "dissector/lexicon.hpp"
#include "dissector/segmentation.hpp"

namespace dissector {

struct TokenRange {
  int unit_id = -1;
  int begin = 0, end = 0;  // token index range [begin, end)
};

struct ResolutionRecord {
  enum class Kind { Anaphoric, Cataphoric };
  enum class Status { Resolved, Unresolved };
  Kind kind = Kind::Anaphoric;
  TokenRange anaphor;
  TokenRange referent;  // unit_id -1 when unresolved
  std::string anaphor_text;
  std::string replacement_text;  // empty when unresolved
  Status status = Status::Resolved;
};

struct CandidateNP {
  enum class Number { Singular, Plural, Unknown };
  std::string head;         // normalized head token
  std::string full_phrase;  // normalized phrase including article and postmodifier
  int unit_id = 0;
  TokenRange range;
  Number number = Number::Unknown;
  bool of_postmod = false;               // head is followed by an "of" phrase
  std::vector<std::string> postmod;      // normalized postmodifier run
  std::vector<std::string> postmod_surface;
  std::vector<std::string> run_surface;  // surfaces of the content run (no article)
};

CandidateNP::Number noun_number(const std::string& normalized_head);

// One candidate per maximal content-noun phrase, in document order.
std::vector<CandidateNP> collect_candidates(const std::vector<DiscourseUnit>& units,
                                            const LStarLexicon& lexicon);

// Applies the lexicon's idiom substitutions to a unit in place.
void apply_idioms(DiscourseUnit& unit, const LStarLexicon& lexicon);

struct ResolutionResult {
  std::vector<DiscourseUnit> units;  // rewritten copies, same count and order
  std::vector<ResolutionRecord> records;
};

// Rewrites referring expressions within one fragment's units: pronouns and
// possessives substitute their nearest number-compatible antecedent
// (consequents are searched forward when no antecedent exists), bare
// re-mentions of a head that earlier carried an "of" postmodifier are
// expanded, and object-position definite articles before modified noun
// phrases are dropped. Inputs are not modified.
ResolutionResult resolve(const std::vector<DiscourseUnit>& units,
                         const LStarLexicon& lexicon);

}  // namespace dissector
