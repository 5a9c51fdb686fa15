#pragma once

#include <string>
#include <vector>

#include "dissector/lexicon.hpp"
#include "dissector/segmentation.hpp"

namespace dissector {

struct PrimitiveDiscourse {
  std::vector<Token> tokens;
  int source_unit = -1;
  std::string rule_tag;
  std::string rendered;  // canonical text: surfaces joined, initial capital
  bool verbless = false;

  std::vector<std::string> normalized() const;
};

struct DissectionTrace {
  enum class Path { DirectToPrimitive, ViaCompound };
  int source_unit = -1;
  Path path = Path::DirectToPrimitive;
  std::vector<std::string> compounds;  // intermediate compound texts, if any
  std::vector<PrimitiveDiscourse> primitives;
};

// Splits a unit at coordinators that join two finite clauses with explicit
// subjects. A coordinated clause without its own subject stays attached to
// the preceding clause. Returns the unit unchanged when nothing qualifies.
std::vector<DiscourseUnit> split_compound(const DiscourseUnit& unit,
                                          const LStarLexicon& lexicon);

// Applies the extraction rule set exhaustively and returns the primitives in
// source order. A unit matching no rule is emitted verbatim (passthrough).
std::vector<PrimitiveDiscourse> extract_primitives(const DiscourseUnit& unit,
                                                   const LStarLexicon& lexicon);

// Full dissection: primitives pass through; units whose body splits into two
// or more compounds go via the compound stage; everything else is dissected
// directly.
DissectionTrace dissect(const DiscourseUnit& unit, const LStarLexicon& lexicon);

std::string to_string(DissectionTrace::Path path);

}  // namespace dissector
