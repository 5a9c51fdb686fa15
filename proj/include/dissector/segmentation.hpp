#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dissector/lexicon.hpp"

namespace dissector {

struct Token {
  std::string surface;     // punctuation-trimmed surface form
  std::string normalized;  // lowercase, no trailing punctuation
  LexClassSet classes;
  int index = 0;           // position within the owning unit
  int begin = -1, end = -1;  // char offsets into the fragment; -1 if constructed
  bool trailing_comma = false;  // surface was followed by a comma
  bool injected = false;        // inserted by reference resolution
  bool possessive = false;      // surface carries a 's marker
  std::string possessive_stem;  // "country's" -> "country"
  bool numeral = false;
};

enum class UnitKind { Primitive, Compound, Complex };
std::string to_string(UnitKind kind);

struct DiscourseUnit {
  int unit_id = 0;
  int fragment_id = 0;
  std::vector<Token> tokens;
  UnitKind kind = UnitKind::Primitive;
  bool verbless = false;  // diagnostic: classified primitive without a verb group
  int span_begin = 0, span_end = 0;  // char offsets into the fragment raw text

  // Surface tokens joined by single spaces, first letter capitalized.
  std::string text() const;
};

struct Fragment {
  int id = 0;
  std::string raw;
  std::vector<DiscourseUnit> units;
};

// A maximal run of verb-group tokens, e.g. "had managed", "were being added".
struct VerbGroup {
  int begin = 0, end = 0;  // token index range [begin, end)
  bool finite = true;      // false for to-infinitive groups
};

// Whether token i can start a verb group: copula/auxiliary class, a listed
// irregular past, or a content word with a past -ed suffix.
bool verb_seed(const std::vector<Token>& tokens, int i, const LStarLexicon& lexicon);
std::vector<VerbGroup> find_verb_groups(const std::vector<Token>& tokens,
                                        const LStarLexicon& lexicon);

std::vector<Token> tokenize(std::string_view text, const LStarLexicon& lexicon);

struct UnitClassification {
  UnitKind kind = UnitKind::Primitive;
  bool verbless = false;
};

// Classifies a token sequence as primitive, compound, or complex. A verbless
// sequence classifies primitive with the verbless diagnostic set.
UnitClassification classify_unit(const std::vector<Token>& tokens,
                                 const LStarLexicon& lexicon);

// Splits corpus text into fragments. Fragments are delimited by balanced
// square-bracket pairs when present, otherwise by blank lines. Unbalanced
// brackets raise segmentation_error naming the byte offset.
std::vector<Fragment> segment_fragments(std::string_view corpus_text);

// Splits a fragment into sentence units, tokenizes and classifies each.
void segment_units(Fragment& fragment, const LStarLexicon& lexicon);

std::string render_tokens(const std::vector<Token>& tokens);

}  // namespace dissector
