#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace dissector {

enum class LexClass : uint8_t {
  Article = 1u << 0,
  Auxiliary = 1u << 1,
  Copula = 1u << 2,
  Preposition = 1u << 3,
  Coordinator = 1u << 4,
  Subordinator = 1u << 5,
  Content = 1u << 6,
};

// Small flag set over LexClass. Content never coexists with another class.
class LexClassSet {
 public:
  LexClassSet() = default;
  void add(LexClass c) { bits_ |= static_cast<uint8_t>(c); }
  bool has(LexClass c) const { return (bits_ & static_cast<uint8_t>(c)) != 0; }
  bool empty() const { return bits_ == 0; }
  bool content_only() const { return bits_ == static_cast<uint8_t>(LexClass::Content); }
  bool operator==(const LexClassSet&) const = default;
  std::vector<std::string> names() const;

  static LexClassSet content() {
    LexClassSet s;
    s.add(LexClass::Content);
    return s;
  }

 private:
  uint8_t bits_ = 0;
};

// Lowercases ASCII and strips leading/trailing punctuation. Commas and dots
// between digits are kept ("3,500" stays intact).
std::string normalize_form(std::string_view surface);

// True when the form is a number, possibly with grouping commas or a decimal
// point ("60", "3,500", "3.5").
bool is_numeral(std::string_view form);

// The function-word lexicon. Words in the preserve set survive verbatim in
// generalized patterns; coordinators drive compound splitting. A loaded
// lexicon is immutable and may be shared across threads.
struct LStarLexicon {
  std::unordered_set<std::string> articles;
  std::unordered_set<std::string> auxiliaries;
  std::unordered_set<std::string> copulas;
  std::unordered_set<std::string> prepositions_preserved;
  std::unordered_set<std::string> coordinators;
  std::unordered_set<std::string> subordinators;
  std::unordered_set<std::string> content_exceptions;
  // Fixed-phrase substitutions applied before reference resolution,
  // e.g. "all the time" -> "throughout".
  std::vector<std::pair<std::string, std::string>> idioms;

  static const LStarLexicon& builtin();
  // Parses the lexicon configuration document (JSON). Throws parse_error on
  // malformed input and conflict_error when a word is listed both as a
  // content exception and in a preserved class.
  static LStarLexicon from_json_text(const std::string& text);
  static LStarLexicon from_file(const std::string& path);

  // Class set for a normalized form; {Content} when unlisted.
  LexClassSet classify(const std::string& normalized) const;
  bool preserved(const std::string& normalized) const;
  bool is_split_coordinator(const std::string& normalized) const;
  const std::unordered_set<std::string>& preserve_set() const { return preserve_; }

  // Recomputes the preserve set and validates content-exception conflicts.
  void finalize();

  // Fixed supporting word lists (not part of the configurable classes).
  static bool approximator(const std::string& normalized);
  static bool irregular_past(const std::string& normalized);
  static bool communication_verb(const std::string& normalized);
  static bool day_name(const std::string& normalized);
  static bool irregular_plural(const std::string& normalized);

 private:
  std::unordered_set<std::string> preserve_;
};

// Class set for a raw surface form. Throws invalid_input when the form is
// empty after trimming. Unlisted forms classify as {Content}.
LexClassSet classify_token(std::string_view form, const LStarLexicon& lexicon);

}  // namespace dissector
