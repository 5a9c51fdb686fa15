#pragma once

#include <stdexcept>
#include <string>

namespace dissector {

// Base class for all library errors. The CLI maps subclasses onto exit codes.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Empty or otherwise unusable caller input (empty token form, empty sentence).
class invalid_input : public error {
 public:
  using error::error;
};

// Malformed lexicon configuration document. Carries a best-effort location.
class parse_error : public error {
 public:
  using error::error;
};

// A word listed both as a content exception and in a preserved class.
class conflict_error : public parse_error {
 public:
  using parse_error::parse_error;
};

// Unbalanced fragment delimiters; message names the byte offset.
class segmentation_error : public error {
 public:
  using error::error;
};

// Out-of-order fragment id during an inventory fold.
class ordering_error : public error {
 public:
  using error::error;
};

// Snapshot version mismatch or unreadable snapshot document.
class schema_error : public error {
 public:
  using error::error;
};

// instantiate() called without a binding for some variable index.
class unbound_variable : public error {
 public:
  using error::error;
};

// Fact export requested for a primitive with no verb group.
class not_exportable : public error {
 public:
  using error::error;
};

}  // namespace dissector
