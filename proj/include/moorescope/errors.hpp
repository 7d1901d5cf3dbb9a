#ifndef MOORESCOPE_ERRORS_HPP
#define MOORESCOPE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace moorescope {

// Malformed graph6 input. `offset` is the byte position of the first bad byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parameters outside an operation's stated domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Graph exceeds the supported size (single-byte graph6 header, n <= 62).
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A structural operation was called on input violating its preconditions.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Repeat-cycle assembly hit a missing forced edge: the input cannot be a
// defect-2 graph.
class AssemblyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Saturating-lemma hypotheses could not be verified on the given instance.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Saturating-lemma hypotheses hold but no witness exists: the input cannot
// be a defect-2 graph.
class NoWitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The short-cycle configuration around a vertex matches none of the three
// admissible types: the input cannot be a defect-2 graph.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search configuration with non-positive target order.
class InfeasibleConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace moorescope

#endif
