#pragma once

#include <stdexcept>
#include <string>

namespace casp {

// Input text could not be parsed. The message carries the offending
// line/coordinate where known.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An edge was requested that does not exist in the graph.
struct MissingEdge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A node sequence is not a connected path of the instance.
struct InvalidPath : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A negative edge cost reached an algorithm that requires costs >= 0.
struct NegativeWeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solver exceeded its step budget. Either the budget was too small for
// the instance or the caller hit a bug worth looking at.
struct StepLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// enumerate_simple_paths guard: the hop bound is above the safe cap.
struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Backtracking met a pointer cycle or an unset pointer before the source.
struct CorruptPointerField : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A probability update referenced an action the automaton does not have.
struct InvalidUpdate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The greedy tube walk did not reach the origin within the cell budget.
struct TubeExtractionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Frame emission was asked for a snapshot/format pair it cannot render.
struct UnsupportedFormat : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace casp
