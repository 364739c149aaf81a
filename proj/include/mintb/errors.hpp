#ifndef MINTB_ERRORS_HPP
#define MINTB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mintb {

// Base class for all domain errors thrown by the solver suite.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance text could not be parsed; carries a line number when known.
struct ParseError : Error {
  explicit ParseError(const std::string& msg, int line = -1)
      : Error(line >= 0 ? "parse error (line " + std::to_string(line) + "): " + msg
                        : "parse error: " + msg),
        line_number(line) {}
  int line_number;
};

// Network is not two-terminal series-parallel; message describes the
// irreducible remainder left after exhaustive series/parallel reductions.
struct NotSeriesParallel : Error {
  explicit NotSeriesParallel(const std::string& witness)
      : Error("not series-parallel: " + witness) {}
};

struct PathExplosion : Error {
  explicit PathExplosion(std::size_t cap)
      : Error("s-t path count exceeds cap " + std::to_string(cap)) {}
};

struct InfeasibleFlow : Error {
  explicit InfeasibleFlow(const std::string& msg) : Error("infeasible flow: " + msg) {}
};

struct NoUsedPath : Error {
  NoUsedPath() : Error("instance has no used s-t path") {}
};

struct NoUsedEdge : Error {
  NoUsedEdge() : Error("parallel-link bundle has no used edge") {}
};

struct LengthTooSmall : Error {
  explicit LengthTooSmall(const std::string& msg)
      : Error("length below the minimum inducible length: " + msg) {}
};

struct NotOptimalFlow : Error {
  NotOptimalFlow() : Error("supplied flow is not a social optimum") {}
};

struct NotACover : Error {
  NotACover() : Error("vertex set is not a vertex cover of the input graph") {}
};

struct NotAPartition : Error {
  NotAPartition() : Error("index sets are not a balanced partition of the multiset") {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error("search cap exceeded: " + msg) {}
};

// A self-check inside the solver failed; always a bug, never user error.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

}  // namespace mintb

#endif
