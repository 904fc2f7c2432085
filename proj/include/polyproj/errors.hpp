#ifndef POLYPROJ_ERRORS_HPP
#define POLYPROJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyproj {

/**
 * Base class for all contract errors. Each error carries a stable name
 * that the CLI prints on stderr before exiting with status 1.
 */
class Error : public std::runtime_error {
  public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

  private:
    std::string name_;
};

class ZeroVectorError : public Error {
  public:
    explicit ZeroVectorError(const std::string& what = "zero vector")
        : Error("ZeroVector", what) {}
};

class DimensionMismatchError : public Error {
  public:
    explicit DimensionMismatchError(const std::string& what = "dimension mismatch")
        : Error("DimensionMismatch", what) {}
};

class DependentDirectionsError : public Error {
  public:
    explicit DependentDirectionsError(const std::string& what = "directions are linearly dependent")
        : Error("DependentDirections", what) {}
};

class NotOrthogonalError : public Error {
  public:
    explicit NotOrthogonalError(const std::string& what = "directions are not pairwise orthogonal")
        : Error("NotOrthogonal", what) {}
};

class NotFullDimensionalError : public Error {
  public:
    explicit NotFullDimensionalError(const std::string& what = "polytope is not full-dimensional")
        : Error("NotFullDimensional", what) {}
};

class UnboundedError : public Error {
  public:
    explicit UnboundedError(const std::string& what = "polyhedron is unbounded")
        : Error("Unbounded", what) {}
};

class EmptyError : public Error {
  public:
    explicit EmptyError(const std::string& what = "polyhedron is empty")
        : Error("Empty", what) {}
};

class InfeasibleError : public Error {
  public:
    explicit InfeasibleError(const std::string& what = "program is infeasible")
        : Error("Infeasible", what) {}
};

class BadIndexError : public Error {
  public:
    explicit BadIndexError(const std::string& what = "index out of range")
        : Error("BadIndex", what) {}
};

class InconsistentEqualitiesError : public Error {
  public:
    explicit InconsistentEqualitiesError(const std::string& what = "equality system is inconsistent")
        : Error("InconsistentEqualities", what) {}
};

class DegenerateDirectionsError : public Error {
  public:
    explicit DegenerateDirectionsError(const std::string& what = "projection directions are degenerate")
        : Error("DegenerateDirections", what) {}
};

class DegeneracyDetectedError : public Error {
  public:
    explicit DegeneracyDetectedError(const std::string& what = "degeneracy detected during enumeration")
        : Error("DegeneracyDetected", what) {}
};

class NotSupportingError : public Error {
  public:
    explicit NotSupportingError(const std::string& what = "hyperplane does not support the polytope")
        : Error("NotSupporting", what) {}
};

class NotPointedError : public Error {
  public:
    explicit NotPointedError(const std::string& what = "cone has a nontrivial lineality space")
        : Error("NotPointed", what) {}
};

class ProjectionFullError : public Error {
  public:
    explicit ProjectionFullError(const std::string& what = "projected cone spans the whole subspace")
        : Error("ProjectionFull", what) {}
};

class TooLargeError : public Error {
  public:
    explicit TooLargeError(const std::string& what = "instance exceeds oracle guardrails")
        : Error("TooLarge", what) {}
};

class OracleTooLargeError : public Error {
  public:
    explicit OracleTooLargeError(const std::string& what = "hull oracle guardrail tripped")
        : Error("OracleTooLarge", what) {}
};

class IntermediateBlowupError : public Error {
  public:
    explicit IntermediateBlowupError(const std::string& what = "intermediate row count exceeded hard cap")
        : Error("IntermediateBlowup", what) {}
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what = "malformed input")
        : Error("Parse", what) {}
};

/// Violation of a documented precondition that has no dedicated error name.
class PreconditionError : public Error {
  public:
    explicit PreconditionError(const std::string& what = "precondition violated")
        : Error("Precondition", what) {}
};

}  // namespace polyproj

#endif  // POLYPROJ_ERRORS_HPP
