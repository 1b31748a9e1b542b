#ifndef QHJ_ERRORS_HPP
#define QHJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qhj {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Field evaluation requested at or too close to a node of the wave function.
class PoleProximityError : public Error {
  public:
    using Error::Error;
};

/// Scenario is not the symmetric two-packet pair required by closed-form
/// nodal expressions.
class ScenarioShapeError : public Error {
  public:
    using Error::Error;
};

/// x0 = 0: nodal trajectories are vertical, slope undefined.
class DegenerateScenarioError : public Error {
  public:
    using Error::Error;
};

class NoConvergenceError : public Error {
  public:
    using Error::Error;
};

/// Stagnation refinement converged to a point where the wave function
/// itself vanishes.
class ConvergedToNodeError : public Error {
  public:
    using Error::Error;
};

class ContourThroughPoleError : public Error {
  public:
    using Error::Error;
};

/// Trajectory launch point violates the pole guard.
class PoleEncounterError : public Error {
  public:
    using Error::Error;
};

class StepUnderflowError : public Error {
  public:
    using Error::Error;
};

class NotStagnationError : public Error {
  public:
    using Error::Error;
};

/// Linearized trajectory formula is singular for alpha = 0.
class AlphaZeroError : public Error {
  public:
    using Error::Error;
};

class TooShortError : public Error {
  public:
    using Error::Error;
};

class EmptyEnsembleError : public Error {
  public:
    using Error::Error;
};

class GridTooLargeError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

class ScenarioParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace qhj

#endif
