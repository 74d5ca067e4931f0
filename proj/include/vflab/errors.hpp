#pragma once

#include <stdexcept>
#include <string>

namespace vflab {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two consecutive curve nodes coincide.
class DegenerateSegment : public Error {
 public:
  using Error::Error;
};

/// An open curve's endpoint tangents are not aligned with the reference axis.
class NotAsymptoticallyStraight : public Error {
 public:
  using Error::Error;
};

/// Time step exceeds the explicit-integrator stability guard.
class StepTooLarge : public Error {
 public:
  using Error::Error;
};

/// A field or grid that must be uniform (and periodic, for spectral work)
/// is not.
class NonUniformGrid : public Error {
 public:
  using Error::Error;
};

/// A truncation window is too narrow for the requested profile.
class WindowTooNarrow : public Error {
 public:
  using Error::Error;
};

/// Frenet frame (normal/binormal/torsion) required where curvature vanishes.
class UndefinedFrame : public Error {
 public:
  using Error::Error;
};

/// A trajectory with no snapshots was handed to an analysis routine.
class EmptyTrajectory : public Error {
 public:
  using Error::Error;
};

/// A requested profile normalization cannot be satisfied.
class NormalizationUnsatisfiable : public Error {
 public:
  using Error::Error;
};

/// Scalar argument outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Config file could not be parsed or contains invalid/unknown keys.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Config names an experiment that is not registered.
class UnknownExperiment : public Error {
 public:
  using Error::Error;
};

}  // namespace vflab
