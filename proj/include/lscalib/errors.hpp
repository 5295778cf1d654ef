#ifndef LSCALIB_ERRORS_HPP
#define LSCALIB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lscalib {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sample consensus exhausted its iterations without an acceptable model.
struct NoModelFound : Error {
  using Error::Error;
};

/// Plane normal too close to the world vertical to define plane axes.
struct DegenerateBasis : Error {
  using Error::Error;
};

/// Fewer than four circle candidates could be segmented.
struct NotEnoughCircles : Error {
  using Error::Error;
};

/// No 4-subset of circle candidates matches the target geometry.
struct GeometryMismatch : Error {
  using Error::Error;
};

/// Clustering did not yield exactly four acceptable clusters.
struct ClusterCountMismatch : Error {
  using Error::Error;
};

/// Two reference points tie on a corner-labeling coordinate.
struct AmbiguousLabeling : Error {
  using Error::Error;
};

/// Registration input points are (near-)collinear.
struct DegenerateConfiguration : Error {
  using Error::Error;
};

/// One of the sensors produced no valid detections at all.
struct InsufficientDetections : Error {
  using Error::Error;
};

/// Estimated and ground-truth poses use different direction conventions.
struct DirectionMismatch : Error {
  using Error::Error;
};

/// Simulator setting id outside 1..9.
struct UnknownSetting : Error {
  using Error::Error;
};

/// File or format problem.
struct IoError : Error {
  using Error::Error;
};

/// Bad key or value in a configuration file.
struct ConfigError : Error {
  using Error::Error;
};

/// Wraps an error from a named pipeline stage inside calibrate().
struct StageFailure : Error {
  std::string stage;
  StageFailure(std::string stage_name, const std::string& detail)
      : Error("stage '" + stage_name + "': " + detail), stage(std::move(stage_name)) {}
};

}  // namespace lscalib

#endif  // LSCALIB_ERRORS_HPP
