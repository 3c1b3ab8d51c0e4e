#pragma once

#include <stdexcept>
#include <string>

namespace hs {

// Base of every error raised by the library. Each subclass names one
// violated precondition so callers can catch precisely what they expect.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

// A mean-zero argument was required (inverse Laplacian) but not supplied.
class NonZeroMean : public Error {
 public:
  using Error::Error;
};

// A closed-form characteristic reached a vanishing denominator.
class Singular : public Error {
 public:
  using Error::Error;
};

// Requested time is at or past the classical breaking time.
class BlowupReached : public Error {
 public:
  using Error::Error;
};

// The flow map is too close to degenerate to invert.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

// A pseudosphere point is outside the chart domain of the inverse isometry.
class NotInU : public Error {
 public:
  using Error::Error;
};

class DegeneratePlane : public Error {
 public:
  using Error::Error;
};

// Initial data violates the hypotheses of the global weak flow.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class StepUnstable : public Error {
 public:
  using Error::Error;
};

}  // namespace hs
