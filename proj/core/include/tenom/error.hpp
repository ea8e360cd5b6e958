#pragma once

#include <stdexcept>
#include <string>

namespace tenom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state with non-positive density or pressure was encountered.
class PositivityError : public Error {
 public:
  using Error::Error;
};

/// The solution became non-finite or could not be repaired during a step.
class InstabilityError : public Error {
 public:
  InstabilityError(const std::string& what, long step, double x, double y)
      : Error(what), step_(step), x_(x), y_(y) {}

  long step() const { return step_; }
  double x() const { return x_; }
  double y() const { return y_; }

 private:
  long step_;
  double x_;
  double y_;
};

}  // namespace tenom
