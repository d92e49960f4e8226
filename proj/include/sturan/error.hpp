#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sturan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor or formula argument outside its documented range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Input rejected because it exceeds a hard size cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// A formula was asked for outside the range where it carries a guarantee.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class Graph6Error : public Error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The containment search ran out of nodes; the answer is unknown, not "no".
class SearchBudgetExceeded : public Error {
 public:
  explicit SearchBudgetExceeded(unsigned long long budget)
      : Error("linear forest search exceeded node budget of " + std::to_string(budget)),
        budget_(budget) {}
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long budget_;
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double best_estimate, double residual)
      : Error(what), best_estimate_(best_estimate), residual_(residual) {}
  double best_estimate() const noexcept { return best_estimate_; }
  double residual() const noexcept { return residual_; }

 private:
  double best_estimate_;
  double residual_;
};

class IoError : public Error {
 public:
  IoError(const std::string& what, std::string path)
      : Error(what + ": " + path), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace sturan
