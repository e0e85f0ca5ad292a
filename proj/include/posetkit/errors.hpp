#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace posetkit {

// Base of every error raised by the toolkit. The CLI maps the concrete
// subclasses onto exit codes.
class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data: malformed documents, unknown labels, cycles, etc.
class InputError : public PosetError {
 public:
  using PosetError::PosetError;
};

class CycleError : public InputError {
 public:
  explicit CycleError(std::vector<std::string> cycle);
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class DuplicateLabelError : public InputError {
 public:
  explicit DuplicateLabelError(const std::string& label)
      : InputError("duplicate label '" + label + "'"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class UnknownElementError : public InputError {
 public:
  explicit UnknownElementError(const std::string& label)
      : InputError("unknown element '" + label + "'"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class LabelCollisionError : public InputError {
 public:
  explicit LabelCollisionError(const std::string& label)
      : InputError("label '" + label + "' occurs in more than one summand"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class EmptyPosetError : public InputError {
 public:
  EmptyPosetError() : InputError("operation undefined on the empty poset") {}
};

class BadParamsError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownFamilyError : public InputError {
 public:
  explicit UnknownFamilyError(const std::string& name)
      : InputError("unknown family '" + name + "'") {}
};

// Raised when a witness handed to combine_witnesses is not valid for its part.
class InvalidPartWitnessError : public InputError {
 public:
  using InputError::InputError;
};

class NotMaximumMatchingError : public InputError {
 public:
  using InputError::InputError;
};

// A lazily defined oracle contradicted itself on a finite prefix.
class OracleInconsistencyError : public InputError {
 public:
  OracleInconsistencyError(const std::string& what, std::vector<std::string> elements)
      : InputError(what), elements_(std::move(elements)) {}
  const std::vector<std::string>& elements() const { return elements_; }

 private:
  std::vector<std::string> elements_;
};

class CertificateViolationError : public InputError {
 public:
  using InputError::InputError;
};

// An exponential search was asked to go beyond its configured limits.
class BudgetExceededError : public PosetError {
 public:
  using PosetError::PosetError;
};

}  // namespace posetkit
