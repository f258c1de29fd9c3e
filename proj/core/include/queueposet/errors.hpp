#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace queueposet {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The generating relations contain a directed cycle.
class CycleError : public Error {
 public:
  explicit CycleError(std::vector<std::string> cycle);
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class EmptyPosetError : public Error {
 public:
  using Error::Error;
};

class NotALinearExtension : public Error {
 public:
  using Error::Error;
};

// The incomparability graph has no transitive orientation.
class NotTwoDimensional : public Error {
 public:
  using Error::Error;
};

class MissingBounds : public Error {
 public:
  using Error::Error;
};

class WidthExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidLevels : public Error {
 public:
  using Error::Error;
};

class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

class AugmentationFailed : public Error {
 public:
  using Error::Error;
};

class NotBipartition : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::string field);
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace queueposet
