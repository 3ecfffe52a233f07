#pragma once

#include <stdexcept>
#include <string>

namespace lrdcp {

// Invalid parameters or inputs outside an operation's domain.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or unusable input data (bad CSV cell, missing column, ...).
class ingestion_error : public domain_error {
 public:
  explicit ingestion_error(const std::string& what) : domain_error(what) {}
};

// A computation failed to converge or produced an inconsistent result.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lrdcp
