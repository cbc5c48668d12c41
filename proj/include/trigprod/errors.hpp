#ifndef TRIGPROD_ERRORS_HPP
#define TRIGPROD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trigprod {

/// A requested table would exceed the configured memory cap.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// A brute-force oracle was asked for a size beyond its cap.
class oracle_limit_error : public std::runtime_error {
 public:
  explicit oracle_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// A persisted table failed a structural invariant on read.
class integrity_error : public std::runtime_error {
 public:
  explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trigprod

#endif
