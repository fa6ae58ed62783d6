#pragma once

#include <stdexcept>
#include <string>

namespace latticeforge {

// Process exit codes shared by the library's error taxonomy and the CLI.
enum class ExitCode : int {
  ok = 0,
  usage = 1,
  domain = 2,     // range/domain violation in inputs
  invariant = 3,  // a certified invariant failed (a finding, not a crash)
  resource = 4,   // configured budget exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ExitCode::domain, what) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(ExitCode::invariant, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ExitCode::resource, what) {}
};

inline void require_domain(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

inline void require_invariant(bool ok, const std::string& msg) {
  if (!ok) throw InvariantError(msg);
}

}  // namespace latticeforge
