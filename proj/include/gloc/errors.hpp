#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gloc {

enum class ErrorKind {
  ParseError,
  DanglingReference,
  AxiomViolation,
  ActionAxiomViolation,
  SizeCapExceeded,
  NotFullyFaithful,
  NotSubductive,
  RightLegNotWeakEquivalence,
  NotAnafunctor,
  NotBiprincipal,
  NotRightPrincipal,
  NotBijective,
  GroupTooLarge,
  NotCovering,
  GroupNotAbelian,
  NotWeakEquivalence,
  BoundaryMismatch,
  Inconsistent,
};

const char* kind_name(ErrorKind k);

// Parse and validation failures are exit code 2, everything else 1.
bool is_input_error(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg, std::vector<std::string> details = {});

  ErrorKind kind() const { return kind_; }
  const std::vector<std::string>& details() const { return details_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> details_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

// Internal agreement checks ("all choices give the same answer").
inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Inconsistent, what);
}

// Upper bound on arrows of any pullback, tensor or quotient built by the
// library.  Initialised from GF_SIZE_CAP, default 100000.
std::size_t size_cap();
void set_size_cap(std::size_t cap);
void check_size(std::size_t n, const std::string& what);

}  // namespace gloc
