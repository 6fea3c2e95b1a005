#include "gloc/errors.hpp"

#include <atomic>
#include <cstdlib>

namespace gloc {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::ActionAxiomViolation: return "ActionAxiomViolation";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::NotFullyFaithful: return "NotFullyFaithful";
    case ErrorKind::NotSubductive: return "NotSubductive";
    case ErrorKind::RightLegNotWeakEquivalence: return "RightLegNotWeakEquivalence";
    case ErrorKind::NotAnafunctor: return "NotAnafunctor";
    case ErrorKind::NotBiprincipal: return "NotBiprincipal";
    case ErrorKind::NotRightPrincipal: return "NotRightPrincipal";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::GroupNotAbelian: return "GroupNotAbelian";
    case ErrorKind::NotWeakEquivalence: return "NotWeakEquivalence";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::Inconsistent: return "Inconsistent";
  }
  return "Error";
}

bool is_input_error(ErrorKind k) {
  return k == ErrorKind::ParseError || k == ErrorKind::DanglingReference ||
         k == ErrorKind::AxiomViolation || k == ErrorKind::ActionAxiomViolation;
}

Error::Error(ErrorKind kind, const std::string& msg, std::vector<std::string> details)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + msg),
      kind_(kind),
      details_(std::move(details)) {}

void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

namespace {
std::size_t initial_cap() {
  if (const char* env = std::getenv("GF_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}
std::atomic<std::size_t>& cap_ref() {
  static std::atomic<std::size_t> cap{initial_cap()};
  return cap;
}
}  // namespace

std::size_t size_cap() { return cap_ref().load(); }
void set_size_cap(std::size_t cap) { cap_ref().store(cap); }

void check_size(std::size_t n, const std::string& what) {
  if (n > size_cap())
    fail(ErrorKind::SizeCapExceeded,
         what + " needs " + std::to_string(n) + " arrows, cap is " + std::to_string(size_cap()));
}

}  // namespace gloc
