#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuselab {

/// Base class for every error raised by the library.
///
/// Errors that stem from a mathematical failure carry a witness: the index
/// tuple at which the offending identity was observed.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

#define FUSELAB_DEFINE_ERROR(Name)  \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  };

FUSELAB_DEFINE_ERROR(DegenerateScalar)
FUSELAB_DEFINE_ERROR(ShapeMismatch)
FUSELAB_DEFINE_ERROR(NonIntegralVerlinde)
FUSELAB_DEFINE_ERROR(NotANimRep)
FUSELAB_DEFINE_ERROR(NonIntegralMultiplicity)
FUSELAB_DEFINE_ERROR(MultiplicityNotOne)
FUSELAB_DEFINE_ERROR(MissingPair)
FUSELAB_DEFINE_ERROR(SearchBudgetExceeded)
FUSELAB_DEFINE_ERROR(Overflow)

// Raised while ingesting user data. `ValidationError` means the document was
// well formed but the object it describes violates a mathematical invariant.
FUSELAB_DEFINE_ERROR(ParseError)
FUSELAB_DEFINE_ERROR(ValidationError)

#undef FUSELAB_DEFINE_ERROR

/// Outcome of a verification routine: which check failed and where.
struct Verdict {
  bool ok = true;
  std::string check;          // name of the first violated identity
  std::vector<int> witness;   // index tuple exhibiting the violation
  std::string detail;

  explicit operator bool() const noexcept { return ok; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::string check, std::vector<int> witness, std::string detail = {}) {
    return {false, std::move(check), std::move(witness), std::move(detail)};
  }
};

inline std::string format_witness(const std::vector<int>& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

}  // namespace fuselab
