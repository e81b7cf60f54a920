#ifndef OESV_ERRORS_HPP_
#define OESV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace oesv {

/// Base class of every error raised by the library. `category()` is the short
/// tag the CLI prints and maps onto an exit code.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* category() const noexcept { return "Error"; }
};

#define OESV_DECLARE_ERROR(Name)                                            \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(what) {}                 \
    const char* category() const noexcept override { return #Name; }        \
  };

OESV_DECLARE_ERROR(NonDistinctRoots)
OESV_DECLARE_ERROR(ExactnessViolation)
OESV_DECLARE_ERROR(NotSPD)
OESV_DECLARE_ERROR(InvalidMesh)
OESV_DECLARE_ERROR(UnknownScheme)
OESV_DECLARE_ERROR(UnknownBenchmark)
OESV_DECLARE_ERROR(NoProgress)
OESV_DECLARE_ERROR(ParseError)
OESV_DECLARE_ERROR(ValidationError)
OESV_DECLARE_ERROR(IoError)

#undef OESV_DECLARE_ERROR

/// Raised when an Euler state with rho <= 0 or p <= 0 is met. The solver
/// fills in the cell, RK stage and time where it happened as the error
/// propagates outwards.
class NonPhysicalState : public Error {
 public:
  explicit NonPhysicalState(const std::string& what, long cell = -1,
                            int stage = -1, double time = -1.0)
      : Error(what), cell_(cell), stage_(stage), time_(time) {}
  const char* category() const noexcept override { return "NonPhysicalState"; }

  long cell() const noexcept { return cell_; }
  int stage() const noexcept { return stage_; }
  double time() const noexcept { return time_; }

  NonPhysicalState with_context(long cell, int stage, double time) const {
    return NonPhysicalState(std::runtime_error::what(), cell >= 0 ? cell : cell_,
                            stage, time);
  }

 private:
  long cell_;
  int stage_;
  double time_;
};

}  // namespace oesv

#endif  // OESV_ERRORS_HPP_
