#ifndef RATDYN_ERRORS_HPP
#define RATDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ratdyn {

enum class ErrorCode {
    DegenerateMap,
    BadDegree,
    RootFindingFailure,
    ExceptionalAnchor,
    CriticalCollision,
    NotNearCritical,
    ScanCapExceeded,
    NoFiniteKappa,
    NoSamples,
    BadSpec,
    NotPeriodic,
    IllConditioned,
    MotionBreakdown,
    DegenerateTransversality,
    NoAdmissibleTimes,
    IoError,
    Validation,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ratdyn

#endif
