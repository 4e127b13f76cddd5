#ifndef RESTAB_ERROR_HPP
#define RESTAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace restab {

enum class Err {
    DimensionMismatch,
    UnsupportedSurface,
    WrongSurface,
    RankZero,
    RankTooSmall,
    NonPositiveH,
    NonPositiveHC,
    SlopeEqualsS,
    ZeroImaginaryPart,
    DegenerateWall,
    BadDegree,
    BadDyadic,
    DepthExceeded,
    NoRealRoot,
    SingularCase,
    NegativeDiscriminant,
    BelowDLPCurve,
    NotPicardRankTwo,
    NotAmple,
    HypothesisFailed,
    UndeterminedCase,
    NonTermination,
    InputError,
};

const char* err_name(Err code);

class CalcError : public std::runtime_error {
  public:
    CalcError(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

    Err code() const { return code_; }

  private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw CalcError(code, what); }

}  // namespace restab

#endif
