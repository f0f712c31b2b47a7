#ifndef WEYLSUM_ERRORS_HPP
#define WEYLSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weylsum {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define WEYLSUM_DEFINE_ERROR(NAME)                                      \
    struct NAME : Error {                                               \
        explicit NAME(const std::string& msg = #NAME) : Error(msg) {}   \
    }

WEYLSUM_DEFINE_ERROR(NotSquareFree);
WEYLSUM_DEFINE_ERROR(ClassNumberNotOne);
WEYLSUM_DEFINE_ERROR(UnsupportedDegree);
WEYLSUM_DEFINE_ERROR(ZeroEmbedding);
WEYLSUM_DEFINE_ERROR(BoundTooLarge);
WEYLSUM_DEFINE_ERROR(SquareDiscriminant);
WEYLSUM_DEFINE_ERROR(MixedSignature);
WEYLSUM_DEFINE_ERROR(WrongSignature);
WEYLSUM_DEFINE_ERROR(SearchOverflow);
WEYLSUM_DEFINE_ERROR(OutsideConvergence);
WEYLSUM_DEFINE_ERROR(TruncationTooSmall);
WEYLSUM_DEFINE_ERROR(QuadratureNotConverged);
WEYLSUM_DEFINE_ERROR(NotFundamental);
WEYLSUM_DEFINE_ERROR(ToleranceUnreachable);
WEYLSUM_DEFINE_ERROR(SignMismatch);
WEYLSUM_DEFINE_ERROR(NotCongruentOne);
WEYLSUM_DEFINE_ERROR(DegenerateM);
WEYLSUM_DEFINE_ERROR(BasisSolveFailed);

#undef WEYLSUM_DEFINE_ERROR

} // namespace weylsum

#endif
