#pragma once

#include <stdexcept>
#include <string>

namespace altoda {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define ALTODA_DEFINE_ERROR(Name)                   \
    struct Name : Error {                           \
        using Error::Error;                         \
        Name() : Error(#Name) {}                    \
    }

ALTODA_DEFINE_ERROR(NoConvergence);
ALTODA_DEFINE_ERROR(PoleAtC);
ALTODA_DEFINE_ERROR(DomainError);
ALTODA_DEFINE_ERROR(BranchCut);
ALTODA_DEFINE_ERROR(WindowTooSmall);
ALTODA_DEFINE_ERROR(ZeroY);
ALTODA_DEFINE_ERROR(ShapeViolation);
ALTODA_DEFINE_ERROR(BlowUp);
ALTODA_DEFINE_ERROR(PoleHit);
ALTODA_DEFINE_ERROR(RouteMismatch);
ALTODA_DEFINE_ERROR(DegenerateCritical);
ALTODA_DEFINE_ERROR(ProjectionFailure);
ALTODA_DEFINE_ERROR(GradientCatastrophe);
ALTODA_DEFINE_ERROR(DiscriminantHit);
ALTODA_DEFINE_ERROR(ConventionMismatch);
ALTODA_DEFINE_ERROR(IntegerZ);
ALTODA_DEFINE_ERROR(ConfigError);

#undef ALTODA_DEFINE_ERROR

}  // namespace altoda
