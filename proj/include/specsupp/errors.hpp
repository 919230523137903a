#pragma once

#include <stdexcept>
#include <string>

namespace specsupp {

// Base class for all library errors; `code()` is the stable machine-readable
// name used in CLI reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define SPECSUPP_DEFINE_ERROR(Name)                                       \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}      \
    }

SPECSUPP_DEFINE_ERROR(MixedRings);
SPECSUPP_DEFINE_ERROR(NotAHomomorphism);
SPECSUPP_DEFINE_ERROR(JoinMismatch);
SPECSUPP_DEFINE_ERROR(FieldMismatch);
SPECSUPP_DEFINE_ERROR(SmallCharacteristic);
SPECSUPP_DEFINE_ERROR(FactorizationUnavailable);
SPECSUPP_DEFINE_ERROR(NotFiniteDimensional);
SPECSUPP_DEFINE_ERROR(BadRelation);
SPECSUPP_DEFINE_ERROR(ExtensionFailure);
SPECSUPP_DEFINE_ERROR(NotMono);
SPECSUPP_DEFINE_ERROR(IncompleteResolution);
SPECSUPP_DEFINE_ERROR(NotInjective);
SPECSUPP_DEFINE_ERROR(NotAPartition);
SPECSUPP_DEFINE_ERROR(BudgetExceeded);
SPECSUPP_DEFINE_ERROR(MissingSigma);
SPECSUPP_DEFINE_ERROR(NotALatticeHom);
SPECSUPP_DEFINE_ERROR(UnsupportedFormat);
SPECSUPP_DEFINE_ERROR(InvalidInput);

#undef SPECSUPP_DEFINE_ERROR

}  // namespace specsupp
