#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace braidstat {

// All reportable failures carry a stable machine-readable code.
// Validation errors map to CLI exit 2, cap errors to exit 3.
class Error : public std::runtime_error {
public:
    enum class Class { Validation, Cap };

    Error(Class cls, std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), cls_(cls), code_(std::move(code)) {}

    Class error_class() const { return cls_; }
    const std::string& code() const { return code_; }

private:
    Class cls_;
    std::string code_;
};

inline Error validation_error(const std::string& code, const std::string& what) {
    return Error(Error::Class::Validation, code, what);
}

inline Error cap_error(const std::string& code, const std::string& what) {
    return Error(Error::Class::Cap, code, what);
}

// Size caps. BRAIDSTAT_CAP, when set, overrides every default cap.
inline long cap_value(long fallback) {
    if (const char* env = std::getenv("BRAIDSTAT_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

constexpr long kDefaultLinearBasisCap = 200000;    // basis elements, linear coinvariant engine
constexpr long kDefaultOrbitNodeCap = 20000000;    // tuples, orbit engine
constexpr long kDefaultTupleCap = 10000000;        // Nielsen tuple scans
constexpr long kDefaultWorkCap = 100000000;        // q^n work units, statistics harness
constexpr long kDefaultResolutionStrandCap = 6;    // resolution homology strand count
constexpr long kDefaultHereditaryCap = 12;         // rack size for subrack enumeration

}  // namespace braidstat
