#ifndef EVAC_ERROR_HPP
#define EVAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace evac {

// Error classes surfaced by the CLI as "error[<class>]: message" on stderr.
enum class ErrorClass {
    Usage,       // bad flags / arguments
    Parse,       // malformed scenario or config text
    Validation,  // inputs violate a documented precondition
    Io,          // file system failure
    Numeric,     // non-finite state, simulation abort
};

inline const char* to_string(ErrorClass c) {
    switch (c) {
        case ErrorClass::Usage:      return "usage";
        case ErrorClass::Parse:      return "parse";
        case ErrorClass::Validation: return "validation";
        case ErrorClass::Io:         return "io";
        case ErrorClass::Numeric:    return "numeric";
    }
    return "internal";
}

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& msg)
        : std::runtime_error(msg), cls_(cls) {}

    ErrorClass error_class() const { return cls_; }

private:
    ErrorClass cls_;
};

}  // namespace evac

#endif
