#pragma once

#include <stdexcept>
#include <string>

namespace qq {

// Machine-readable error categories, surfaced verbatim by the CLI.
enum class errc {
    parse,         // malformed series / cone / module / descriptor text or JSON
    precision,     // answer would depend on coefficients beyond the known window
    precondition,  // operation called outside its stated domain
    validation,    // module family violates a structural condition
    domain,        // arithmetic domain error (division by zero series, ...)
    limit,         // desk-scale input size limit exceeded
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::parse: return "parse";
    case errc::precision: return "precision";
    case errc::precondition: return "precondition";
    case errc::validation: return "validation";
    case errc::domain: return "domain";
    case errc::limit: return "limit";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace qq
