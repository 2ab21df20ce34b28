#pragma once

#include <stdexcept>
#include <string>

namespace imumix {

constexpr double kGravity = 9.80665;  // standard gravity, m/s^2
constexpr double kPi = 3.14159265358979323846;

// Error categories; the CLI maps these onto process exit codes.
enum class Errc {
    config,            // bad configuration value
    schema,            // input file does not match the declared schema
    parse,             // unparseable cell / malformed content
    io,                // filesystem failure
    numeric,           // non-finite value where a finite one is required
    missing_artifact,  // a prerequisite stage output is absent
    infeasible,        // a plan that cannot be satisfied
    mismatch           // replay / consistency check failed
};

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

}  // namespace imumix
