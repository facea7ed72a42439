#pragma once

#include <stdexcept>
#include <string>

namespace axicrit {

/// Invalid or out-of-range configuration. No partially-applied config ever
/// reaches the solver: load_config either returns a fully validated RunConfig
/// or throws this.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A field stopped being finite during time integration. Blow-up is a
/// reportable outcome, not a crash: the run loop catches this, flushes the
/// partial diagnostics, and the CLI maps it to a dedicated exit code.
class BlowupError : public std::runtime_error {
public:
    BlowupError(double time, int stage, std::string field_name)
        : std::runtime_error("non-finite value in field '" + field_name +
                             "' at t=" + std::to_string(time) + " (RK stage " +
                             std::to_string(stage) + ")"),
          time(time), stage(stage), field(std::move(field_name)) {}
    double time;
    int stage;
    std::string field;
};

/// Snapshot file problems, each kind distinct so callers can tell a stale
/// format from a torn write from a wrong-grid resume.
class SnapshotError : public std::runtime_error {
public:
    enum class Kind { bad_header, version_mismatch, truncated_payload, grid_mismatch };
    SnapshotError(Kind kind, const std::string& msg)
        : std::runtime_error(msg), kind(kind) {}
    Kind kind;
};

/// An internal invariant failed (solver contract violation, singular
/// factorization, shape mismatch). Always a programming error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace axicrit
