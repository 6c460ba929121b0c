#pragma once

#include <stdexcept>
#include <string>

namespace pmet {

/// Broad failure classes. The CLI maps these onto its exit codes.
enum class ErrorKind {
    config,
    singularity,
    nonconvergence,
    invalid_argument,
    io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Invalid or incomplete system description. `key()` names the offending field.
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& message)
        : Error(ErrorKind::config, key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// An energy denominator fell inside the pole guard.
/// Indices that do not apply to the failing expression are -1.
class SingularityError : public Error {
public:
    SingularityError(const std::string& what, int n = -1, int m = -1, int l = -1)
        : Error(ErrorKind::singularity, what), n_(n), m_(m), l_(l) {}
    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    int l() const noexcept { return l_; }

private:
    int n_, m_, l_;
};

class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what, int cap, double last_delta)
        : Error(ErrorKind::nonconvergence, what), cap_(cap), last_delta_(last_delta) {}
    int cap() const noexcept { return cap_; }
    double last_delta() const noexcept { return last_delta_; }

private:
    int cap_;
    double last_delta_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(ErrorKind::invalid_argument, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

}  // namespace pmet
