#pragma once

#include <stdexcept>
#include <string>

namespace fdtd2d {

/// Scene description failed validation (maps to CLI exit code 1).
class SceneError : public std::runtime_error {
public:
    explicit SceneError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite field values detected during time stepping (CLI exit code 2).
class InstabilityError : public std::runtime_error {
public:
    InstabilityError(const std::string& what, long step)
        : std::runtime_error(what), step_(step) {}
    long step() const { return step_; }

private:
    long step_;
};

/// Filesystem / format failure (CLI exit code 3).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fdtd2d
