#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace storyfear {

// Error codes shared with the C API (see include/storyfear/storyfear.h).
enum class ErrorCode : int {
    Ok = 0,
    Io = 1,
    Format = 2,
    Argument = 3,
    State = 4,
    Coverage = 5,
    Training = 6,
    NotFound = 7,
    Lock = 8,
    Internal = 99,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct IoError : Error {
    explicit IoError(std::string m) : Error(ErrorCode::Io, std::move(m)) {}
};

struct FormatError : Error {
    explicit FormatError(std::string m) : Error(ErrorCode::Format, std::move(m)) {}
};

struct ArgError : Error {
    explicit ArgError(std::string m) : Error(ErrorCode::Argument, std::move(m)) {}
};

// A required upstream artifact (cache file, model) is missing.
struct StateError : Error {
    explicit StateError(std::string m) : Error(ErrorCode::State, std::move(m)) {}
};

// No usable input survived filtering (e.g. zero resolvable synonyms).
struct CoverageError : Error {
    explicit CoverageError(std::string m) : Error(ErrorCode::Coverage, std::move(m)) {}
};

struct TrainError : Error {
    explicit TrainError(std::string m) : Error(ErrorCode::Training, std::move(m)) {}
};

struct LockError : Error {
    explicit LockError(std::string m) : Error(ErrorCode::Lock, std::move(m)) {}
};

}  // namespace storyfear
