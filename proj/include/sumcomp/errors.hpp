#pragma once

#include <stdexcept>
#include <string>

namespace sumcomp {

/// Raised when a configurable resource cap would be exceeded (stored-block
/// budget of the collecting enumerator, oracle instance-size limits).
/// Distinguishes "aborted" from "no results".
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sumcomp
