#pragma once

#include <stdexcept>
#include <string>

namespace helpbits {

// Thrown when an operation would exceed the desk-scale enumeration budgets
// (k <= 24 cubes, n*k <= 24 tuple spaces, 2^24 dense table cells).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by encode() when no codeword lies within the covering radius of the
// input point, i.e. the code does not actually cover the cube.
class BrokenCodeError : public std::runtime_error {
public:
    explicit BrokenCodeError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by table_exclude when the union of the M_j sets exhausts the cube,
// leaving nothing to exclude.
class ExclusionFailureError : public std::runtime_error {
public:
    explicit ExclusionFailureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace helpbits
