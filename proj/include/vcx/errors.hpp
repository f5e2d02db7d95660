#pragma once

#include <stdexcept>
#include <string>

namespace vcx {

/// Invalid argument, malformed file, or violated precondition.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Analysis requested on an empty concept class (constructible, not analyzable).
class empty_class_error : public input_error {
public:
    explicit empty_class_error(const std::string& what) : input_error(what) {}
};

/// A documented size cap was exceeded; analyses are exhaustive and never degrade silently.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vcx
