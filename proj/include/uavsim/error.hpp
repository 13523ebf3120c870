#pragma once

#include <stdexcept>
#include <string>

namespace uavsim {

// Invalid configuration value, unknown key or malformed config file.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A formula evaluated outside its domain (negative breakpoint, zero-length link).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// API misuse such as aggregating an empty sample set.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace uavsim
