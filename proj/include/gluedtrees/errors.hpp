#pragma once

#include <stdexcept>

namespace gluedtrees {

// construction or enumeration would exceed the configured budget
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// experiment config failed schema validation
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gluedtrees
