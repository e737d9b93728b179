#pragma once

#include <stdexcept>
#include <string>

namespace sv {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    using error::error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct invalid_parameters : error {
    using error::error;
};

struct depth_exceeded : error {
    using error::error;
};

struct reducible_parameters : error {
    using error::error;
};

} // namespace sv
