#pragma once

#include <stdexcept>
#include <string>

namespace starcolor {

// Malformed input or a violated precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured size, palette or effort cap was hit before an answer was found.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Timeout : public CapExceeded {
public:
    Timeout() : CapExceeded("timeout") {}
};

}  // namespace starcolor
