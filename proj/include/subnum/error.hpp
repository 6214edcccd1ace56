#pragma once

#include <stdexcept>
#include <string>

namespace subnum {

// Domain error: invalid config text, rejected seed, word outside the
// automaton's language, out-of-range position, and the like.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subnum
