#pragma once

#include <stdexcept>
#include <string>

namespace hesslab {

// Input outside the supported range (e.g. n too large for enumeration).
class BoundedInputError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Internal cross-check failed: two routes that must agree did not.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A checked statement (support criterion, Kahler package, palindromicity)
// failed on a concrete instance. `witness` describes the instance.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(const std::string& what, std::string witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

}  // namespace hesslab
