#pragma once

#include <optional>
#include <string>

#include "symtriple/exact.hpp"

namespace symtriple {

// The first place an identity was seen to fail.
struct IdentityFailure {
    std::string identity;
    long index = 0;
    std::string lhs;
    std::string rhs;
};

using IdentityCheck = std::optional<IdentityFailure>;

inline IdentityCheck compare(const std::string& identity, long index, const FieldElement& lhs, const FieldElement& rhs) {
    if (lhs == rhs) return std::nullopt;
    return IdentityFailure{identity, index, lhs.to_string(), rhs.to_string()};
}

}  // namespace symtriple
