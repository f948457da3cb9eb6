#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace strebel {

// Exact arithmetic used whenever every input is rational.  64-bit
// numerators/denominators are plenty at desk scale; boost::rational
// normalizes and throws on overflow-free gcd reduction.
using Rat = boost::rational<std::int64_t>;

inline double to_double(const Rat& r) {
    return boost::rational_cast<double>(r);
}

// Parses "p/q", "p", or a finite decimal like "0.125" into an exact
// rational.  Returns nullopt when the literal does not fit (too many
// digits) or is not a plain rational literal.
std::optional<Rat> parse_rational(const std::string& token);

}  // namespace strebel
