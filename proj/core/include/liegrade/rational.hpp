// rational.hpp — arbitrary-precision rationals and integers (GMP-backed).
#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace liegrade {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input shape errors (wrong weight arity, wrong group, ...). The CLI maps
// these to exit code 3, all other Errors to exit code 2.
struct ArityError : Error {
    explicit ArityError(const std::string& msg) : Error(msg) {}
};

// Parses "p" or "p/q"; rejects q = 0.
inline Rat parse_rat(const std::string& s)
{
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw Error("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw Error("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace liegrade
