#pragma once

#include <gmpxx.h>

#include <string>

namespace detlinks {

/// Arbitrary precision signed integer used for every coefficient.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline int sign(const BigInt& v) { return sgn(v); }

}  // namespace detlinks
