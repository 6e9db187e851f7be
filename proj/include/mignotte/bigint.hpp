#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mignotte {

// Arbitrary-precision signed integer. Moduli products outgrow 64 bits
// almost immediately, so everything domain-facing uses this type.
using BigInt = boost::multiprecision::cpp_int;

} // namespace mignotte
