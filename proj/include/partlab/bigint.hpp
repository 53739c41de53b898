#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace partlab {

// Exact signed integers for every coefficient in the library.
using Int = boost::multiprecision::cpp_int;

} // namespace partlab
