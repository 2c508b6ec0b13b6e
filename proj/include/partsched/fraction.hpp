#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace partsched {

using Fraction = boost::rational<std::int64_t>;

inline double to_double(const Fraction& f) {
    return boost::rational_cast<double>(f);
}

} // namespace partsched
