#ifndef PCF_TEST_UTIL_HPP
#define PCF_TEST_UTIL_HPP

#include <algorithm>
#include <complex>

namespace pcf::test {

inline double rel_err(std::complex<double> got, std::complex<double> want, double floor = 1e-300)
{
    return std::abs(got - want) / std::max(std::abs(want), floor);
}

} // namespace pcf::test

#endif
