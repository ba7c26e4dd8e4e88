#pragma once

#include <cmath>
#include <cstdint>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcplab::detail {

/// Exact test of prod_i d_i < (num/den)^n with n = degrees.size().
inline bool product_below_power(std::span<const int> degrees, std::uint64_t num, std::uint64_t den) {
    using boost::multiprecision::cpp_int;
    const auto n = static_cast<unsigned>(degrees.size());
    cpp_int lhs = boost::multiprecision::pow(cpp_int(den), n);
    for (int d : degrees) lhs *= d;
    return lhs < boost::multiprecision::pow(cpp_int(num), n);
}

/// log10 of the degree product; -inf when some degree is 0.
inline double log10_product(std::span<const int> degrees) {
    double sum = 0;
    for (int d : degrees) sum += std::log10(static_cast<double>(d));
    return sum;
}

}  // namespace hcplab::detail
