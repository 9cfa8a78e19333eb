#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hsx {

// All arithmetic in the library is exact: arbitrary-precision integers for
// Schubert coefficients and intersection numbers, rationals for weights,
// localization data and symbolic coefficients.  No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Small integer vectors (root/weight coordinates, canonical Weyl vectors).
// Entries stay far below 2^40 even in E8, so int64 is safe.
using IVec = std::vector<long long>;

inline std::string to_decimal(const Int& x) { return x.str(); }
inline std::string to_decimal(const Rat& x) { return x.str(); }

inline Int int_from_decimal(const std::string& s) { return Int(s); }
inline Rat rat_from_decimal(const std::string& s) { return Rat(s); }

struct IVecHash {
  std::size_t operator()(const IVec& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace hsx
