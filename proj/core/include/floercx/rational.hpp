#ifndef FLOERCX_RATIONAL_HPP
#define FLOERCX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace floercx {

// Plain value semantics (no expression templates): every arithmetic result
// is immediately a Rat/Int, so std::min and friends deduce cleanly.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline int sgn(const Rat& r) { return r.sign(); }
inline int sgn(const Int& i) { return i.sign(); }

// Accepts "p/q", integers, and decimal literals ("-1.25" -> -5/4), all exact.
std::optional<Rat> parse_rational(std::string_view text);

// Canonical form: "p" or "p/q" with q > 1.
std::string rat_str(const Rat& r);

// Fixed-point decimal with the given number of fractional digits, rounded
// toward zero. Used for SVG coordinates; deterministic by construction.
std::string rat_decimal(const Rat& r, int digits);

// Largest rational of the form floor(sqrt(num*den*4^k)) / (den*2^k) that is
// <= sqrt(x); k is chosen so the bound is tight to ~2^-32. Requires x >= 0.
Rat rat_sqrt_lower(const Rat& x);

}  // namespace floercx

#endif
