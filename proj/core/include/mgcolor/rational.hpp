#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace mgcolor {

using Rational = boost::rational<std::int64_t>;

// Always "p/q", also for integers ("5/1").
std::string to_string(const Rational& r);
// Accepts "p/q" or an integer "p".
Rational parse_rational(std::string_view text);
std::int64_t ceil(const Rational& r);
std::int64_t floor(const Rational& r);

}  // namespace mgcolor
