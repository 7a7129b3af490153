#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace twistab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using QVec = std::vector<Rat>;

// Reduced fraction text: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

// Accepts "p/q" or "p", optional leading '-'. Throws std::invalid_argument.
Rat rat_from_string(const std::string& s);

Int rat_num(const Rat& r);
Int rat_den(const Rat& r);

// Largest integer <= r.
Int rat_floor(const Rat& r);

// r - floor(r), in [0, 1).
Rat rat_mod1(const Rat& r);

// Throws std::overflow_error when the value does not fit.
long long to_ll(const Int& v);

Int lcm_int(Int a, Int b);

std::string qvec_to_string(const QVec& v);

}  // namespace twistab
