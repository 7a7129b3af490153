#include "twistab/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>
#include <stdexcept>

namespace twistab {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto strip = [](const std::string& t) {
    size_t b = t.find_first_not_of(" \t");
    size_t e = t.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return t.substr(b, e - b + 1);
  };
  std::string t = strip(s);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  std::string num = t, den = "1";
  if (auto slash = t.find('/'); slash != std::string::npos) {
    num = strip(t.substr(0, slash));
    den = strip(t.substr(slash + 1));
  }
  auto check = [](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("bad rational literal");
    size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("bad rational literal");
    for (; i < part.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("bad rational literal: " + part);
  };
  check(num);
  check(den);
  Int p(num), q(den);
  if (q == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rat(p, q);
}

Int rat_num(const Rat& r) { return numerator(r); }
Int rat_den(const Rat& r) { return denominator(r); }

Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

Rat rat_mod1(const Rat& r) { return r - Rat(rat_floor(r)); }

long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer out of long long range");
  return static_cast<long long>(v);
}

Int lcm_int(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

std::string qvec_to_string(const QVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(v[i]);
  }
  return out + ")";
}

}  // namespace twistab
