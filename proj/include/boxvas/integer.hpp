#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace boxvas {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Integer d-vector. All arithmetic is exact.
using Vec = std::vector<Int>;

Int abs_int(const Int& a);
// n / d for any nonzero d; the rational type itself rejects negative denominators.
Rational ratio(const Int& n, const Int& d);
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
// Nonnegative remainder of a modulo m (m > 0).
Int mod_pos(const Int& a, const Int& m);
Int gcd_int(const Int& a, const Int& b);

// Returns g = gcd(a,b) >= 0 and sets x,y with a*x + b*y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

std::optional<std::int64_t> to_i64(const Int& a);
std::string to_string(const Int& a);
std::string to_string(const Vec& v);

Int inf_norm(const Vec& v);
Int dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Int& k, const Vec& v);
bool is_zero(const Vec& v);
bool all_nonneg(const Vec& v);
// Componentwise a <= b.
bool leq(const Vec& a, const Vec& b);

}  // namespace boxvas
