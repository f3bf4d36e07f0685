#pragma once

#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace stabxc {

/// Exact arbitrary-precision rational, always kept in canonical reduced form.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Set of vertices (or of points / lines) indexed from zero.
using VertexSet = boost::dynamic_bitset<>;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

/// n-th harmonic number H_n = 1 + 1/2 + ... + 1/n.
Rational harmonic(int n);

/// Ascending list of the members of a set.
std::vector<int> members(const VertexSet& s);

}  // namespace stabxc
