#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace conetool {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Parse "p" or "p/q" (optionally signed) into a canonical rational.
Rat parse_rational(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
std::string format_rational(const Rat& value);

/// FNV-1a over a byte string; used for input digests in certificates and reports.
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t value);

/// Global element-count cap for group enumerations (env CONETOOL_BUDGET_CAP, default 100000).
std::size_t budget_cap();

} // namespace conetool
