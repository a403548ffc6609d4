#include "conetool/util.hpp"

#include <cstdlib>

#include "conetool/errors.hpp"

namespace conetool {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!looks_like_integer(text)) throw InputError("not a rational: '" + text + "'");
            return Rat(Int(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!looks_like_integer(num) || !looks_like_integer(den))
            throw InputError("not a rational: '" + text + "'");
        Int d(den);
        if (d == 0) throw InputError("zero denominator in '" + text + "'");
        // The (num, den) constructor canonicalizes sign and gcd.
        return Rat(Int(num), d);
    } catch (const std::runtime_error& e) {
        throw InputError(std::string("not a rational: '") + text + "' (" + e.what() + ")");
    }
}

std::string format_rational(const Rat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

std::size_t budget_cap() {
    if (const char* env = std::getenv("CONETOOL_BUDGET_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 100000;
}

} // namespace conetool
