#ifndef UALG_TUPLES_HPP
#define UALG_TUPLES_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ualg/error.hpp"

namespace ualg {

using Element = std::size_t;
using Tuple = std::vector<Element>;

/// Largest number of entries any dense table or membership mask may hold.
inline constexpr std::size_t kMaxTableEntries = std::size_t{1} << 32;

/// base^exp, throwing SizeError when the result exceeds `limit`.
inline std::size_t checked_power(std::size_t base, std::size_t exp,
                                 std::size_t limit = kMaxTableEntries)
{
    std::size_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base == 0)
            return 0;
        if (result > limit / base)
            throw SizeError("size " + std::to_string(base) + "^" + std::to_string(exp) +
                            " exceeds bound " + std::to_string(limit));
        result *= base;
    }
    return result;
}

inline std::size_t checked_product(std::span<const std::size_t> radices,
                                   std::size_t limit = kMaxTableEntries)
{
    std::size_t result = 1;
    for (std::size_t r : radices) {
        if (r == 0)
            return 0;
        if (result > limit / r)
            throw SizeError("product of sizes exceeds bound " + std::to_string(limit));
        result *= r;
    }
    return result;
}

// Mixed-radix codes are little-endian: coordinate 0 is the least significant digit.

inline std::size_t encode_mixed(std::span<const Element> digits, std::span<const std::size_t> radices)
{
    std::size_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;)
        code = code * radices[i] + digits[i];
    return code;
}

inline std::size_t encode_uniform(std::span<const Element> digits, std::size_t radix)
{
    std::size_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;)
        code = code * radix + digits[i];
    return code;
}

inline Tuple decode_mixed(std::size_t code, std::span<const std::size_t> radices)
{
    Tuple digits(radices.size());
    for (std::size_t i = 0; i < radices.size(); ++i) {
        digits[i] = code % radices[i];
        code /= radices[i];
    }
    return digits;
}

inline Tuple decode_uniform(std::size_t code, std::size_t radix, std::size_t length)
{
    Tuple digits(length);
    for (std::size_t i = 0; i < length; ++i) {
        digits[i] = code % radix;
        code /= radix;
    }
    return digits;
}

/// Advance `t` to the lexicographic successor (last coordinate fastest) over
/// coordinate i ranging in [0, radices[i]). Returns false after the last tuple.
inline bool next_lex(Tuple& t, std::span<const std::size_t> radices)
{
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < radices[i])
            return true;
        t[i] = 0;
    }
    return false;
}

inline bool next_lex(Tuple& t, std::size_t radix)
{
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < radix)
            return true;
        t[i] = 0;
    }
    return false;
}

/// Calls fn(const Tuple&) for every tuple in [0,radix)^length, lexicographically.
template <class Fn>
void for_each_tuple(std::size_t radix, std::size_t length, Fn&& fn)
{
    if (radix == 0 && length > 0)
        return;
    Tuple t(length, 0);
    do {
        fn(static_cast<const Tuple&>(t));
    } while (next_lex(t, radix));
}

inline std::string to_string(std::span<const Element> t)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i)
        os << (i ? "," : "") << t[i];
    os << ')';
    return os.str();
}

} // namespace ualg

#endif // UALG_TUPLES_HPP
