#ifndef EULERCC_RATIONAL_HPP
#define EULERCC_RATIONAL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "errors.hpp"

namespace eulercc {

// Expression templates are disabled so that `auto` always holds a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline int sign(const Rational& q)
{
    return q.sign();
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q)
{
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

} // namespace detail

/**
 * Parse "p/q" or "p" (optional sign on p, q > 0 after normalization).
 * Throws InputError on anything else, including a zero denominator.
 */
inline Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num_s = text.substr(0, slash);
    const std::string_view den_s = slash == std::string_view::npos ? std::string_view("1")
                                                                   : text.substr(slash + 1);
    if (!detail::is_integer_literal(num_s) || !detail::is_integer_literal(den_s))
        throw InputError("malformed rational \"" + std::string(text) + "\"");
    std::string ns(num_s), ds(den_s);
    if (ns[0] == '+')
        ns.erase(0, 1);
    if (ds[0] == '+')
        ds.erase(0, 1);
    const Integer num(ns), den(ds);
    if (den == 0)
        throw InputError("zero denominator in rational \"" + std::string(text) + "\"");
    return Rational(num, den);
}

/**
 * Deterministic rational sampler. Draws come straight from the 64-bit
 * Mersenne twister (fully specified by the standard), so a seed reproduces
 * the same sequence on every platform.
 */
class RationalSampler
{
public:
    explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

    /// Integer uniformly-ish in [lo, hi].
    std::int64_t next_int(std::int64_t lo, std::int64_t hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    /// p/q with |p| <= max_num and 1 <= q <= max_den.
    Rational next_rational(std::int64_t max_num = 97, std::int64_t max_den = 89)
    {
        const auto p = next_int(-max_num, max_num);
        const auto q = next_int(1, max_den);
        return Rational(p) / Rational(q);
    }

    std::vector<Rational> next_vector(std::size_t dim, std::int64_t max_num = 97,
                                      std::int64_t max_den = 89)
    {
        std::vector<Rational> v(dim);
        for (auto& x : v)
            x = next_rational(max_num, max_den);
        return v;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace eulercc

#endif // EULERCC_RATIONAL_HPP
