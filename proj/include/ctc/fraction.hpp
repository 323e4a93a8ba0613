#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ctc {

/// Positive rational p/q, always stored reduced. Ordering is exact
/// (cross-multiplication in 128-bit), there is no floating point anywhere.
class Fraction {
public:
    Fraction() = default;
    Fraction(std::int64_t p, std::int64_t q = 1)
    {
        if (p <= 0 || q <= 0)
            throw std::invalid_argument("Fraction: numerator and denominator must be positive");
        const auto g = std::gcd(p, q);
        p_ = p / g;
        q_ = q / g;
    }

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    bool is_integer() const { return q_ == 1; }

    friend bool operator==(const Fraction & a, const Fraction & b) = default;
    friend std::strong_ordering operator<=>(const Fraction & a, const Fraction & b)
    {
        const __int128 lhs = static_cast<__int128>(a.p_) * b.q_;
        const __int128 rhs = static_cast<__int128>(b.p_) * a.q_;
        return lhs <=> rhs;
    }

    // "9/2", or "4" for integers.
    std::string str() const
    {
        return q_ == 1 ? std::to_string(p_) : std::to_string(p_) + "/" + std::to_string(q_);
    }

    double approx() const { return static_cast<double>(p_) / static_cast<double>(q_); }

    /// Parses "p/q" or "p".
    static Fraction parse(const std::string & text)
    {
        const auto slash = text.find('/');
        try {
            std::size_t used = 0;
            if (slash == std::string::npos) {
                const auto p = std::stoll(text, &used);
                if (used != text.size())
                    throw std::invalid_argument(text);
                return Fraction(p);
            }
            const auto ps = text.substr(0, slash), qs = text.substr(slash + 1);
            const auto p = std::stoll(ps, &used);
            if (used != ps.size())
                throw std::invalid_argument(text);
            const auto q = std::stoll(qs, &used);
            if (used != qs.size())
                throw std::invalid_argument(text);
            return Fraction(p, q);
        }
        catch (const std::logic_error &) {
            throw std::invalid_argument("not a positive fraction: '" + text + "'");
        }
    }

private:
    std::int64_t p_ = 1;
    std::int64_t q_ = 1;
};

inline std::ostream & operator<<(std::ostream & os, const Fraction & f) { return os << f.str(); }

} // namespace ctc
