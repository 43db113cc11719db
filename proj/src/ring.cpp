#include "injwords/ring.hpp"

#include <charconv>
#include <stdexcept>

namespace injwords {

bool is_prime(std::int64_t p)
{
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

RingSpec RingSpec::prime_field(std::int64_t p)
{
    if (p >= (std::int64_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
    return RingSpec(Kind::prime_field, static_cast<std::uint32_t>(p));
}

RingSpec RingSpec::parse(std::string_view text)
{
    if (text == "z") return integers();
    if (text == "q") return rationals();
    if (text.starts_with("fp:")) {
        text.remove_prefix(3);
        std::int64_t p = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
        if (ec == std::errc{} && end == text.data() + text.size() && !text.empty())
            return prime_field(p);
    }
    throw std::invalid_argument("unknown ring '" + std::string(text) + "' (expected z, q, or fp:P)");
}

std::string RingSpec::str() const
{
    switch (kind_) {
    case Kind::integers: return "z";
    case Kind::rationals: return "q";
    case Kind::prime_field: return "fp:" + std::to_string(modulus_);
    }
    return {};
}

} // namespace injwords
