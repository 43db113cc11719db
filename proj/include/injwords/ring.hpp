#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace injwords {

/// Coefficient ring: the integers, the rationals, or a prime field F_p with p < 2^31.
class RingSpec {
public:
    enum class Kind { integers, rationals, prime_field };

    static RingSpec integers() { return RingSpec(Kind::integers, 0); }
    static RingSpec rationals() { return RingSpec(Kind::rationals, 0); }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static RingSpec prime_field(std::int64_t p);

    /// Accepts "z", "q", or "fp:P".
    static RingSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    std::uint32_t modulus() const { return modulus_; }
    bool is_field() const { return kind_ != Kind::integers; }

    /// Inverse of parse: "z", "q", "fp:P".
    std::string str() const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    RingSpec(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint32_t modulus_;
};

bool is_prime(std::int64_t p);

} // namespace injwords
