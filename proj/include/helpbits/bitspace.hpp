#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "helpbits/rational.hpp"

namespace helpbits {

// Hard caps that keep every value in machine integers and every exhaustive
// enumeration under ~2^24 elements.
inline constexpr std::uint32_t kMaxBits = 30;
inline constexpr std::uint32_t kMaxEnumBits = 24;

// Fixed-length bit vector in {0,1}^length, 1 <= length <= 30.
//
// Position 0 is the first coordinate of the tuple and the most significant
// bit of `value`; the textual form lists positions left to right, so numeric
// order on `value` coincides with lexicographic order on the text.
class BitVector {
public:
    BitVector(std::uint32_t length, std::uint32_t value);
    static BitVector parse(std::string_view text);

    std::uint32_t length() const { return length_; }
    std::uint32_t value() const { return value_; }
    bool bit(std::uint32_t pos) const;
    BitVector with_bit(std::uint32_t pos, bool b) const;
    std::string str() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::uint32_t length_;
    std::uint32_t value_;
};

// Number of positions where u and v differ. Lengths must match.
std::uint32_t hamming_distance(const BitVector& u, const BitVector& v);

// Exact binomial coefficient; n <= 62 so the result fits in 64 bits here.
std::uint64_t binomial(std::uint32_t n, std::uint32_t r);

// |B(v, r)| = sum_{i<=r} C(k, i), exact.
std::uint64_t ball_volume(std::uint32_t k, std::uint32_t r);

// ball_volume(k, r) / 2^k.
double ball_fraction(std::uint32_t k, std::uint32_t r);

// h(p) = p lg 1/p + (1-p) lg 1/(1-p), in bits, with 0 lg 1/0 = 0.
double binary_entropy(double p);
long double binary_entropy_l(long double p);

// All XOR masks over k bits with popcount <= r, ascending numeric order.
std::vector<std::uint32_t> ball_masks(std::uint32_t k, std::uint32_t r);

// The ball of radius r around `center`, ascending lexicographic order.
// Enumeration is capped at length 24.
std::vector<BitVector> enumerate_ball(const BitVector& center, std::uint32_t r);

// A radius in a k-cube. When built from a distortion fraction alpha, alpha*k
// must be an exact integer.
struct BallSpec {
    std::uint32_t k;
    std::uint32_t radius;

    static BallSpec from_radius(std::uint32_t k, std::uint32_t radius);
    static BallSpec from_alpha(std::uint32_t k, const Rational& alpha);
};

// Exact integer radius alpha*k; throws if alpha*k is not an integer.
std::uint32_t radius_from_alpha(std::uint32_t k, const Rational& alpha);

}  // namespace helpbits
