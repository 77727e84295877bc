#include "helpbits/bitspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "helpbits/errors.hpp"

namespace helpbits {

BitVector::BitVector(std::uint32_t length, std::uint32_t value) : length_(length), value_(value) {
    if (length < 1 || length > kMaxBits)
        throw std::invalid_argument("BitVector: length must be in [1, 30], got " +
                                    std::to_string(length));
    if (length < 32 && value >= (1u << length))
        throw std::invalid_argument("BitVector: value " + std::to_string(value) +
                                    " does not fit in " + std::to_string(length) + " bits");
}

BitVector BitVector::parse(std::string_view text) {
    if (text.empty() || text.size() > kMaxBits)
        throw std::invalid_argument("BitVector: text length must be in [1, 30]");
    std::uint32_t value = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("BitVector: invalid character in \"" + std::string(text) +
                                        "\"");
        value = (value << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return BitVector(static_cast<std::uint32_t>(text.size()), value);
}

bool BitVector::bit(std::uint32_t pos) const {
    if (pos >= length_) throw std::invalid_argument("BitVector: position out of range");
    return (value_ >> (length_ - 1 - pos)) & 1u;
}

BitVector BitVector::with_bit(std::uint32_t pos, bool b) const {
    if (pos >= length_) throw std::invalid_argument("BitVector: position out of range");
    const std::uint32_t mask = 1u << (length_ - 1 - pos);
    return BitVector(length_, b ? (value_ | mask) : (value_ & ~mask));
}

std::string BitVector::str() const {
    std::string out(length_, '0');
    for (std::uint32_t i = 0; i < length_; ++i)
        if (bit(i)) out[i] = '1';
    return out;
}

std::uint32_t hamming_distance(const BitVector& u, const BitVector& v) {
    if (u.length() != v.length())
        throw std::invalid_argument("hamming_distance: length mismatch (" +
                                    std::to_string(u.length()) + " vs " +
                                    std::to_string(v.length()) + ")");
    return static_cast<std::uint32_t>(std::popcount(u.value() ^ v.value()));
}

std::uint64_t binomial(std::uint32_t n, std::uint32_t r) {
    if (n > 62) throw std::invalid_argument("binomial: n too large for exact 64-bit arithmetic");
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    std::uint64_t c = 1;
    // c * (n - i) is always divisible by (i + 1) at this point
    for (std::uint32_t i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
    return c;
}

std::uint64_t ball_volume(std::uint32_t k, std::uint32_t r) {
    if (k > kMaxBits)
        throw std::invalid_argument("ball_volume: k must be <= 30, got " + std::to_string(k));
    if (r > k) throw std::invalid_argument("ball_volume: radius exceeds dimension");
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i <= r; ++i) total += binomial(k, i);
    return total;
}

double ball_fraction(std::uint32_t k, std::uint32_t r) {
    return static_cast<double>(ball_volume(k, r)) / std::ldexp(1.0, static_cast<int>(k));
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("binary_entropy: p must lie in [0, 1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

long double binary_entropy_l(long double p) {
    if (!(p >= 0.0L && p <= 1.0L))
        throw std::invalid_argument("binary_entropy: p must lie in [0, 1]");
    long double h = 0.0L;
    if (p > 0.0L) h -= p * std::log2(p);
    if (p < 1.0L) h -= (1.0L - p) * std::log2(1.0L - p);
    return h;
}

std::vector<std::uint32_t> ball_masks(std::uint32_t k, std::uint32_t r) {
    if (k > kMaxEnumBits)
        throw ResourceLimitError("ball_masks: k = " + std::to_string(k) +
                                 " exceeds the enumeration cap of 24");
    if (r > k) throw std::invalid_argument("ball_masks: radius exceeds dimension");
    std::vector<std::uint32_t> masks;
    masks.reserve(ball_volume(k, r));
    const std::uint32_t limit = 1u << k;
    for (std::uint32_t m = 0; m < limit; ++m)
        if (static_cast<std::uint32_t>(std::popcount(m)) <= r) masks.push_back(m);
    return masks;
}

std::vector<BitVector> enumerate_ball(const BitVector& center, std::uint32_t r) {
    const std::uint32_t k = center.length();
    if (k > kMaxEnumBits)
        throw ResourceLimitError("enumerate_ball: length " + std::to_string(k) +
                                 " exceeds the enumeration cap of 24");
    if (r > k) throw std::invalid_argument("enumerate_ball: radius exceeds dimension");
    std::vector<std::uint32_t> values;
    values.reserve(ball_volume(k, r));
    for (std::uint32_t mask : ball_masks(k, r)) values.push_back(center.value() ^ mask);
    std::sort(values.begin(), values.end());
    std::vector<BitVector> out;
    out.reserve(values.size());
    for (std::uint32_t v : values) out.emplace_back(k, v);
    return out;
}

std::uint32_t radius_from_alpha(std::uint32_t k, const Rational& alpha) {
    if (alpha < Rational(0, 1) || alpha > Rational(1, 1))
        throw std::invalid_argument("radius_from_alpha: alpha must lie in [0, 1]");
    const std::int64_t scaled = alpha.num() * static_cast<std::int64_t>(k);
    if (scaled % alpha.den() != 0)
        throw std::invalid_argument("radius_from_alpha: alpha*k is not an integer (alpha = " +
                                    alpha.str() + ", k = " + std::to_string(k) + ")");
    return static_cast<std::uint32_t>(scaled / alpha.den());
}

BallSpec BallSpec::from_radius(std::uint32_t k, std::uint32_t radius) {
    if (radius > k) throw std::invalid_argument("BallSpec: radius exceeds dimension");
    return BallSpec{k, radius};
}

BallSpec BallSpec::from_alpha(std::uint32_t k, const Rational& alpha) {
    return BallSpec{k, radius_from_alpha(k, alpha)};
}

}  // namespace helpbits
