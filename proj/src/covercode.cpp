#include "helpbits/covercode.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "helpbits/errors.hpp"
#include "helpbits/parallel.hpp"

namespace helpbits {

namespace {

// ceil with a snap window so that values a hair above an integer (long-double
// noise on an exactly-integral target) do not flip the ceiling up.
std::uint32_t ceil_snapped(long double x) {
    const long double lo = std::floor(x);
    if (x - lo <= 1e-9L) return static_cast<std::uint32_t>(lo);
    return static_cast<std::uint32_t>(lo) + 1;
}

}  // namespace

CoverParams CoverParams::make(std::uint32_t k, const Rational& alpha, const Rational& epsilon) {
    if (k < 1 || k > kMaxEnumBits)
        throw std::invalid_argument("CoverParams: k must be in [1, 24]");
    if (epsilon < Rational(0, 1))
        throw std::invalid_argument("CoverParams: epsilon must be nonnegative");
    CoverParams p;
    p.k = k;
    p.alpha = alpha;
    p.epsilon = epsilon;
    p.radius = radius_from_alpha(k, alpha);
    // ell from h(alpha) in extended precision (64-bit mantissa: ~19 decimal
    // digits), snapped so exactly-integral targets do not ceil upward.
    const long double h = binary_entropy_l(alpha.to_long_double());
    const long double target =
        static_cast<long double>(k) * (1.0L - h + epsilon.to_long_double());
    p.ell = ceil_snapped(target);
    if (p.ell > 62) throw std::invalid_argument("CoverParams: size budget exceeds 2^62");
    p.size_budget = std::uint64_t{1} << p.ell;
    if (epsilon > Rational(0, 1)) {
        const long double inv_eps = 1.0L / epsilon.to_long_double();
        p.precondition_met =
            static_cast<long double>(k) >= 6.0L * inv_eps * std::log2(inv_eps) - 1e-9L;
    }
    return p;
}

namespace {

class Bitmap {
public:
    explicit Bitmap(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set_all() {
        std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
        const std::size_t extra = words_.size() * 64 - bits_;
        if (extra) words_.back() >>= extra;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void clear(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    // Index of the lowest clear bit, or bits() if none.
    std::size_t first_clear() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t inv = ~words_[w];
            if (w == words_.size() - 1) {
                const std::size_t extra = words_.size() * 64 - bits_;
                if (extra) inv &= ~std::uint64_t{0} >> extra;
            }
            if (inv) return w * 64 + std::countr_zero(inv);
        }
        return bits_;
    }
    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                fn(w * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
    }
    std::size_t bits() const { return bits_; }

private:
    std::size_t bits_;
    std::vector<std::uint64_t> words_;
};

}  // namespace

CoveringCode greedy_cover(std::uint32_t k, std::uint32_t radius, unsigned threads) {
    if (k < 1 || k > kMaxEnumBits)
        throw ResourceLimitError("greedy_cover: k = " + std::to_string(k) +
                                 " exceeds the full-cube cap of 24");
    if (radius > k) throw std::invalid_argument("greedy_cover: radius exceeds dimension");

    const std::size_t cube = std::size_t{1} << k;
    const auto masks = ball_masks(k, radius);
    Bitmap uncovered(cube);
    uncovered.set_all();

    CoveringCode code;
    code.k = k;
    code.radius = radius;

    std::vector<std::uint32_t> counts(cube);
    std::vector<std::uint32_t> points;
    points.reserve(cube);

    while (uncovered.count() > 0) {
        points.clear();
        uncovered.for_each_set([&](std::size_t p) { points.push_back(static_cast<std::uint32_t>(p)); });

        // counts[c] = |ball(c) ∩ uncovered|; each worker accumulates a slice of
        // the uncovered points into its own array, merged by integer addition.
        std::fill(counts.begin(), counts.end(), 0u);
        if (threads <= 1) {
            for (std::uint32_t p : points)
                for (std::uint32_t m : masks) ++counts[p ^ m];
        } else {
            std::vector<std::vector<std::uint32_t>> local(threads,
                                                          std::vector<std::uint32_t>(cube, 0));
            parallel_chunks(points.size(), threads,
                            [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
                                auto& mine = local[chunk];
                                for (std::uint64_t i = begin; i < end; ++i)
                                    for (std::uint32_t m : masks) ++mine[points[i] ^ m];
                            });
            for (const auto& mine : local)
                for (std::size_t c = 0; c < cube; ++c) counts[c] += mine[c];
        }

        std::uint32_t best = 0;
        std::uint32_t best_count = counts[0];
        for (std::size_t c = 1; c < cube; ++c)
            if (counts[c] > best_count) {
                best = static_cast<std::uint32_t>(c);
                best_count = counts[c];
            }

        code.codewords.emplace_back(k, best);
        code.trace.push_back(best_count);
        for (std::uint32_t m : masks) uncovered.clear(best ^ m);
    }
    return code;
}

CoveringCode greedy_cover(const CoverParams& params, unsigned threads) {
    CoveringCode code = greedy_cover(params.k, params.radius, threads);
    if (params.precondition_met && code.codewords.size() > params.size_budget)
        throw std::logic_error("greedy_cover: size budget 2^" + std::to_string(params.ell) +
                               " exceeded with the sufficiency condition met");
    return code;
}

CoverReport verify_cover(const CoveringCode& code) {
    if (code.k < 1 || code.k > kMaxEnumBits)
        throw std::invalid_argument("verify_cover: k out of range");
    const std::size_t cube = std::size_t{1} << code.k;
    CoverReport report;
    for (std::size_t v = 0; v < cube; ++v) {
        // min distance to the code; k+1 when the code is empty
        std::uint32_t best = code.k + 1;
        for (const auto& w : code.codewords) {
            const std::uint32_t d =
                static_cast<std::uint32_t>(std::popcount(static_cast<std::uint32_t>(v) ^ w.value()));
            if (d < best) best = d;
        }
        if (best > code.radius) ++report.uncovered;
        if (best > report.max_distance) report.max_distance = best;
    }
    return report;
}

double residual_bound(std::uint32_t k, std::uint32_t radius, std::uint64_t j) {
    const double q = ball_fraction(k, radius);
    return std::ldexp(1.0, static_cast<int>(k)) * std::pow(1.0 - q, static_cast<double>(j));
}

double residual_bound(const CoverParams& params, std::uint64_t j) {
    return residual_bound(params.k, params.radius, j);
}

std::uint32_t encode(const CoveringCode& code, const BitVector& v) {
    if (v.length() != code.k)
        throw std::invalid_argument("encode: vector length does not match the code");
    for (std::size_t i = 0; i < code.codewords.size(); ++i)
        if (hamming_distance(code.codewords[i], v) <= code.radius)
            return static_cast<std::uint32_t>(i);
    throw BrokenCodeError("encode: no codeword within radius " + std::to_string(code.radius) +
                          " of " + v.str() + "; run verify_cover");
}

BitVector decode(const CoveringCode& code, std::uint32_t index) {
    if (index >= code.codewords.size())
        throw std::invalid_argument("decode: index " + std::to_string(index) +
                                    " out of range for code of size " +
                                    std::to_string(code.codewords.size()));
    return code.codewords[index];
}

}  // namespace helpbits
