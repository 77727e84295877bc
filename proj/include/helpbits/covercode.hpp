#pragma once

#include <cstdint>
#include <vector>

#include "helpbits/bitspace.hpp"
#include "helpbits/rational.hpp"

namespace helpbits {

// Parameters for a rate-distortion cover of {0,1}^k at radius alpha*k using
// ell = ceil(k(1 - h(alpha) + epsilon)) index bits. The size budget 2^ell is
// guaranteed only under the sufficiency condition k >= 6 eps^-1 lg(eps^-1).
struct CoverParams {
    std::uint32_t k = 0;
    Rational alpha;
    Rational epsilon;
    std::uint32_t radius = 0;
    std::uint32_t ell = 0;
    std::uint64_t size_budget = 0;
    bool precondition_met = false;

    static CoverParams make(std::uint32_t k, const Rational& alpha, const Rational& epsilon);
};

// A covering code: codewords in greedy pick order plus the per-pick count of
// newly covered points.
struct CoveringCode {
    std::uint32_t k = 0;
    std::uint32_t radius = 0;
    std::vector<BitVector> codewords;
    std::vector<std::uint32_t> trace;
};

// Greedy construction: each pick maximizes the number of newly covered
// points, ties to the numerically smallest center; stops at full coverage.
// Candidate scoring may be split across threads (deterministic merge).
CoveringCode greedy_cover(std::uint32_t k, std::uint32_t radius, unsigned threads = 1);

// As above; additionally checks |codewords| <= 2^ell when the sufficiency
// condition holds.
CoveringCode greedy_cover(const CoverParams& params, unsigned threads = 1);

struct CoverReport {
    std::uint64_t uncovered = 0;
    std::uint32_t max_distance = 0;  // max over points of distance to the code
};

// Exhaustive check of every point against every codeword.
CoverReport verify_cover(const CoveringCode& code);

// 2^k (1 - q)^j with q = ball_fraction(k, radius): an upper bound on the
// number of uncovered points after j greedy picks.
double residual_bound(std::uint32_t k, std::uint32_t radius, std::uint64_t j);
double residual_bound(const CoverParams& params, std::uint64_t j);

// Smallest index i with d(codewords[i], v) <= radius.
std::uint32_t encode(const CoveringCode& code, const BitVector& v);

// codewords[index].
BitVector decode(const CoveringCode& code, std::uint32_t index);

}  // namespace helpbits
