#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "helpbits/bitspace.hpp"
#include "helpbits/rational.hpp"
#include "helpbits/rng.hpp"

namespace helpbits {

inline constexpr std::uint32_t kMaxInstanceBits = 20;

// A decision problem on n-bit instances as an explicit truth table, with an
// optional "easy" prefix: the lexicographically first `easy_count` instances
// are forced to answer 0.
class ToyLanguage {
public:
    ToyLanguage(std::uint32_t n, std::vector<std::uint8_t> table,
                std::optional<std::uint32_t> easy_count = std::nullopt);

    // Deterministic function of (n, seed, easy_fraction): entry x, for x at or
    // past the easy prefix, takes the low bit of one generator output, in
    // ascending x order. easy_count = ceil(easy_fraction * 2^n).
    static ToyLanguage random(std::uint32_t n, std::uint64_t seed,
                              std::optional<Rational> easy_fraction = std::nullopt);

    std::uint32_t n() const { return n_; }
    std::uint32_t size() const { return 1u << n_; }
    bool answer(std::uint32_t x) const;
    const std::vector<std::uint8_t>& table() const { return table_; }

    std::optional<std::uint32_t> easy_count() const { return easy_count_; }
    bool is_easy(std::uint32_t x) const { return easy_count_ && x < *easy_count_; }
    // Realized easy fraction easy_count / 2^n (the 2*delta of the scheme built
    // on this language).
    Rational realized_easy_fraction() const;

private:
    std::uint32_t n_;
    std::vector<std::uint8_t> table_;
    std::optional<std::uint32_t> easy_count_;
};

// Distribution over n-bit instances; weights sum to 1 within 1e-9.
class InstanceDistribution {
public:
    InstanceDistribution(std::uint32_t n, std::vector<double> weights);
    static InstanceDistribution uniform(std::uint32_t n);
    static InstanceDistribution point_mass(std::uint32_t n, std::uint32_t x);

    std::uint32_t n() const { return n_; }
    double weight(std::uint32_t x) const { return weights_[x]; }
    const std::vector<double>& weights() const { return weights_; }

    // One draw consumes exactly one generator output (CDF inversion).
    std::uint32_t sample(SplitRng& rng) const;

private:
    std::uint32_t n_;
    std::vector<double> weights_;
    std::vector<double> cumulative_;
};

// A candidate decision procedure as an explicit guess table.
struct Solver {
    std::uint32_t n;
    std::vector<std::uint8_t> guess_table;

    Solver(std::uint32_t n, std::vector<std::uint8_t> guesses);
    static Solver constant(std::uint32_t n, bool bit);
    bool guess(std::uint32_t x) const { return guess_table[x] != 0; }
};

struct AdvantageReport {
    double success_probability;
    double delta;  // success - 1/2
};

// Exact success probability of `solver` against `lang` under `dist`.
AdvantageReport measure_advantage(const ToyLanguage& lang, const Solver& solver,
                                  const InstanceDistribution& dist);

// Best advantage over the declared solver family: both constant solvers plus
// any caller-supplied tables. Ties go to the earliest family member.
std::pair<Solver, AdvantageReport> best_family_advantage(const ToyLanguage& lang,
                                                         const InstanceDistribution& dist,
                                                         std::span<const Solver> extra = {});

// (L(x_1), ..., L(x_k)) as a k-bit vector, position i = L(x_i).
BitVector answers(const ToyLanguage& lang, std::span<const std::uint32_t> tuple);

// k i.i.d. draws from dist.
std::vector<std::uint32_t> sample_tuple(const InstanceDistribution& dist, std::uint32_t k,
                                        SplitRng& rng);

std::uint64_t tuple_count(std::uint32_t n, std::uint32_t k);

// Visits all 2^{nk} tuples in lexicographic order (x_1 most significant).
// Requires n*k <= 24.
void for_each_tuple(std::uint32_t n, std::uint32_t k,
                    const std::function<void(std::uint64_t index,
                                             std::span<const std::uint32_t> tuple)>& fn);

// Lexicographic index of a tuple; inverse of the enumeration order.
std::uint64_t tuple_index(std::uint32_t n, std::span<const std::uint32_t> tuple);
std::vector<std::uint32_t> tuple_from_index(std::uint32_t n, std::uint32_t k, std::uint64_t index);

// Product weight of a tuple under dist.
double tuple_weight(const InstanceDistribution& dist, std::span<const std::uint32_t> tuple);

}  // namespace helpbits
