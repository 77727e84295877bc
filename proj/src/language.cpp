#include "helpbits/language.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "helpbits/errors.hpp"

namespace helpbits {

ToyLanguage::ToyLanguage(std::uint32_t n, std::vector<std::uint8_t> table,
                         std::optional<std::uint32_t> easy_count)
    : n_(n), table_(std::move(table)), easy_count_(easy_count) {
    if (n < 1 || n > kMaxInstanceBits)
        throw std::invalid_argument("ToyLanguage: n must be in [1, 20], got " + std::to_string(n));
    if (table_.size() != (std::size_t{1} << n))
        throw std::invalid_argument("ToyLanguage: table must have 2^n entries");
    for (std::uint8_t b : table_)
        if (b > 1) throw std::invalid_argument("ToyLanguage: table entries must be bits");
    if (easy_count_) {
        if (*easy_count_ > table_.size())
            throw std::invalid_argument("ToyLanguage: easy_count exceeds table size");
        for (std::uint32_t x = 0; x < *easy_count_; ++x)
            if (table_[x] != 0)
                throw std::invalid_argument("ToyLanguage: easy instances must answer 0");
    }
}

ToyLanguage ToyLanguage::random(std::uint32_t n, std::uint64_t seed,
                                std::optional<Rational> easy_fraction) {
    if (n < 1 || n > kMaxInstanceBits)
        throw std::invalid_argument("ToyLanguage: n must be in [1, 20], got " + std::to_string(n));
    const std::size_t size = std::size_t{1} << n;
    std::optional<std::uint32_t> easy_count;
    if (easy_fraction) {
        if (*easy_fraction < Rational(0, 1) || *easy_fraction > Rational(1, 1))
            throw std::invalid_argument("ToyLanguage: easy_fraction must lie in [0, 1]");
        // ceil(f * 2^n), exact
        const std::int64_t num = easy_fraction->num() * static_cast<std::int64_t>(size);
        easy_count = static_cast<std::uint32_t>((num + easy_fraction->den() - 1) /
                                                easy_fraction->den());
    }
    std::vector<std::uint8_t> table(size, 0);
    SplitRng rng(seed);
    const std::uint32_t start = easy_count ? *easy_count : 0;
    for (std::size_t x = start; x < size; ++x) table[x] = rng.next_u64() & 1u;
    return ToyLanguage(n, std::move(table), easy_count);
}

bool ToyLanguage::answer(std::uint32_t x) const {
    if (x >= table_.size())
        throw std::invalid_argument("ToyLanguage: instance " + std::to_string(x) +
                                    " out of range for n = " + std::to_string(n_));
    return table_[x] != 0;
}

Rational ToyLanguage::realized_easy_fraction() const {
    if (!easy_count_) throw std::invalid_argument("ToyLanguage: no easy set recorded");
    return Rational(*easy_count_, static_cast<std::int64_t>(table_.size()));
}

InstanceDistribution::InstanceDistribution(std::uint32_t n, std::vector<double> weights)
    : n_(n), weights_(std::move(weights)) {
    if (n < 1 || n > kMaxInstanceBits)
        throw std::invalid_argument("InstanceDistribution: n must be in [1, 20]");
    if (weights_.size() != (std::size_t{1} << n))
        throw std::invalid_argument("InstanceDistribution: weights must have 2^n entries");
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0))
            throw std::invalid_argument("InstanceDistribution: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("InstanceDistribution: weights sum to " +
                                    std::to_string(sum) + ", not 1");
    cumulative_.resize(weights_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        acc += weights_[i];
        cumulative_[i] = acc;
    }
    cumulative_.back() = 1.0;
}

InstanceDistribution InstanceDistribution::uniform(std::uint32_t n) {
    if (n < 1 || n > kMaxInstanceBits)
        throw std::invalid_argument("InstanceDistribution: n must be in [1, 20]");
    const std::size_t size = std::size_t{1} << n;
    return InstanceDistribution(n, std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

InstanceDistribution InstanceDistribution::point_mass(std::uint32_t n, std::uint32_t x) {
    const std::size_t size = std::size_t{1} << n;
    if (x >= size) throw std::invalid_argument("InstanceDistribution: point out of range");
    std::vector<double> w(size, 0.0);
    w[x] = 1.0;
    return InstanceDistribution(n, std::move(w));
}

std::uint32_t InstanceDistribution::sample(SplitRng& rng) const {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const std::size_t idx = static_cast<std::size_t>(it - cumulative_.begin());
    return static_cast<std::uint32_t>(std::min(idx, cumulative_.size() - 1));
}

Solver::Solver(std::uint32_t n, std::vector<std::uint8_t> guesses)
    : n(n), guess_table(std::move(guesses)) {
    if (n < 1 || n > kMaxInstanceBits)
        throw std::invalid_argument("Solver: n must be in [1, 20]");
    if (guess_table.size() != (std::size_t{1} << n))
        throw std::invalid_argument("Solver: guess table must have 2^n entries");
    for (std::uint8_t b : guess_table)
        if (b > 1) throw std::invalid_argument("Solver: guesses must be bits");
}

Solver Solver::constant(std::uint32_t n, bool bit) {
    return Solver(n, std::vector<std::uint8_t>(std::size_t{1} << n, bit ? 1 : 0));
}

AdvantageReport measure_advantage(const ToyLanguage& lang, const Solver& solver,
                                  const InstanceDistribution& dist) {
    if (lang.n() != solver.n || lang.n() != dist.n())
        throw std::invalid_argument("measure_advantage: n mismatch");
    double success = 0.0;
    for (std::uint32_t x = 0; x < lang.size(); ++x)
        if (solver.guess(x) == lang.answer(x)) success += dist.weight(x);
    return AdvantageReport{success, success - 0.5};
}

std::pair<Solver, AdvantageReport> best_family_advantage(const ToyLanguage& lang,
                                                         const InstanceDistribution& dist,
                                                         std::span<const Solver> extra) {
    std::vector<Solver> family;
    family.push_back(Solver::constant(lang.n(), false));
    family.push_back(Solver::constant(lang.n(), true));
    family.insert(family.end(), extra.begin(), extra.end());
    std::size_t best = 0;
    AdvantageReport best_report = measure_advantage(lang, family[0], dist);
    for (std::size_t i = 1; i < family.size(); ++i) {
        const auto report = measure_advantage(lang, family[i], dist);
        if (report.success_probability > best_report.success_probability) {
            best = i;
            best_report = report;
        }
    }
    return {family[best], best_report};
}

BitVector answers(const ToyLanguage& lang, std::span<const std::uint32_t> tuple) {
    const std::uint32_t k = static_cast<std::uint32_t>(tuple.size());
    if (k < 1 || k > kMaxBits)
        throw std::invalid_argument("answers: tuple size must be in [1, 30]");
    std::uint32_t value = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        const bool bit = lang.answer(tuple[i]);
        value |= static_cast<std::uint32_t>(bit) << (k - 1 - i);
    }
    return BitVector(k, value);
}

std::vector<std::uint32_t> sample_tuple(const InstanceDistribution& dist, std::uint32_t k,
                                        SplitRng& rng) {
    if (k < 1 || k > kMaxBits)
        throw std::invalid_argument("sample_tuple: k must be in [1, 30]");
    std::vector<std::uint32_t> tuple(k);
    for (auto& x : tuple) x = dist.sample(rng);
    return tuple;
}

std::uint64_t tuple_count(std::uint32_t n, std::uint32_t k) {
    return std::uint64_t{1} << (n * k);
}

void for_each_tuple(std::uint32_t n, std::uint32_t k,
                    const std::function<void(std::uint64_t, std::span<const std::uint32_t>)>& fn) {
    if (n * k > kMaxEnumBits)
        throw ResourceLimitError("for_each_tuple: n*k = " + std::to_string(n * k) +
                                 " exceeds the enumeration cap of 24");
    const std::uint64_t total = tuple_count(n, k);
    std::vector<std::uint32_t> tuple(k, 0);
    const std::uint32_t mask = (1u << n) - 1;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        for (std::uint32_t i = 0; i < k; ++i)
            tuple[i] = static_cast<std::uint32_t>(idx >> (n * (k - 1 - i))) & mask;
        fn(idx, tuple);
    }
}

std::uint64_t tuple_index(std::uint32_t n, std::span<const std::uint32_t> tuple) {
    std::uint64_t idx = 0;
    for (std::uint32_t x : tuple) idx = (idx << n) | x;
    return idx;
}

std::vector<std::uint32_t> tuple_from_index(std::uint32_t n, std::uint32_t k,
                                            std::uint64_t index) {
    std::vector<std::uint32_t> tuple(k);
    const std::uint32_t mask = (1u << n) - 1;
    for (std::uint32_t i = 0; i < k; ++i)
        tuple[i] = static_cast<std::uint32_t>(index >> (n * (k - 1 - i))) & mask;
    return tuple;
}

double tuple_weight(const InstanceDistribution& dist, std::span<const std::uint32_t> tuple) {
    double w = 1.0;
    for (std::uint32_t x : tuple) w *= dist.weight(x);
    return w;
}

}  // namespace helpbits
