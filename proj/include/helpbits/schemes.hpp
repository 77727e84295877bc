#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "helpbits/bitspace.hpp"
#include "helpbits/checks.hpp"
#include "helpbits/covercode.hpp"
#include "helpbits/language.hpp"
#include "helpbits/rng.hpp"

namespace helpbits {

// A help string: a flat bit string of length 0..30 (the empty string is a
// valid element). The alphabet of a scheme with maximum length ell is
// Sigma = union_{i=0..ell} {0,1}^i, of size 2^{ell+1}-1, enumerated by
// length then value: "", "0", "1", "00", "01", ...
struct HelpString {
    std::uint32_t length = 0;
    std::uint32_t value = 0;

    HelpString() = default;
    HelpString(std::uint32_t length, std::uint32_t value);
    explicit HelpString(const BitVector& v) : length(v.length()), value(v.value()) {}

    bool empty() const { return length == 0; }
    bool bit(std::uint32_t pos) const;  // pos 0 = first (most significant)
    std::string str() const;

    std::uint64_t sigma_index() const { return ((std::uint64_t{1} << length) - 1) + value; }
    static HelpString from_sigma_index(std::uint64_t index);
    static std::uint64_t sigma_size(std::uint32_t ell) {
        return (std::uint64_t{1} << (ell + 1)) - 1;
    }

    friend bool operator==(const HelpString&, const HelpString&) = default;
    friend bool operator<(const HelpString& a, const HelpString& b) {
        return a.length != b.length ? a.length < b.length : a.value < b.value;
    }
};

struct WeightedAnswer {
    BitVector answer;
    double probability;
};

struct SchemeAudit;

// A helper/solver pair. The helper maps a k-tuple of instances to a help
// string; the solver maps (tuple, help string) to a k-bit answer vector and
// is total over the whole alphabet, including help it would never be sent.
// Randomized solvers expose their exact output law per (tuple, help).
class HelpScheme {
public:
    virtual ~HelpScheme() = default;

    std::uint32_t k() const { return k_; }
    std::uint32_t ell_max() const { return ell_max_; }
    const std::string& kind() const { return kind_; }
    bool deterministic() const { return deterministic_; }
    std::uint64_t alphabet_size() const { return HelpString::sigma_size(ell_max_); }

    virtual HelpString help(std::span<const std::uint32_t> tuple) const = 0;
    virtual std::vector<WeightedAnswer> solve_law(std::span<const std::uint32_t> tuple,
                                                  const HelpString& s) const = 0;
    // Deterministic schemes only: the unique support point of the law.
    BitVector solve(std::span<const std::uint32_t> tuple, const HelpString& s) const;
    // One draw from the law; overridable for schemes with a cheaper sampler.
    virtual BitVector solve_sample(std::span<const std::uint32_t> tuple, const HelpString& s,
                                   SplitRng& rng) const;
    // Scheme-specific paper bounds evaluated against a finished audit.
    virtual void contribute_bounds(const SchemeAudit& audit, const ToyLanguage& lang,
                                   const InstanceDistribution& dist,
                                   std::vector<BoundCheck>& checks) const;

protected:
    HelpScheme(std::uint32_t k, std::uint32_t ell_max, std::string kind, bool deterministic);

    std::uint32_t k_;
    std::uint32_t ell_max_;
    std::string kind_;
    bool deterministic_;
};

// Helper sends (L(x_1), ..., L(x_ell)); the solver copies them into the first
// ell positions and fills the rest with zeros or uniform bits.
class PrefixHelpScheme : public HelpScheme {
public:
    enum class Fill { zeros, uniform };

    PrefixHelpScheme(ToyLanguage lang, std::uint32_t k, std::uint32_t ell,
                     Fill fill = Fill::zeros);

    HelpString help(std::span<const std::uint32_t> tuple) const override;
    std::vector<WeightedAnswer> solve_law(std::span<const std::uint32_t> tuple,
                                          const HelpString& s) const override;
    void contribute_bounds(const SchemeAudit& audit, const ToyLanguage& lang,
                           const InstanceDistribution& dist,
                           std::vector<BoundCheck>& checks) const override;

private:
    ToyLanguage lang_;
    Fill fill_;
};

// Helper sends the covering-code index of the true answer tuple; the solver
// outputs the decoded codeword, which is within radius of the truth on every
// tuple.
class DistortionHelpScheme : public HelpScheme {
public:
    DistortionHelpScheme(ToyLanguage lang, CoveringCode code, std::uint32_t k);

    HelpString help(std::span<const std::uint32_t> tuple) const override;
    std::vector<WeightedAnswer> solve_law(std::span<const std::uint32_t> tuple,
                                          const HelpString& s) const override;
    void contribute_bounds(const SchemeAudit& audit, const ToyLanguage& lang,
                           const InstanceDistribution& dist,
                           std::vector<BoundCheck>& checks) const override;

    const CoveringCode& code() const { return code_; }

private:
    ToyLanguage lang_;
    CoveringCode code_;
};

// Helper sends (L(x_i) XOR C(x_i))_i; the solver XORs the help onto its base
// solver's guesses and is exactly correct on every tuple.
class XorHelpScheme : public HelpScheme {
public:
    XorHelpScheme(ToyLanguage lang, Solver solver, std::uint32_t k);

    HelpString help(std::span<const std::uint32_t> tuple) const override;
    std::vector<WeightedAnswer> solve_law(std::span<const std::uint32_t> tuple,
                                          const HelpString& s) const override;
    void contribute_bounds(const SchemeAudit& audit, const ToyLanguage& lang,
                           const InstanceDistribution& dist,
                           std::vector<BoundCheck>& checks) const override;

    const Solver& base_solver() const { return solver_; }

private:
    ToyLanguage lang_;
    Solver solver_;
};

// Helper sends the answers of the non-easy instances, concatenated in tuple
// order; easy instances contribute nothing. The solver answers 0 for easy
// instances (their answers are 0 by construction) and reads the rest off the
// help string, which it can parse because easiness is checkable.
class EasyFractionHelpScheme : public HelpScheme {
public:
    EasyFractionHelpScheme(ToyLanguage lang, std::uint32_t k);

    HelpString help(std::span<const std::uint32_t> tuple) const override;
    std::vector<WeightedAnswer> solve_law(std::span<const std::uint32_t> tuple,
                                          const HelpString& s) const override;
    void contribute_bounds(const SchemeAudit& audit, const ToyLanguage& lang,
                           const InstanceDistribution& dist,
                           std::vector<BoundCheck>& checks) const override;

private:
    ToyLanguage lang_;
};

// Length normalization: if any tuple's inner help reaches length k, every
// such tuple gets the k-bit truth as help instead, and the solver outputs any
// length-k help verbatim. When no tuple reaches length k the wrapper is the
// identity. Construction scans all tuples (n*k <= 24).
class TruncatedHelpScheme : public HelpScheme {
public:
    TruncatedHelpScheme(std::shared_ptr<const HelpScheme> inner, ToyLanguage lang);

    HelpString help(std::span<const std::uint32_t> tuple) const override;
    std::vector<WeightedAnswer> solve_law(std::span<const std::uint32_t> tuple,
                                          const HelpString& s) const override;

    bool converting() const { return converting_; }

private:
    std::shared_ptr<const HelpScheme> inner_;
    ToyLanguage lang_;
    bool converting_ = false;
};

// Synthetic randomized scheme with known ground truth: on the true help
// string the solver lands within `radius` of `truth` with probability
// exactly p (uniform over the ball) and outside it otherwise; on any other
// help string the output is uniform over the cube. Used as a test oracle.
class PlantedScheme : public HelpScheme {
public:
    PlantedScheme(std::uint32_t k, std::uint32_t ell, std::uint32_t radius, double p,
                  BitVector truth, HelpString true_help);

    HelpString help(std::span<const std::uint32_t> tuple) const override;
    std::vector<WeightedAnswer> solve_law(std::span<const std::uint32_t> tuple,
                                          const HelpString& s) const override;
    BitVector solve_sample(std::span<const std::uint32_t> tuple, const HelpString& s,
                           SplitRng& rng) const override;

    const BitVector& truth() const { return truth_; }
    const HelpString& true_help() const { return true_help_; }

private:
    std::uint32_t radius_;
    double p_;
    BitVector truth_;
    HelpString true_help_;
    std::vector<std::uint32_t> within_;  // XOR masks with popcount <= radius
    std::vector<std::uint32_t> beyond_;  // the rest
};

// Fully explicit deterministic scheme: one help string per tuple plus an
// arbitrary total solver function. For tests and ad-hoc experiments.
class TableScheme : public HelpScheme {
public:
    using SolverFn =
        std::function<BitVector(std::span<const std::uint32_t>, const HelpString&)>;

    TableScheme(std::uint32_t n, std::uint32_t k, std::vector<HelpString> helps,
                SolverFn solver, std::string kind = "custom");

    HelpString help(std::span<const std::uint32_t> tuple) const override;
    std::vector<WeightedAnswer> solve_law(std::span<const std::uint32_t> tuple,
                                          const HelpString& s) const override;

private:
    std::uint32_t n_;
    std::vector<HelpString> helps_;
    SolverFn solver_;
};

// Exact brute-force measurements of a scheme against a language and an i.i.d.
// instance distribution, with the paper bounds it is checked against.
struct SchemeAudit {
    double entropy_S = 0.0;
    double expected_length = 0.0;
    double mutual_info_XS = 0.0;
    double success_probability = 0.0;
    double distortion_rate = 0.0;   // expected fraction of wrong positions
    double max_distortion = 0.0;    // worst-case fraction over tuples and law support
    std::uint32_t max_length = 0;   // longest help string over tuples
    std::map<HelpString, double> help_law;
    std::vector<BoundCheck> bound_checks;
    // Set only by sampled audits: plug-in estimates with standard errors.
    bool sampled = false;
    std::uint64_t sample_count = 0;
    double success_stderr = 0.0;
    double length_stderr = 0.0;
};

// Exhaustive audit over all 2^{nk} tuples weighted by the product
// distribution; requires n*k <= 24.
SchemeAudit audit_scheme(const HelpScheme& scheme, const ToyLanguage& lang,
                         const InstanceDistribution& dist);

// Monte Carlo audit for budgets the exact path cannot cover. Estimates carry
// standard errors; bound checks are reported but never asserted.
SchemeAudit audit_scheme_sampled(const HelpScheme& scheme, const ToyLanguage& lang,
                                 const InstanceDistribution& dist, std::uint64_t trials,
                                 SplitRng& rng);

// The length/entropy chain H(S) <= lg(k+1) + E[M]; valid when max length <= k.
BoundCheck length_entropy_bound(const SchemeAudit& audit, std::uint32_t k);

}  // namespace helpbits
