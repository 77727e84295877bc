#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace helpbits {

// Tolerance for distribution validity and for all floating-point identity
// checks in this module.
inline constexpr double kProbTolerance = 1e-9;

// A finite distribution over opaque labels.
struct DiscreteDistribution {
    std::vector<std::string> outcomes;
    std::vector<double> probabilities;

    // Validates: matching lengths, distinct labels, p >= 0, sum within 1e-9 of 1.
    static DiscreteDistribution make(std::vector<std::string> outcomes,
                                     std::vector<double> probabilities);
};

// H(d) in bits with the convention 0 lg 1/0 = 0.
double entropy(const DiscreteDistribution& d);

// lg 1/max_x p(x); always <= entropy(d).
double min_entropy_floor(const DiscreteDistribution& d);

struct Variable {
    std::string name;
    std::vector<std::string> outcomes;
};

// Dense joint law over a small set of named finite variables. The table is
// row-major with the last variable fastest; total cells are capped at 2^24.
class JointDistribution {
public:
    JointDistribution(std::vector<Variable> variables, std::vector<double> table);

    const std::vector<Variable>& variables() const { return vars_; }
    std::size_t variable_index(std::string_view name) const;
    const std::vector<double>& table() const { return table_; }

    // H(A) for a set A of variable indices.
    double entropy_of(std::span<const std::size_t> vars) const;
    // H(target | given) = sum_y p(y) H(target | given = y). Sets must be disjoint.
    double conditional_entropy(std::span<const std::size_t> target,
                               std::span<const std::size_t> given) const;
    // I(A;B) = H(A) + H(B) - H(A,B). Sets must be disjoint.
    double mutual_information(std::span<const std::size_t> a,
                              std::span<const std::size_t> b) const;
    // I(A;B|C) = H(A|C) - H(A|B,C). Sets must be pairwise disjoint.
    double conditional_mutual_information(std::span<const std::size_t> a,
                                          std::span<const std::size_t> b,
                                          std::span<const std::size_t> c) const;

    // Marginal law over a subset of variables, in the given order.
    JointDistribution marginal(std::span<const std::size_t> vars) const;
    // Single-variable marginal as a plain distribution.
    DiscreteDistribution marginal_single(std::size_t var) const;

    // Name-based conveniences.
    double entropy_of(std::initializer_list<std::string_view> names) const;
    double conditional_entropy(std::initializer_list<std::string_view> target,
                               std::initializer_list<std::string_view> given) const;
    double mutual_information(std::initializer_list<std::string_view> a,
                              std::initializer_list<std::string_view> b) const;
    double conditional_mutual_information(std::initializer_list<std::string_view> a,
                                          std::initializer_list<std::string_view> b,
                                          std::initializer_list<std::string_view> c) const;

private:
    std::vector<std::size_t> resolve(std::initializer_list<std::string_view> names) const;
    // Dense marginal table over `vars` plus the key stride layout.
    std::vector<double> marginal_table(std::span<const std::size_t> vars) const;

    std::vector<Variable> vars_;
    std::vector<std::size_t> strides_;
    std::vector<double> table_;
};

// CSV with header `outcome,probability`; probabilities are decimals or "p/q".
DiscreteDistribution read_distribution_csv(std::istream& in);
// CSV with header `var1,...,varm,probability`. Outcome sets are collected in
// order of first appearance; missing rows default to probability 0.
JointDistribution read_joint_csv(std::istream& in);

}  // namespace helpbits
