#include "helpbits/infotheory.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "helpbits/errors.hpp"
#include "helpbits/rational.hpp"

namespace helpbits {

namespace {

constexpr std::size_t kMaxTableCells = 1u << 24;

void check_probabilities(std::span<const double> p, const char* what) {
    double sum = 0.0;
    for (double x : p) {
        if (!(x >= 0.0))
            throw std::invalid_argument(std::string(what) + ": negative probability");
        sum += x;
    }
    if (std::abs(sum - 1.0) > kProbTolerance)
        throw std::invalid_argument(std::string(what) + ": probabilities sum to " +
                                    std::to_string(sum) + ", not 1");
}

double plogp_sum(std::span<const double> p) {
    double h = 0.0;
    for (double x : p)
        if (x > 0.0) h -= x * std::log2(x);
    return h;
}

}  // namespace

DiscreteDistribution DiscreteDistribution::make(std::vector<std::string> outcomes,
                                                std::vector<double> probabilities) {
    if (outcomes.size() != probabilities.size())
        throw std::invalid_argument("DiscreteDistribution: outcome/probability length mismatch");
    if (outcomes.empty()) throw std::invalid_argument("DiscreteDistribution: empty support");
    std::set<std::string_view> seen;
    for (const auto& o : outcomes)
        if (!seen.insert(o).second)
            throw std::invalid_argument("DiscreteDistribution: duplicate outcome label " + o);
    check_probabilities(probabilities, "DiscreteDistribution");
    return DiscreteDistribution{std::move(outcomes), std::move(probabilities)};
}

double entropy(const DiscreteDistribution& d) {
    check_probabilities(d.probabilities, "entropy");
    return plogp_sum(d.probabilities);
}

double min_entropy_floor(const DiscreteDistribution& d) {
    check_probabilities(d.probabilities, "min_entropy_floor");
    const double pmax = *std::max_element(d.probabilities.begin(), d.probabilities.end());
    if (pmax <= 0.0) throw std::invalid_argument("min_entropy_floor: empty distribution");
    return -std::log2(pmax);
}

JointDistribution::JointDistribution(std::vector<Variable> variables, std::vector<double> table)
    : vars_(std::move(variables)), table_(std::move(table)) {
    if (vars_.empty()) throw std::invalid_argument("JointDistribution: no variables");
    std::set<std::string_view> names;
    std::size_t cells = 1;
    for (const auto& v : vars_) {
        if (v.outcomes.empty())
            throw std::invalid_argument("JointDistribution: variable " + v.name +
                                        " has no outcomes");
        if (!names.insert(v.name).second)
            throw std::invalid_argument("JointDistribution: duplicate variable name " + v.name);
        std::set<std::string_view> labels;
        for (const auto& o : v.outcomes)
            if (!labels.insert(o).second)
                throw std::invalid_argument("JointDistribution: duplicate outcome in " + v.name);
        if (cells > kMaxTableCells / v.outcomes.size())
            throw ResourceLimitError("JointDistribution: table exceeds the 2^24 cell cap");
        cells *= v.outcomes.size();
    }
    if (table_.size() != cells)
        throw std::invalid_argument("JointDistribution: table has " +
                                    std::to_string(table_.size()) + " cells, expected " +
                                    std::to_string(cells));
    check_probabilities(table_, "JointDistribution");
    strides_.assign(vars_.size(), 1);
    for (std::size_t i = vars_.size(); i-- > 1;)
        strides_[i - 1] = strides_[i] * vars_[i].outcomes.size();
}

std::size_t JointDistribution::variable_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    throw std::invalid_argument("JointDistribution: unknown variable " + std::string(name));
}

std::vector<double> JointDistribution::marginal_table(std::span<const std::size_t> vars) const {
    std::size_t size = 1;
    for (std::size_t v : vars) {
        if (v >= vars_.size())
            throw std::invalid_argument("JointDistribution: variable index out of range");
        size *= vars_[v].outcomes.size();
    }
    std::vector<double> out(size, 0.0);
    for (std::size_t cell = 0; cell < table_.size(); ++cell) {
        if (table_[cell] == 0.0) continue;
        std::size_t key = 0;
        for (std::size_t v : vars) {
            const std::size_t digit = (cell / strides_[v]) % vars_[v].outcomes.size();
            key = key * vars_[v].outcomes.size() + digit;
        }
        out[key] += table_[cell];
    }
    return out;
}

namespace {
void require_disjoint(std::span<const std::size_t> a, std::span<const std::size_t> b,
                      const char* what) {
    for (std::size_t x : a)
        for (std::size_t y : b)
            if (x == y)
                throw std::invalid_argument(std::string(what) +
                                            ": variable sets must be disjoint");
}
std::vector<std::size_t> concat(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    std::vector<std::size_t> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}
}  // namespace

double JointDistribution::entropy_of(std::span<const std::size_t> vars) const {
    if (vars.empty()) return 0.0;
    const auto m = marginal_table(vars);
    return plogp_sum(m);
}

double JointDistribution::conditional_entropy(std::span<const std::size_t> target,
                                              std::span<const std::size_t> given) const {
    require_disjoint(target, given, "conditional_entropy");
    if (target.empty()) return 0.0;
    if (given.empty()) return entropy_of(target);
    // Marginal over (target, given) laid out with `given` as the fast block,
    // then one pass per conditioning cell: sum p(t,y) lg(p(y)/p(t,y)).
    const auto joint_vars = concat(target, given);
    const auto tg = marginal_table(joint_vars);
    std::size_t given_size = 1;
    for (std::size_t v : given) given_size *= vars_[v].outcomes.size();
    const std::size_t target_size = tg.size() / given_size;
    std::vector<double> py(given_size, 0.0);
    for (std::size_t t = 0; t < target_size; ++t)
        for (std::size_t y = 0; y < given_size; ++y) py[y] += tg[t * given_size + y];
    double h = 0.0;
    for (std::size_t t = 0; t < target_size; ++t)
        for (std::size_t y = 0; y < given_size; ++y) {
            const double p = tg[t * given_size + y];
            if (p > 0.0) h += p * std::log2(py[y] / p);
        }
    return h;
}

double JointDistribution::mutual_information(std::span<const std::size_t> a,
                                             std::span<const std::size_t> b) const {
    require_disjoint(a, b, "mutual_information");
    const auto ab = concat(a, b);
    return entropy_of(a) + entropy_of(b) - entropy_of(ab);
}

double JointDistribution::conditional_mutual_information(std::span<const std::size_t> a,
                                                         std::span<const std::size_t> b,
                                                         std::span<const std::size_t> c) const {
    require_disjoint(a, b, "conditional_mutual_information");
    require_disjoint(a, c, "conditional_mutual_information");
    require_disjoint(b, c, "conditional_mutual_information");
    const auto bc = concat(b, c);
    return conditional_entropy(a, c) - conditional_entropy(a, bc);
}

JointDistribution JointDistribution::marginal(std::span<const std::size_t> vars) const {
    std::vector<Variable> out_vars;
    for (std::size_t v : vars) {
        if (v >= vars_.size())
            throw std::invalid_argument("JointDistribution: variable index out of range");
        out_vars.push_back(vars_[v]);
    }
    return JointDistribution(std::move(out_vars), marginal_table(vars));
}

DiscreteDistribution JointDistribution::marginal_single(std::size_t var) const {
    const std::size_t idx[] = {var};
    auto m = marginal_table(idx);
    return DiscreteDistribution{vars_[var].outcomes, std::move(m)};
}

std::vector<std::size_t> JointDistribution::resolve(
    std::initializer_list<std::string_view> names) const {
    std::vector<std::size_t> out;
    for (auto n : names) out.push_back(variable_index(n));
    return out;
}

double JointDistribution::entropy_of(std::initializer_list<std::string_view> names) const {
    return entropy_of(std::span<const std::size_t>(resolve(names)));
}
double JointDistribution::conditional_entropy(std::initializer_list<std::string_view> target,
                                              std::initializer_list<std::string_view> given) const {
    return conditional_entropy(std::span<const std::size_t>(resolve(target)),
                               std::span<const std::size_t>(resolve(given)));
}
double JointDistribution::mutual_information(std::initializer_list<std::string_view> a,
                                             std::initializer_list<std::string_view> b) const {
    return mutual_information(std::span<const std::size_t>(resolve(a)),
                              std::span<const std::size_t>(resolve(b)));
}
double JointDistribution::conditional_mutual_information(
    std::initializer_list<std::string_view> a, std::initializer_list<std::string_view> b,
    std::initializer_list<std::string_view> c) const {
    return conditional_mutual_information(std::span<const std::size_t>(resolve(a)),
                                          std::span<const std::size_t>(resolve(b)),
                                          std::span<const std::size_t>(resolve(c)));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        while (!field.empty() && (field.back() == '\r' || field.back() == ' '))
            field.pop_back();
        std::size_t start = 0;
        while (start < field.size() && field[start] == ' ') ++start;
        fields.push_back(field.substr(start));
    }
    return fields;
}

double parse_probability(const std::string& text) {
    return Rational::parse(text).to_double();
}

}  // namespace

DiscreteDistribution read_distribution_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("distribution CSV: empty input");
    auto header = split_csv_line(line);
    if (header.size() != 2 || header[0] != "outcome" || header[1] != "probability")
        throw std::invalid_argument("distribution CSV: expected header `outcome,probability`");
    std::vector<std::string> outcomes;
    std::vector<double> probs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 2)
            throw std::invalid_argument("distribution CSV: malformed row: " + line);
        outcomes.push_back(fields[0]);
        probs.push_back(parse_probability(fields[1]));
    }
    return DiscreteDistribution::make(std::move(outcomes), std::move(probs));
}

JointDistribution read_joint_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("joint CSV: empty input");
    auto header = split_csv_line(line);
    if (header.size() < 2 || header.back() != "probability")
        throw std::invalid_argument("joint CSV: expected header `var1,...,varm,probability`");
    const std::size_t m = header.size() - 1;
    std::vector<Variable> vars(m);
    for (std::size_t i = 0; i < m; ++i) vars[i].name = header[i];

    std::vector<std::pair<std::vector<std::string>, double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != m + 1)
            throw std::invalid_argument("joint CSV: malformed row: " + line);
        std::vector<std::string> key(fields.begin(), fields.end() - 1);
        for (std::size_t i = 0; i < m; ++i) {
            auto& outs = vars[i].outcomes;
            if (std::find(outs.begin(), outs.end(), key[i]) == outs.end())
                outs.push_back(key[i]);
        }
        rows.emplace_back(std::move(key), parse_probability(fields.back()));
    }
    std::size_t cells = 1;
    for (const auto& v : vars) {
        if (v.outcomes.empty()) throw std::invalid_argument("joint CSV: no data rows");
        cells *= v.outcomes.size();
    }
    std::vector<double> table(cells, 0.0);
    for (const auto& [key, p] : rows) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& outs = vars[i].outcomes;
            const auto it = std::find(outs.begin(), outs.end(), key[i]);
            idx = idx * outs.size() + static_cast<std::size_t>(it - outs.begin());
        }
        if (table[idx] != 0.0)
            throw std::invalid_argument("joint CSV: duplicate row for the same outcome tuple");
        table[idx] = p;
    }
    return JointDistribution(std::move(vars), std::move(table));
}

}  // namespace helpbits
