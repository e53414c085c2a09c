#include <quotcoh/graded_dim.hpp>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace quotcoh
{

namespace
{

bool is_odd(Degree d)
{
    return d % 2 != 0;
}

void add_into(GradedDim::map_type &acc, Degree d, const Integer &v)
{
    if (v == 0) {
        return;
    }
    auto [it, inserted] = acc.try_emplace(d, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) {
            acc.erase(it);
        }
    }
}

// Truncated power series in t whose coefficients are graded dimensions.
using Series = std::vector<GradedDim::map_type>;

// Multiply `series` in place by sum_j coeff(j) t^j q^{j*deg}, truncating
// above t^{series.size()-1}.
template <typename Coeff>
void multiply_by_factor(Series &series, Degree deg, Coeff coeff_of)
{
    const auto order = static_cast<std::int64_t>(series.size());
    std::vector<Integer> coeffs;
    coeffs.reserve(series.size());
    for (std::int64_t j = 0; j < order; ++j) {
        coeffs.push_back(coeff_of(j));
    }
    Series out(series.size());
    for (std::int64_t i = 0; i < order; ++i) {
        for (const auto &[d, v] : series[static_cast<std::size_t>(i)]) {
            for (std::int64_t j = 0; i + j < order; ++j) {
                const Integer &c = coeffs[static_cast<std::size_t>(j)];
                if (c == 0) {
                    continue;
                }
                add_into(out[static_cast<std::size_t>(i + j)], d + j * deg, v * c);
            }
        }
    }
    series = std::move(out);
}

// One graded factor per degree. `symmetric_on_even` selects S^k (true) or
// wedge^k (false); odd degrees always take the opposite rule.
GradedDim graded_power(const GradedDim &a, std::int64_t k, bool symmetric_on_even)
{
    if (k < 0) {
        return {};
    }
    Series series(static_cast<std::size_t>(k + 1));
    series[0].emplace(0, 1);
    for (const auto &[deg, n] : a.coefficients()) {
        const bool symmetric = is_odd(deg) ? !symmetric_on_even : symmetric_on_even;
        if (symmetric) {
            // (1 - t q^deg)^{-n} = sum_j C(n+j-1, j) t^j q^{j deg}
            multiply_by_factor(series, deg, [&n](std::int64_t j) { return binomial(n + j - 1, j); });
        } else {
            // (1 + t q^deg)^{n} = sum_j C(n, j) t^j q^{j deg}
            multiply_by_factor(series, deg, [&n](std::int64_t j) { return binomial(n, j); });
        }
    }
    return GradedDim(std::move(series.back()));
}

} // namespace

GradedDim::GradedDim(std::initializer_list<std::pair<const Degree, Integer>> init)
    : GradedDim(map_type(init))
{
}

GradedDim::GradedDim(map_type coeffs)
{
    for (auto &[d, v] : coeffs) {
        if (v < 0) {
            throw std::invalid_argument("negative dimension " + v.str() + " in degree " + std::to_string(d));
        }
        if (v != 0) {
            m_coeffs.emplace(d, std::move(v));
        }
    }
}

GradedDim GradedDim::concentrated(Degree degree, const Integer &dim)
{
    return GradedDim(map_type{{degree, dim}});
}

Integer GradedDim::operator[](Degree degree) const
{
    const auto it = m_coeffs.find(degree);
    return it == m_coeffs.end() ? Integer(0) : it->second;
}

Degree GradedDim::min_degree() const
{
    if (m_coeffs.empty()) {
        throw std::logic_error("min_degree of the zero graded space");
    }
    return m_coeffs.begin()->first;
}

Degree GradedDim::max_degree() const
{
    if (m_coeffs.empty()) {
        throw std::logic_error("max_degree of the zero graded space");
    }
    return m_coeffs.rbegin()->first;
}

GradedDim GradedDim::even_part() const
{
    map_type out;
    for (const auto &[d, v] : m_coeffs) {
        if (!is_odd(d)) {
            out.emplace(d, v);
        }
    }
    return GradedDim(std::move(out));
}

GradedDim GradedDim::odd_part() const
{
    map_type out;
    for (const auto &[d, v] : m_coeffs) {
        if (is_odd(d)) {
            out.emplace(d, v);
        }
    }
    return GradedDim(std::move(out));
}

GradedDim direct_sum(const GradedDim &a, const GradedDim &b)
{
    auto out = a.coefficients();
    for (const auto &[d, v] : b.coefficients()) {
        add_into(out, d, v);
    }
    return GradedDim(std::move(out));
}

GradedDim tensor(const GradedDim &a, const GradedDim &b)
{
    GradedDim::map_type out;
    for (const auto &[i, x] : a.coefficients()) {
        for (const auto &[j, y] : b.coefficients()) {
            add_into(out, i + j, x * y);
        }
    }
    return GradedDim(std::move(out));
}

GradedDim dual(const GradedDim &a)
{
    GradedDim::map_type out;
    for (const auto &[d, v] : a.coefficients()) {
        out.emplace(-d, v);
    }
    return GradedDim(std::move(out));
}

GradedDim shift(const GradedDim &a, Degree n)
{
    GradedDim::map_type out;
    for (const auto &[d, v] : a.coefficients()) {
        out.emplace(d - n, v);
    }
    return GradedDim(std::move(out));
}

GradedDim sym_power(const GradedDim &a, std::int64_t k)
{
    return graded_power(a, k, true);
}

GradedDim ext_power(const GradedDim &a, std::int64_t k)
{
    return graded_power(a, k, false);
}

Integer evaluate(const GradedDim &a, Evaluation at)
{
    Integer out = 0;
    for (const auto &[d, v] : a.coefficients()) {
        if (at == Evaluation::euler && is_odd(d)) {
            out -= v;
        } else {
            out += v;
        }
    }
    return out;
}

GradedDim unit()
{
    return GradedDim::concentrated(0, 1);
}

std::string to_string(const GradedDim &a)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto &[d, v] : a.coefficients()) {
        if (!first) {
            os << ", ";
        }
        first = false;
        os << d << ':' << v;
    }
    os << '}';
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const GradedDim &a)
{
    return os << to_string(a);
}

} // namespace quotcoh
