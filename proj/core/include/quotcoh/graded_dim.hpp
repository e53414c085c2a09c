#ifndef QUOTCOH_GRADED_DIM_HPP
#define QUOTCOH_GRADED_DIM_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include <quotcoh/integer.hpp>

namespace quotcoh
{

using Degree = std::int64_t;

/// Dimensions of a finite-dimensional graded vector space, indexed by degree.
///
/// Equivalently a Laurent polynomial in q with non-negative coefficients (its
/// Poincare polynomial). Odd degrees form the odd part in the super sense, so
/// sym_power() and ext_power() apply the Koszul sign rule.
///
/// The coefficient map is kept canonical: no zero entries are ever stored, so
/// structural equality is mathematical equality.
class GradedDim
{
public:
    using map_type = std::map<Degree, Integer>;

    GradedDim() = default;
    // Throws std::invalid_argument on a negative dimension; zero entries are
    // dropped.
    GradedDim(std::initializer_list<std::pair<const Degree, Integer>> init);
    explicit GradedDim(map_type coeffs);

    // Single basis-sized block: dim copies of a degree-`degree` line.
    static GradedDim concentrated(Degree degree, const Integer &dim);

    // Dimension in the given degree (0 outside the support).
    Integer operator[](Degree degree) const;

    const map_type &coefficients() const noexcept
    {
        return m_coeffs;
    }
    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    // Precondition: !is_zero().
    Degree min_degree() const;
    Degree max_degree() const;

    GradedDim even_part() const;
    GradedDim odd_part() const;

    friend bool operator==(const GradedDim &, const GradedDim &) = default;

private:
    map_type m_coeffs;
};

enum class Evaluation { euler, total };

GradedDim direct_sum(const GradedDim &a, const GradedDim &b);
// Kunneth convolution: out[d] = sum_{i+j=d} a[i] b[j].
GradedDim tensor(const GradedDim &a, const GradedDim &b);
// out[d] = a[-d].
GradedDim dual(const GradedDim &a);
// shift(a, n)[d] = a[d + n]; the bracket [n] lowers degrees by n.
GradedDim shift(const GradedDim &a, Degree n);

// Graded symmetric power: coefficient of t^k in
//   prod_{d even} (1 - t q^d)^{-a[d]} * prod_{d odd} (1 + t q^d)^{a[d]}.
// k < 0 gives zero.
GradedDim sym_power(const GradedDim &a, std::int64_t k);
// Graded exterior power: coefficient of t^k in
//   prod_{d even} (1 + t q^d)^{a[d]} * prod_{d odd} (1 - t q^d)^{-a[d]}.
// k < 0 gives zero.
GradedDim ext_power(const GradedDim &a, std::int64_t k);

// euler: value at q = -1. total: value at q = 1.
Integer evaluate(const GradedDim &a, Evaluation at);
inline Integer euler(const GradedDim &a)
{
    return evaluate(a, Evaluation::euler);
}
inline Integer total(const GradedDim &a)
{
    return evaluate(a, Evaluation::total);
}

// The unit {0:1}.
GradedDim unit();

// "{-1:3, 2:1}" style rendering, also used by operator<<.
std::string to_string(const GradedDim &a);
std::ostream &operator<<(std::ostream &os, const GradedDim &a);

} // namespace quotcoh

#endif
