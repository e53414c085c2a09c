#ifndef QUOTCOH_ORACLE_HPP
#define QUOTCOH_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <quotcoh/graded_dim.hpp>

// Brute-force graded symmetric and exterior powers by monomial enumeration.
// Deliberately shares no code with the generating-series implementation in
// graded_dim.cpp; it is the reference the series code is checked against.
namespace quotcoh::oracle
{

inline constexpr std::size_t max_basis_size = 12;
inline constexpr std::int64_t max_power = 12;

struct BasisElement {
    std::string label;
    Degree degree = 0;

    friend bool operator==(const BasisElement &, const BasisElement &) = default;
};

// An explicit homogeneous basis of a graded vector space. Labels must be
// pairwise distinct (checked on construction).
class GradedBasis
{
public:
    GradedBasis() = default;
    explicit GradedBasis(std::vector<BasisElement> elements);

    // Canonical basis with labels "e<degree>_<index>".
    static GradedBasis from_dims(const GradedDim &dims);

    const std::vector<BasisElement> &elements() const noexcept
    {
        return m_elements;
    }
    std::size_t size() const noexcept
    {
        return m_elements.size();
    }

    // Number of basis elements in each degree.
    GradedDim dims() const;

private:
    std::vector<BasisElement> m_elements;
};

// Monomials of length k: multisets over even elements times square-free
// products of odd elements. Throws OracleBoundExceeded above the size guard
// and OutOfRange for k < 0.
GradedDim enumerate_sym(const GradedBasis &basis, std::int64_t k);

// Monomials of length k: square-free products of even elements times
// multisets over odd elements.
GradedDim enumerate_ext(const GradedBasis &basis, std::int64_t k);

std::string to_string(const GradedBasis &basis);

} // namespace quotcoh::oracle

#endif
