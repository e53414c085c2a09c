#include <quotcoh/oracle.hpp>

#include <set>
#include <sstream>
#include <stdexcept>

#include <quotcoh/errors.hpp>

namespace quotcoh::oracle
{

namespace
{

void check_bounds(const GradedBasis &basis, std::int64_t k)
{
    if (k < 0) {
        throw OutOfRange("oracle power must be non-negative, got " + std::to_string(k));
    }
    if (basis.size() > max_basis_size || k > max_power) {
        throw OracleBoundExceeded("oracle enumeration limited to " + std::to_string(max_basis_size)
                                  + " basis elements and power " + std::to_string(max_power));
    }
}

// Walks the basis in order, choosing an exponent for each element. Exponents
// of "free" elements range over 0..remaining, the others over {0, 1}.
// `free_when_odd` is false for symmetric powers (even elements are free) and
// true for exterior powers (odd elements are free).
class MonomialCounter
{
public:
    MonomialCounter(const GradedBasis &basis, bool free_when_odd)
        : m_elements(basis.elements()), m_free_when_odd(free_when_odd)
    {
    }

    GradedDim count(std::int64_t length)
    {
        m_counts.clear();
        visit(0, length, 0);
        return GradedDim(m_counts);
    }

private:
    void visit(std::size_t index, std::int64_t remaining, Degree degree)
    {
        if (remaining == 0) {
            m_counts[degree] += 1;
            return;
        }
        if (index == m_elements.size()) {
            return;
        }
        const auto &element = m_elements[index];
        const bool odd = element.degree % 2 != 0;
        const std::int64_t max_exponent = (odd == m_free_when_odd) ? remaining : 1;
        for (std::int64_t e = 0; e <= max_exponent && e <= remaining; ++e) {
            visit(index + 1, remaining - e, degree + e * element.degree);
        }
    }

    const std::vector<BasisElement> &m_elements;
    bool m_free_when_odd;
    GradedDim::map_type m_counts;
};

} // namespace

GradedBasis::GradedBasis(std::vector<BasisElement> elements) : m_elements(std::move(elements))
{
    std::set<std::string> seen;
    for (const auto &e : m_elements) {
        if (!seen.insert(e.label).second) {
            throw std::invalid_argument("duplicate basis label '" + e.label + "'");
        }
    }
}

GradedBasis GradedBasis::from_dims(const GradedDim &dims)
{
    std::vector<BasisElement> out;
    for (const auto &[d, n] : dims.coefficients()) {
        if (n > Integer(max_basis_size)) {
            throw OracleBoundExceeded("graded dimension too large for an explicit basis");
        }
        const auto count = n.convert_to<std::int64_t>();
        for (std::int64_t i = 0; i < count; ++i) {
            out.push_back({"e" + std::to_string(d) + "_" + std::to_string(i), d});
        }
    }
    return GradedBasis(std::move(out));
}

GradedDim GradedBasis::dims() const
{
    GradedDim::map_type out;
    for (const auto &e : m_elements) {
        out[e.degree] += 1;
    }
    return GradedDim(std::move(out));
}

GradedDim enumerate_sym(const GradedBasis &basis, std::int64_t k)
{
    check_bounds(basis, k);
    return MonomialCounter(basis, false).count(k);
}

GradedDim enumerate_ext(const GradedBasis &basis, std::int64_t k)
{
    check_bounds(basis, k);
    return MonomialCounter(basis, true).count(k);
}

std::string to_string(const GradedBasis &basis)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i != 0) {
            os << ", ";
        }
        os << '(' << basis.elements()[i].label << ',' << basis.elements()[i].degree << ')';
    }
    os << ']';
    return os.str();
}

} // namespace quotcoh::oracle
