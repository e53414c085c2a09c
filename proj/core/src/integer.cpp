#include <quotcoh/integer.hpp>

#include <limits>
#include <stdexcept>

namespace quotcoh
{

Integer falling_factorial(const Integer &x, std::int64_t k)
{
    Integer out = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        out *= x - i;
    }
    return out;
}

Integer factorial(std::int64_t n)
{
    if (n < 0) {
        throw std::domain_error("factorial of a negative number");
    }
    Integer out = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

Integer binomial(const Integer &x, std::int64_t k)
{
    if (k < 0) {
        return 0;
    }
    // Multiplicative form keeps every intermediate quotient exact:
    // C(x, i+1) = C(x, i) * (x - i) / (i + 1).
    Integer out = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        out *= x - i;
        out /= i + 1;
    }
    return out;
}

std::int64_t to_int64(const Integer &x)
{
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("integer does not fit into 64 bits: " + x.str());
    }
    return x.convert_to<std::int64_t>();
}

std::string to_string(const Integer &x)
{
    return x.str();
}

} // namespace quotcoh
