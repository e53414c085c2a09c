#ifndef QUOTCOH_SWEEP_HPP
#define QUOTCOH_SWEEP_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <quotcoh/curve.hpp>

namespace quotcoh
{

struct SweepRanges {
    std::vector<std::int64_t> genera{0, 1, 2};
    std::vector<std::int64_t> e_ranks{2, 3};
    std::int64_t max_d = 4;
    std::int64_t min_line_degree = -2;
    std::int64_t max_line_degree = 6;
    CohPolicy policy{CohMode::strict};
};

struct SweepFailure {
    std::string check;
    std::string detail;
};

// Counts per check family; `skipped` counts cases where both sides refused
// with AmbiguousCohomology.
struct SweepTally {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

struct SweepReport {
    std::map<std::string, SweepTally> checks;
    std::vector<SweepFailure> failures;

    std::size_t passed() const;
    std::size_t failed() const;
    std::size_t skipped() const;
    bool all_passed() const
    {
        return failed() == 0;
    }
};

/// Machine-checks the internal coherence of the formulas over finite ranges:
///
/// - conjectural RHS with (m, l) = (0, 1) equals the Quot cohomology formula;
/// - conjectural RHS with (m, l) = (1, 1), k_1 = 1 equals the Ext formula;
/// - conjectural RHS with l = 0 and some k_i >= 1 is zero and the dual
///   vanishing verdict is Vanishes;
/// - the push-forward identity: Quot cohomology equals symmetric-product
///   cohomology of E (x) F;
/// - d-recursion of the Ext formula;
/// - every twisted formula at trivial twist equals its untwisted form.
///
/// The order of evaluation is fixed, so the report is deterministic.
SweepReport consistency_sweep(const SweepRanges &ranges = {});

} // namespace quotcoh

#endif
