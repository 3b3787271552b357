#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "drgkit/bounds.hpp"
#include "drgkit/spectra.hpp"
#include "drgkit/types.hpp"

namespace drgkit {

struct FeasibleRecord {
    SrgParams params;
    Spectrum spectrum;
    bool satisfies_main = false;
    Classification classification;
    std::string source;  // "enumerated" or "table"
    std::string status;  // table status column, verbatim
};

// (lambda+1)^2 > (3k + lambda + 1)(mu - 1), exact integer arithmetic.
bool satisfies_main(const SrgParams& p);

// Optional strengthenings beyond the core identity + multiplicity filter.
struct FeasibilityFilters {
    bool krein = false;
    bool absolute = false;

    std::vector<std::string> active_names() const;
};

bool krein_conditions_hold(const SrgParams& p, const Spectrum& spec);
bool absolute_bound_holds(const SrgParams& p, const Spectrum& spec);

// All tuples with 1 <= k <= n-2, 0 <= lambda <= k-1, 1 <= mu <= k passing the
// counting identity and carrying nonnegative integral (or conference-
// balanced) multiplicities, ascending in (n, k, lambda, mu).  The n range is
// chunked across threads; output order is scheduling-independent.
std::vector<FeasibleRecord> enumerate_feasible(int n_max, FeasibilityFilters filters = {});

// CSV rows n,k,lambda,mu[,status]; optional header; '#' comments.  Rows that
// are malformed or fail the counting identity (or multiplicity integrality)
// are rejected with their line numbers.
struct TableLoad {
    std::vector<FeasibleRecord> records;
    struct Reject {
        int line;
        std::string reason;
    };
    std::vector<Reject> rejected;
};
TableLoad load_table(std::istream& in);

// The parameter-space scan: which feasible tuples satisfy the main
// inequality, partitioned by classification.  min_unmatched_n is the
// smallest vertex count among satisfiers with mu >= 2 matching no geometric
// family closed form.
struct ScanReport {
    int n_max = 0;
    std::vector<std::string> filters_active;
    long long total_feasible = 0;
    long long main_satisfier_count = 0;
    std::vector<FeasibleRecord> trivially_satisfying;  // mu <= 1
    std::vector<FeasibleRecord> matched;               // geometric family match
    std::vector<FeasibleRecord> unmatched;
    std::optional<int> min_unmatched_n;
};

// n_max above 5000 needs allow_large (performance guard).  When a table is
// supplied, enumeration is intersected with it on the parameter tuple.
ScanReport scan_main(int n_max, const std::vector<FeasibleRecord>* table = nullptr,
                     FeasibilityFilters filters = {}, bool allow_large = false);

}  // namespace drgkit
