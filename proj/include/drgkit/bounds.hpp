#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drgkit/spectra.hpp"
#include "drgkit/types.hpp"

namespace drgkit {

// One named inequality: echoed inputs, the bound, the observed value, the
// verdict in the inequality's natural direction, and the margin
// (bound - observed).
struct BoundEntry {
    std::string name;
    bool verdict = false;
    double bound = 0.0;
    double observed = 0.0;
    double margin = 0.0;
    std::string tag;  // active proof case / table piece / branch
    std::vector<std::pair<std::string, double>> inputs;
    bool applicable = true;
    std::string note;
};

// lambda + 1 < max{4 sqrt(2n), (6/(sqrt(13)-1)) sqrt(k(mu-1))}, verdict by
// exact integer arithmetic, with the active proof-case tag.  Disjoint-clique
// parameters (lambda = k-1) are rejected with std::domain_error.
BoundEntry lambda_bound(const AmpleParams& p);

// Exact verdict used by lambda_bound, exposed for batch scans.
bool lambda_bound_verdict_exact(long long n, long long k, long long lambda, long long mu);

// Proof-case replay: 1 when eq_main holds, 2 for mu-1 >= delta(lambda+1),
// 3 otherwise (delta = (sqrt(13)-1)/6; decisions are exact).
int lambda_bound_case(long long k, long long lambda, long long mu);

// ell <= (R / sqrt(r(r-1))) sqrt(n) for a clique hypergraph where every
// vertex lies in at least r >= 2 and at most R cliques of order >= ell.
BoundEntry hypergraph_bound(long long n, int r_min, int r_max, int ell);

// r <= max{2(-s-1)(mu+1+s) + s, s(s+1)(mu+1)/2 - 1}.
BoundEntry claw_bound(const Spectrum& spec, int mu);

// (a) r < k^{2/3}(mu+1)^{1/3}; (b) lambda < k^{2/3}(mu+1)^{1/3}.
std::pair<BoundEntry, BoundEntry> spielman_bounds(const SrgParams& p, const Spectrum& spec);

// (a) r < n^{1/4}k^{1/2}; (b) lambda < n^{1/4}k^{1/2} + mu.  Trivial
// parameter tuples are rejected with std::domain_error.
std::pair<BoundEntry, BoundEntry> pyber_bounds(const SrgParams& p, const Spectrum& spec);

// r < max{4 sqrt(2n), (6/(sqrt(13)-1)) sqrt(k(mu-1))} + sqrt(k).
BoundEntry r_bound(const SrgParams& p, const Spectrum& spec);

// Piecewise envelopes for r/n and lambda/n over the degree range.  Computed
// in exponent space, so power-of-two boundary inputs evaluate exactly equal
// across adjacent pieces.
struct EnvelopeValue {
    double value = 0.0;
    double exponent = 0.0;  // log2(value)
    std::string piece;      // active table row formula
    std::string convention;  // "k<=(n-1)/2" or "out-of-convention"
};
EnvelopeValue g_func(long long n, long long k);
EnvelopeValue h_func(long long n, long long k);

// Godsil's two hypotheses: no m-claws for m > |s| (claw_free_from is the
// smallest m with no m-claw, when known) and lambda + 1 > (2|s|-1)(mu-1).
BoundEntry godsil_condition(const AmpleParams& p, double s, std::optional<int> claw_free_from);

// lambda > floor(s)^2 mu.
BoundEntry bang_koolen_condition(const AmpleParams& p, double s);

// Parameter-level Neumaier type: trivial, conference, geometric family
// match, claw-bound regime, or unclassified.  All matches are collected;
// the tag takes the highest-priority one.
struct Classification {
    std::string tag;
    std::string detail;
    std::vector<std::string> all_matches;
};
Classification classify(const SrgParams& p, const Spectrum& spec);

// sqrt(13) scaled by 2^56, computed by integer Newton iteration; the basis
// for the delta = (sqrt(13)-1)/6 constant at well beyond double precision.
long long sqrt13_q56();

}  // namespace drgkit
