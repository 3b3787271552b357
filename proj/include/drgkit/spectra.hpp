#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drgkit/rational.hpp"
#include "drgkit/types.hpp"

namespace drgkit {

// Distinct eigenvalues in descending order (theta[0] = k) with their
// multiplicities.  For strongly regular tuples theta = {k, r, s}; when the
// spectrum is integral, r_int/s_int carry the exact values.
struct Spectrum {
    std::vector<double> theta;
    std::vector<long long> multiplicities;
    bool integral = true;
    long long r_int = 0;
    long long s_int = 0;

    double r() const { return theta.size() > 1 ? theta[1] : theta.at(0); }
    double s() const { return theta.back(); }
};

// Eigenvalues r, s = ((lambda-mu) +- sqrt((lambda-mu)^2 + 4(k-mu)))/2 and the
// standard multiplicity formula.  Throws std::domain_error when the counting
// identity fails or the multiplicities are not nonnegative integers (the
// conference form, with irrational r and s and balanced multiplicities, is
// the one admissible non-integral case).
Spectrum srg_spectrum(const SrgParams& p);
std::optional<Spectrum> try_srg_spectrum(const SrgParams& p, std::string* why = nullptr);

// Eigenvalues of the (d+1)x(d+1) tridiagonal intersection matrix, descending.
// Bisection with Sturm counts on the symmetrized matrix; requires all d+1
// roots distinct beyond 1e-9.
std::vector<double> drg_eigenvalues(const IntersectionArray& a);

// Exact check that x is a root of the intersection matrix's characteristic
// polynomial, via the integer three-term determinant recurrence.
bool is_exact_drg_eigenvalue(const IntersectionArray& a, long long x);

// u_0(x), ..., u_d(x): u_0 = 1, u_1 = x/k, and
// c_i u_{i-1} + a_i u_i + b_i u_{i+1} = x u_i.
struct StandardSequence {
    bool exact = false;
    std::vector<Rational> exact_values;  // populated in exact mode
    std::vector<double> values;          // always populated
    double at = 0.0;
};

StandardSequence standard_sequence(const IntersectionArray& a, const Rational& x);
StandardSequence standard_sequence(const IntersectionArray& a, double x);

// Number of adjacent strict sign alternations.  A zero entry is an error
// (std::domain_error), never skipped or counted fractionally.
int sign_changes(const StandardSequence& seq);

// lambda + k/lambda > k/|s|, with the weaker lambda + |s| > k/|s| variant
// evaluated alongside for comparison.
struct LambdaSCheck {
    double margin = 0.0;  // lambda + k/lambda - k/|s|
    bool holds = false;
    double variant_margin = 0.0;  // lambda + |s| - k/|s|
    bool variant_holds = false;
};

// Throws std::domain_error for lambda = 0 (the bound divides by lambda) or
// s >= 0.
LambdaSCheck check_lambda_s(int k, int lambda, double s);

}  // namespace drgkit
