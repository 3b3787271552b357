#pragma once

#include <string>
#include <vector>

namespace drgkit {

// Parameters (n, k, lambda, mu) of a sub-amply regular graph: k-regular on n
// vertices, adjacent pairs have exactly lambda common neighbors, distance-2
// pairs have at most mu.  mu_exact marks the amply regular case where every
// distance-2 pair attains mu.
struct AmpleParams {
    int n = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;
    bool mu_exact = true;

    bool operator==(const AmpleParams&) const = default;
};

// Strongly regular parameter tuple.  Nonadjacent pairs have exactly mu common
// neighbors, which pins the counting identity k(k-lambda-1) = (n-k-1)mu.
struct SrgParams {
    int n = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;

    bool identity_holds() const {
        return static_cast<long long>(k) * (k - lambda - 1) ==
               static_cast<long long>(n - k - 1) * mu;
    }
    bool operator==(const SrgParams&) const = default;
    std::string str() const;
};

// Intersection array {b_0,...,b_{d-1}; c_1,...,c_d} of a distance-regular
// graph of diameter d.
struct IntersectionArray {
    std::vector<int> b;  // b_0 .. b_{d-1}
    std::vector<int> c;  // c_1 .. c_d

    int diameter() const { return static_cast<int>(c.size()); }
    int degree() const { return b.empty() ? 0 : b.front(); }

    // a_i = k - b_i - c_i with the conventions b_d = 0, c_0 = 0.
    int a(int i) const;

    bool valid(std::string* why = nullptr) const;
    std::string str() const;

    bool operator==(const IntersectionArray&) const = default;
};

}  // namespace drgkit
