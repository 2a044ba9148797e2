#pragma once

// The set D = {x + 2 sqrt(f(x))} in GR(4,n), brute-force verification of the
// relative-difference-set parameters, and the character-sum criterion in
// exact Gaussian-integer arithmetic. No floating point in this module.

#include <cstdint>
#include <string>
#include <vector>

#include "planar2/gr4.hpp"
#include "planar2/planar.hpp"

namespace planar2 {

// Exact element of Z[omega], omega a primitive fourth root of unity.
struct GaussianInt {
    long long re = 0;
    long long im = 0;
    bool operator==(const GaussianInt&) const = default;
    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    long long norm() const { return re * re + im * im; }
};

// omega^k for k in Z4.
GaussianInt omega_pow(int k);

struct DiffSet {
    const RingCtx* ctx = nullptr;
    std::vector<RingElem> elements;  // indexed by the gamma enumeration
};

// D = {x + 2 sqrt(f_Gamma(x)) : x in Gamma}; f transported via the iso.
DiffSet build_diffset(const FuncTable& f, const RingCtx& rc);

struct RdsReport {
    bool is_rds = false;
    long long differences = 0;        // always 2^n (2^n - 1)
    long long bad_in_forbidden = 0;   // nonzero differences landing in 2R
    long long multiplicity_faults = 0;  // elements of R \ 2R hit != 1 times
};

// Materialises the full difference multiset; n <= 6.
RdsReport verify_rds(const DiffSet& d);

// S_a = sum over x in D of omega^{T(a x)}; exact.
GaussianInt char_sum(const DiffSet& d, const RingElem& a);

struct CharProfileReport {
    bool ok = false;
    std::vector<RingElem> failing_a;
    // Histogram of |S_a|^2 values over the three character classes.
    long long count_4n = 0, count_0 = 0, count_2n = 0;
};

// |S_a|^2 must be 4^n at a = 0, 0 on 2R \ {0}, 2^n on units.
CharProfileReport char_profile_check(const DiffSet& d);

enum class JacobiBranch { OddDiagonal, EvenAxis };

// For |s|^2 = 2^n: odd n forces (+-2^{(n-1)/2}, +-2^{(n-1)/2}), even n
// forces (0, +-2^{n/2}) or (+-2^{n/2}, 0).
JacobiBranch jacobi_decomposition_check(const GaussianInt& s, int n);

std::string rds_report_json(const DiffSet& d, const RdsReport& rds, const CharProfileReport& prof,
                            bool planar_oracle);

}  // namespace planar2
