#pragma once

// The Z4 code C_f and its dual: parity-check construction, dual enumeration
// through the trace description, Lee weight distributions, Gray map,
// symmetrized weight enumerators with the MacWilliams transform, minimum Lee
// distance, and the binary companion code D_f.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "planar2/gr4.hpp"
#include "planar2/planar.hpp"
#include "planar2/rds.hpp"

namespace planar2 {

struct Z4Word {
    std::vector<uint8_t> e;  // entries in {0,1,2,3}
    bool operator==(const Z4Word&) const = default;
};

int lee_weight(const Z4Word& w);
// Same value via N - Re(sum omega^{entry}), in exact Gaussian integers.
int lee_weight_gaussian(const Z4Word& w);

// Entrywise 0->00, 1->01, 2->11, 3->10; Hamming weight of image = Lee weight.
std::vector<uint8_t> gray_map(const Z4Word& w);

struct WeightDistribution {
    enum class Metric { Lee, Hamming };
    Metric metric = Metric::Lee;
    std::map<long long, long long> freq;
    bool operator==(const WeightDistribution&) const = default;
};

// Row 1 all ones; row 2 entry at position x is x + 2 sqrt(f_Gamma(x)),
// columns in gamma enumeration order (x = 0 first).
struct ParityCheck {
    const RingCtx* ctx = nullptr;
    std::vector<RingElem> row2;  // length 2^n
};

ParityCheck parity_check_Cf(const FuncTable& f, const RingCtx& rc);

// Streams the 4^{n+1} dual codewords c_{a,b}(x) = T(a(x + 2 sqrt f(x))) + b.
void for_each_dual_codeword(const FuncTable& f, const RingCtx& rc,
                            const std::function<void(const RingElem& a, int b, const Z4Word&)>& fn);

// Exact Lee weight histogram of (C_f)^perp; n <= 8.
WeightDistribution dual_lee_distribution(const FuncTable& f, const RingCtx& rc);

// The closed-form planar distribution (Lee weights of the dual) for this n.
WeightDistribution planar_dual_distribution_closed_form(int n);

// Symmetrized weight enumerator: (count of 0s, count of +-1s, count of 2s).
struct SWE {
    int length = 0;
    std::map<std::tuple<int, int, int>, long long> counts;
    bool operator==(const SWE&) const = default;
};

SWE swe_of_dual(const FuncTable& f, const RingCtx& rc);
// W_C(X0,X1,X2) = |C^perp|^{-1} W_{C^perp}(X0+2X1+X2, X0-X2, X0-2X1+X2).
SWE macwilliams_transform(const SWE& dual_swe, long long dual_size);
WeightDistribution lee_distribution_from_swe(const SWE& swe);

// Generating set of ker H over Z4 with unit pivots; asserts the code is free
// of rank N-n-1. N <= 32.
std::vector<Z4Word> kernel_generator_matrix(const ParityCheck& h);
std::vector<Z4Word> enumerate_code(const std::vector<Z4Word>& gens);

// Minimum Lee weight of C_f; direct enumeration for n <= 3, the MacWilliams
// route for n = 5.
int min_lee_distance_Cf(const FuncTable& f, const RingCtx& rc);

struct GrayParams {
    int length = 0;
    long long size = 0;
    int distance = 0;
    bool operator==(const GrayParams&) const = default;
};

GrayParams gray_params(const FuncTable& f, const RingCtx& rc);
// gray(C_f) with one coordinate deleted; n = 3.
GrayParams punctured_gray_params(const FuncTable& f, const RingCtx& rc, int position = 0);

// Columns of the binary parity-check matrix for D_f: (alpha^i, f(alpha^i))
// stacked as 2n bits, i = 0 .. 2^n-2. Requires f(0) = 0.
std::vector<uint64_t> binary_Df_columns(const FuncTable& f);
int min_hamming_distance_Df(const FuncTable& f);

std::string distribution_csv(const WeightDistribution& d);
std::string distribution_json(const WeightDistribution& d, int n, const std::string& f_desc,
                              bool matches_table);

}  // namespace planar2
