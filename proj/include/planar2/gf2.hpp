#pragma once

// Arithmetic in binary fields F_{2^n} with a fixed modulus per degree.
// Elements are n-bit coefficient vectors packed into a uint32_t, least
// significant bit = constant term. Elements print as lowercase hex.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "planar2/errors.hpp"

namespace planar2 {

using Fe = uint32_t;  // field element, reduced modulo the ctx modulus

class FieldCtx {
public:
    static constexpr int kMaxDegree = 24;
    static constexpr int kLogTableMaxDegree = 20;

    // Modulus from the built-in table (see docs/moduli.txt).
    explicit FieldCtx(int n);
    // Explicit modulus, for testing. Bit pattern includes the degree-n term.
    FieldCtx(int n, uint32_t modulus);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    int degree() const { return n_; }
    uint32_t modulus() const { return modulus_; }
    Fe alpha() const { return alpha_; }
    uint32_t order() const { return (1u << n_) - 1; }  // |F_{2^n}^*|
    uint32_t size() const { return 1u << n_; }

    Fe add(Fe a, Fe b) const { return a ^ b; }
    Fe mul(Fe a, Fe b) const;
    Fe sqr(Fe a) const { return mul(a, a); }
    Fe inv(Fe a) const;
    // Reduces e mod 2^n-1 for a != 0; negative exponents allowed for a != 0.
    Fe pow(Fe a, int64_t e) const;

    // Discrete log base alpha; a != 0.
    uint32_t log(Fe a) const;
    // alpha^e
    Fe exp(uint64_t e) const;

    // Absolute trace of the subfield F_{2^m} evaluated at a; requires m | n
    // and a in the subfield. Returns 0 or 1.
    int trace_abs(Fe a, int m) const;
    bool in_subfield(Fe a, int m) const;
    std::vector<Fe> subfield_elements(int m) const;

    static std::string to_hex(Fe a);
    static Fe parse_hex(const std::string& s);

    // The shipped modulus table, n = 1..24, as (n, modulus) pairs.
    static const std::vector<std::pair<int, uint32_t>>& modulus_table();
    // Canonical text of the table ("n=<n> modulus=0x<hex>" lines).
    static std::string modulus_table_text();
    static uint64_t modulus_table_checksum();

private:
    void init();

    int n_;
    uint32_t modulus_;
    Fe alpha_ = 0;
    bool have_tables_ = false;
    std::vector<uint32_t> log_;  // indexed by element, log_[0] unused
    std::vector<Fe> exp_;        // size 2*(2^n-1), doubled to skip one reduction
};

// C(m, k) mod 2 via Lucas: odd iff (k & m) == k.
int binomial_parity(uint64_t m, uint64_t k);

// FNV-1a, used for result digests and the moduli table checksum.
uint64_t fnv1a(const void* data, size_t len, uint64_t seed = 1469598103934665603ull);
uint64_t fnv1a(const std::string& s, uint64_t seed = 1469598103934665603ull);

}  // namespace planar2
