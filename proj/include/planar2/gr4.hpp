#pragma once

// Galois rings GR(4,n): Hensel-lifted modulus, Teichmuller set, the field
// (Gamma, oplus, *), the a+2b decomposition, Frobenius and the absolute
// trace to Z4.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "planar2/gf2.hpp"

namespace planar2 {

// Coefficient vector modulo the lifted modulus, residues mod 4, degree < n.
// Unused tail entries stay zero, so elements compare by value.
struct RingElem {
    std::array<uint8_t, 24> c{};
    bool operator==(const RingElem&) const = default;
};

class RingCtx {
public:
    static constexpr int kMaxDegree = 16;

    explicit RingCtx(const FieldCtx& field);

    RingCtx(const RingCtx&) = delete;
    RingCtx& operator=(const RingCtx&) = delete;

    const FieldCtx& field() const { return field_; }
    int degree() const { return n_; }
    // Monic degree-n lifted modulus; index i = coefficient of X^i, mod 4.
    const std::array<uint8_t, 25>& lifted_modulus() const { return lifted_; }

    RingElem zero() const { return RingElem{}; }
    RingElem scalar(int v) const;  // v mod 4 as a constant
    RingElem beta() const { return beta_; }

    RingElem add(const RingElem& a, const RingElem& b) const;
    RingElem sub(const RingElem& a, const RingElem& b) const;
    RingElem neg(const RingElem& a) const;
    RingElem mul(const RingElem& a, const RingElem& b) const;
    RingElem mul_scalar(const RingElem& a, int v) const;
    RingElem pow(const RingElem& a, uint64_t e) const;

    // Teichmuller set in enumeration order: 0, beta^0, beta^1, ..., beta^{2^n-2}.
    const std::vector<RingElem>& gamma() const { return gamma_; }
    bool in_gamma(const RingElem& x) const;
    // Index into the gamma() enumeration.
    std::optional<uint32_t> gamma_index(const RingElem& x) const;
    RingElem beta_pow(uint64_t e) const;

    // Unique g in Gamma with g*g = x; x^{2^{n-1}} for x != 0.
    RingElem teich_sqrt(const RingElem& x) const;
    // x + y + 2*sqrt(xy); both operands must lie in Gamma.
    RingElem oplus(const RingElem& x, const RingElem& y) const;
    // Unique (a, b) in Gamma x Gamma with y = a + 2b.
    std::pair<RingElem, RingElem> decompose(const RingElem& y) const;
    // Ring automorphism: a + 2b -> a^2 + 2b^2.
    RingElem frobenius(const RingElem& y) const;
    // Absolute trace to Z4 (Z4-linear, precomputed on the basis).
    int trace_T(const RingElem& y) const;

    // The isomorphism (Gamma, oplus, *) <-> F_{2^n}, pinned by beta -> alpha.
    Fe gamma_to_field(const RingElem& x) const;
    RingElem field_to_gamma(Fe a) const;

    uint64_t pack(const RingElem& x) const;  // 2 bits per coefficient
    std::string to_string(const RingElem& x) const;  // "c0,c1,...,c_{n-1}"
    std::string dump_json() const;

private:
    RingElem reduce_mul(const std::array<int, 49>& prod) const;

    const FieldCtx& field_;
    int n_;
    std::array<uint8_t, 25> lifted_{};
    RingElem beta_;
    std::vector<RingElem> gamma_;
    std::unordered_map<uint64_t, uint32_t> gamma_idx_;
    std::vector<uint8_t> trace_basis_;  // T(X^j) for j < n
};

}  // namespace planar2
