#include "planar2/rds.hpp"

#include <sstream>
#include <unordered_map>

namespace planar2 {

GaussianInt omega_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

DiffSet build_diffset(const FuncTable& f, const RingCtx& rc) {
    require(f.ctx == &rc.field(), "function table field does not match the ring context");
    DiffSet d;
    d.ctx = &rc;
    d.elements.reserve(rc.gamma().size());
    for (const RingElem& x : rc.gamma()) {
        Fe fx = f(rc.gamma_to_field(x));
        RingElem root = rc.teich_sqrt(rc.field_to_gamma(fx));
        d.elements.push_back(rc.add(x, rc.mul_scalar(root, 2)));
    }
    return d;
}

RdsReport verify_rds(const DiffSet& d) {
    const RingCtx& rc = *d.ctx;
    guard(rc.degree() <= 6, "verify_rds materialises the difference multiset; n <= 6");
    RdsReport rep;
    std::unordered_map<uint64_t, long long> multiset;
    for (size_t i = 0; i < d.elements.size(); ++i) {
        for (size_t j = 0; j < d.elements.size(); ++j) {
            if (i == j) continue;
            ++multiset[rc.pack(rc.sub(d.elements[i], d.elements[j]))];
            ++rep.differences;
        }
    }
    // Forbidden subgroup 2R: elements with all coefficients even.
    auto in_2r = [&](uint64_t key) {
        for (int i = 0; i < rc.degree(); ++i) {
            if ((key >> (2 * i)) & 1) return false;
        }
        return true;
    };
    for (auto& [key, count] : multiset) {
        if (in_2r(key)) rep.bad_in_forbidden += count;
        else if (count != 1) ++rep.multiplicity_faults;
    }
    // Each of the 4^n - 2^n elements outside 2R exactly once, none inside.
    long long outside = ((long long)1 << (2 * rc.degree())) - ((long long)1 << rc.degree());
    long long covered = 0;
    for (auto& [key, count] : multiset) {
        if (!in_2r(key) && count == 1) ++covered;
    }
    rep.is_rds = rep.bad_in_forbidden == 0 && rep.multiplicity_faults == 0 && covered == outside;
    return rep;
}

GaussianInt char_sum(const DiffSet& d, const RingElem& a) {
    const RingCtx& rc = *d.ctx;
    GaussianInt s;
    for (const RingElem& x : d.elements) s = s + omega_pow(rc.trace_T(rc.mul(a, x)));
    return s;
}

CharProfileReport char_profile_check(const DiffSet& d) {
    const RingCtx& rc = *d.ctx;
    int n = rc.degree();
    long long q = (long long)1 << n;
    CharProfileReport rep;
    rep.ok = true;
    // Enumerate a in R_n by coefficient vectors.
    RingElem a{};
    auto advance = [&]() {
        for (int i = 0; i < n; ++i) {
            a.c[i] = (uint8_t)((a.c[i] + 1) & 3);
            if (a.c[i] != 0) return true;
        }
        return false;
    };
    while (true) {
        long long nsq = char_sum(d, a).norm();
        bool zero = true, in2r = true;
        for (int i = 0; i < n; ++i) {
            if (a.c[i] != 0) zero = false;
            if (a.c[i] & 1) in2r = false;
        }
        long long expect = zero ? q * q : (in2r ? 0 : q);
        if (zero) ++rep.count_4n;
        else if (in2r) ++rep.count_0;
        else ++rep.count_2n;
        if (nsq != expect) {
            rep.ok = false;
            if (rep.failing_a.size() < 16) rep.failing_a.push_back(a);
        }
        if (!advance()) break;
    }
    return rep;
}

JacobiBranch jacobi_decomposition_check(const GaussianInt& s, int n) {
    require(s.norm() == ((long long)1 << n), "jacobi check requires |s|^2 = 2^n");
    if (n % 2 == 1) {
        long long h = (long long)1 << ((n - 1) / 2);
        internal_check((s.re == h || s.re == -h) && (s.im == h || s.im == -h),
                       "odd-n character sum not of the form (+-2^{(n-1)/2}, +-2^{(n-1)/2})");
        return JacobiBranch::OddDiagonal;
    }
    long long h = (long long)1 << (n / 2);
    bool axis = (s.re == 0 && (s.im == h || s.im == -h)) || (s.im == 0 && (s.re == h || s.re == -h));
    internal_check(axis, "even-n character sum not of the form (0,+-2^{n/2}) or (+-2^{n/2},0)");
    return JacobiBranch::EvenAxis;
}

std::string rds_report_json(const DiffSet& d, const RdsReport& rds, const CharProfileReport& prof,
                            bool planar_oracle) {
    const RingCtx& rc = *d.ctx;
    std::ostringstream os;
    bool equiv = rds.is_rds == prof.ok && rds.is_rds == planar_oracle;
    os << "{\"planar_equiv\":" << (equiv ? "true" : "false")
       << ",\"is_rds\":" << (rds.is_rds ? "true" : "false")
       << ",\"char_profile_ok\":" << (prof.ok ? "true" : "false")
       << ",\"is_planar\":" << (planar_oracle ? "true" : "false") << ",\"failing_a\":[";
    for (size_t i = 0; i < prof.failing_a.size(); ++i) {
        if (i) os << ",";
        os << "\"" << rc.to_string(prof.failing_a[i]) << "\"";
    }
    os << "],\"profile_histogram\":{\"4^n\":" << prof.count_4n << ",\"0\":" << prof.count_0
       << ",\"2^n\":" << prof.count_2n << "}}";
    return os.str();
}

}  // namespace planar2
