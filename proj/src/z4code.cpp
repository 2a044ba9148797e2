#include "planar2/z4code.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace planar2 {

namespace {

constexpr int kLee[4] = {0, 1, 2, 1};

}  // namespace

int lee_weight(const Z4Word& w) {
    int s = 0;
    for (uint8_t e : w.e) s += kLee[e & 3];
    return s;
}

int lee_weight_gaussian(const Z4Word& w) {
    GaussianInt s;
    for (uint8_t e : w.e) s = s + omega_pow(e);
    return (int)w.e.size() - (int)s.re;
}

std::vector<uint8_t> gray_map(const Z4Word& w) {
    static constexpr uint8_t kGray[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    std::vector<uint8_t> out(2 * w.e.size());
    for (size_t i = 0; i < w.e.size(); ++i) {
        out[2 * i] = kGray[w.e[i] & 3][0];
        out[2 * i + 1] = kGray[w.e[i] & 3][1];
    }
    return out;
}

ParityCheck parity_check_Cf(const FuncTable& f, const RingCtx& rc) {
    DiffSet d = build_diffset(f, rc);
    return ParityCheck{&rc, std::move(d.elements)};
}

void for_each_dual_codeword(const FuncTable& f, const RingCtx& rc,
                            const std::function<void(const RingElem&, int, const Z4Word&)>& fn) {
    DiffSet d = build_diffset(f, rc);
    int n = rc.degree();
    size_t N = d.elements.size();
    RingElem a{};
    std::vector<uint8_t> traces(N);
    Z4Word w;
    w.e.resize(N);
    while (true) {
        for (size_t x = 0; x < N; ++x) traces[x] = (uint8_t)rc.trace_T(rc.mul(a, d.elements[x]));
        for (int b = 0; b < 4; ++b) {
            for (size_t x = 0; x < N; ++x) w.e[x] = (uint8_t)((traces[x] + b) & 3);
            fn(a, b, w);
        }
        int i = 0;
        for (; i < n; ++i) {
            a.c[i] = (uint8_t)((a.c[i] + 1) & 3);
            if (a.c[i] != 0) break;
        }
        if (i == n) break;
    }
}

WeightDistribution dual_lee_distribution(const FuncTable& f, const RingCtx& rc) {
    guard(rc.degree() <= 8, "dual enumeration supports n <= 8");
    DiffSet d = build_diffset(f, rc);
    int n = rc.degree();
    long long N = (long long)1 << n;
    WeightDistribution dist;
    RingElem a{};
    while (true) {
        GaussianInt s = char_sum(d, a);
        // wt_L(c_{a,b}) = 2^n - Re(omega^b S_a)
        long long re[4] = {s.re, -s.im, -s.re, s.im};
        for (int b = 0; b < 4; ++b) ++dist.freq[N - re[b]];
        int i = 0;
        for (; i < n; ++i) {
            a.c[i] = (uint8_t)((a.c[i] + 1) & 3);
            if (a.c[i] != 0) break;
        }
        if (i == n) break;
    }
    return dist;
}

WeightDistribution planar_dual_distribution_closed_form(int n) {
    long long q = (long long)1 << n;
    WeightDistribution d;
    d.freq[0] = 1;
    d.freq[2 * q] = 1;
    if (n % 2 == 1) {
        long long h = (long long)1 << ((n - 1) / 2);
        d.freq[q - h] = 2 * q * (q - 1);
        d.freq[q] = 4 * q - 2;
        d.freq[q + h] = 2 * q * (q - 1);
    } else {
        long long h = (long long)1 << (n / 2);
        d.freq[q - h] = q * (q - 1);
        d.freq[q] = 2 * q * (q + 1) - 2;
        d.freq[q + h] = q * (q - 1);
    }
    return d;
}

SWE swe_of_dual(const FuncTable& f, const RingCtx& rc) {
    guard(rc.degree() <= 8, "dual enumeration supports n <= 8");
    SWE swe;
    swe.length = 1 << rc.degree();
    for_each_dual_codeword(f, rc, [&](const RingElem&, int, const Z4Word& w) {
        int n0 = 0, n1 = 0, n2 = 0;
        for (uint8_t e : w.e) {
            if (e == 0) ++n0;
            else if (e == 2) ++n2;
            else ++n1;
        }
        ++swe.counts[{n0, n1, n2}];
    });
    return swe;
}

namespace {

// Dense homogeneous polynomial in three variables: coefficient of
// X0^i X1^j X2^{d-i-j} at index(i, j).
struct Homog3 {
    int d = 0;
    std::vector<__int128> c;  // size (d+1)(d+2)/2
    static size_t idx(int d, int i, int j) { return (size_t)i * (2 * d + 3 - i) / 2 + j; }
    explicit Homog3(int deg) : d(deg), c((size_t)(deg + 1) * (deg + 2) / 2, 0) {}
};

Homog3 mul_homog(const Homog3& p, const Homog3& q) {
    Homog3 r(p.d + q.d);
    for (int i = 0; i <= p.d; ++i) {
        for (int j = 0; i + j <= p.d; ++j) {
            __int128 pc = p.c[Homog3::idx(p.d, i, j)];
            if (pc == 0) continue;
            for (int k = 0; k <= q.d; ++k) {
                for (int l = 0; k + l <= q.d; ++l) {
                    __int128 qc = q.c[Homog3::idx(q.d, k, l)];
                    if (qc == 0) continue;
                    r.c[Homog3::idx(r.d, i + k, j + l)] += pc * qc;
                }
            }
        }
    }
    return r;
}

// Powers of a linear form a0*X0 + a1*X1 + a2*X2.
std::vector<Homog3> linear_powers(int a0, int a1, int a2, int maxdeg) {
    std::vector<Homog3> out;
    out.emplace_back(0);
    out[0].c[0] = 1;
    Homog3 lin(1);
    lin.c[Homog3::idx(1, 1, 0)] = a0;
    lin.c[Homog3::idx(1, 0, 1)] = a1;
    lin.c[Homog3::idx(1, 0, 0)] = a2;
    for (int d = 1; d <= maxdeg; ++d) out.push_back(mul_homog(out.back(), lin));
    return out;
}

}  // namespace

SWE macwilliams_transform(const SWE& dual_swe, long long dual_size) {
    int N = dual_swe.length;
    require(N > 0 && dual_size > 0, "macwilliams_transform: empty enumerator");
    // Substitution X0 -> X0+2X1+X2, X1 -> X0-X2, X2 -> X0-2X1+X2.
    static const int sub0[3] = {1, 2, 1};
    static const int sub1[3] = {1, 0, -1};
    static const int sub2[3] = {1, -2, 1};
    std::vector<Homog3> p0 = linear_powers(sub0[0], sub0[1], sub0[2], N);
    std::vector<Homog3> p1 = linear_powers(sub1[0], sub1[1], sub1[2], N);
    std::vector<Homog3> p2 = linear_powers(sub2[0], sub2[1], sub2[2], N);
    Homog3 acc(N);
    for (auto& [key, count] : dual_swe.counts) {
        auto [n0, n1, n2] = key;
        require(n0 + n1 + n2 == N, "macwilliams_transform: inconsistent sizes");
        Homog3 term = mul_homog(mul_homog(p0[n0], p1[n1]), p2[n2]);
        for (size_t i = 0; i < acc.c.size(); ++i) acc.c[i] += (__int128)count * term.c[i];
    }
    SWE out;
    out.length = N;
    for (int i = 0; i <= N; ++i) {
        for (int j = 0; i + j <= N; ++j) {
            __int128 v = acc.c[Homog3::idx(N, i, j)];
            if (v == 0) continue;
            internal_check(v % dual_size == 0, "macwilliams_transform: non-integral count");
            __int128 cnt = v / dual_size;
            internal_check(cnt > 0 && cnt <= (__int128)INT64_MAX, "macwilliams_transform: count overflow");
            out.counts[{i, j, N - i - j}] = (long long)cnt;
        }
    }
    return out;
}

WeightDistribution lee_distribution_from_swe(const SWE& swe) {
    WeightDistribution d;
    for (auto& [key, count] : swe.counts) {
        auto [n0, n1, n2] = key;
        d.freq[(long long)n1 + 2 * n2] += count;
    }
    return d;
}

std::vector<Z4Word> kernel_generator_matrix(const ParityCheck& h) {
    const RingCtx& rc = *h.ctx;
    int n = rc.degree();
    int N = (int)h.row2.size();
    guard(N <= 32, "dense Z4 kernel reduction supports N <= 32");
    // Expand to the (n+1) x N matrix over Z4: the all-ones row plus one row
    // per coefficient of the ring-valued row.
    int rows = n + 1;
    std::vector<std::vector<int>> m(rows, std::vector<int>(N));
    for (int x = 0; x < N; ++x) {
        m[0][x] = 1;
        for (int r = 0; r < n; ++r) m[r + 1][x] = h.row2[x].c[r];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < N && r < rows; ++col) {
        int pr = -1;
        for (int rr = r; rr < rows; ++rr) {
            if (m[rr][col] % 2 == 1) { pr = rr; break; }
        }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        int invp = (m[r][col] == 1) ? 1 : 3;  // units of Z4 are self-inverse-ish: 1*1=1, 3*3=1
        for (int x = 0; x < N; ++x) m[r][x] = (m[r][x] * invp) & 3;
        for (int rr = 0; rr < rows; ++rr) {
            if (rr == r || m[rr][col] == 0) continue;
            int fct = m[rr][col];
            for (int x = 0; x < N; ++x) m[rr][x] = (m[rr][x] - fct * m[r][x] + 16) & 3;
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (int rr = r; rr < rows; ++rr) {
        for (int x = 0; x < N; ++x) {
            internal_check(m[rr][x] == 0, "parity-check matrix is not free over Z4");
        }
    }
    internal_check(r == rows, "parity-check rank defect: code larger than asserted");
    std::vector<char> is_pivot(N, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<Z4Word> gens;
    for (int j = 0; j < N; ++j) {
        if (is_pivot[j]) continue;
        Z4Word g;
        g.e.assign(N, 0);
        g.e[j] = 1;
        for (int rr = 0; rr < r; ++rr) g.e[pivot_col[rr]] = (uint8_t)((4 - m[rr][j]) & 3);
        gens.push_back(std::move(g));
    }
    internal_check((int)gens.size() == N - n - 1, "kernel rank mismatch");
    // Zero syndrome against both parity rows.
    for (const Z4Word& g : gens) {
        int s0 = 0;
        RingElem s1{};
        for (int x = 0; x < N; ++x) {
            s0 = (s0 + g.e[x]) & 3;
            s1 = rc.add(s1, rc.mul_scalar(h.row2[x], g.e[x]));
        }
        internal_check(s0 == 0 && s1 == rc.zero(), "kernel generator has nonzero syndrome");
    }
    return gens;
}

std::vector<Z4Word> enumerate_code(const std::vector<Z4Word>& gens) {
    require(!gens.empty(), "enumerate_code: no generators");
    size_t N = gens[0].e.size();
    size_t rank = gens.size();
    guard(rank <= 14, "code enumeration supports rank <= 14");
    std::vector<Z4Word> code;
    code.reserve((size_t)1 << (2 * rank));
    std::vector<int> coef(rank, 0);
    Z4Word w;
    w.e.assign(N, 0);
    while (true) {
        code.push_back(w);
        size_t i = 0;
        for (; i < rank; ++i) {
            coef[i] = (coef[i] + 1) & 3;
            for (size_t x = 0; x < N; ++x) w.e[x] = (uint8_t)((w.e[x] + gens[i].e[x]) & 3);
            if (coef[i] != 0) break;
        }
        if (i == rank) break;
    }
    return code;
}

int min_lee_distance_Cf(const FuncTable& f, const RingCtx& rc) {
    int n = rc.degree();
    if (n <= 3) {
        auto gens = kernel_generator_matrix(parity_check_Cf(f, rc));
        int best = INT32_MAX;
        for (const Z4Word& w : enumerate_code(gens)) {
            int wt = lee_weight(w);
            if (wt > 0 && wt < best) best = wt;
        }
        internal_check(best < INT32_MAX, "code has no nonzero codeword");
        return best;
    }
    guard(n == 5, "min_lee_distance_Cf: direct route n <= 3, MacWilliams route n = 5");
    SWE dual = swe_of_dual(f, rc);
    long long dual_size = 0;
    for (auto& [k, v] : dual.counts) dual_size += v;
    SWE code = macwilliams_transform(dual, dual_size);
    int best = INT32_MAX;
    for (auto& [key, count] : code.counts) {
        auto [n0, n1, n2] = key;
        int wt = n1 + 2 * n2;
        if (wt > 0 && count > 0 && wt < best) best = wt;
    }
    return best;
}

GrayParams gray_params(const FuncTable& f, const RingCtx& rc) {
    guard(rc.degree() <= 3, "gray_params enumerates the code; n <= 3");
    auto gens = kernel_generator_matrix(parity_check_Cf(f, rc));
    auto code = enumerate_code(gens);
    int best = INT32_MAX;
    for (const Z4Word& w : code) {
        int wt = lee_weight(w);  // Gray isometry: min Hamming distance = min Lee weight
        if (wt > 0 && wt < best) best = wt;
    }
    return GrayParams{2 * (int)gens[0].e.size(), (long long)code.size(), best};
}

GrayParams punctured_gray_params(const FuncTable& f, const RingCtx& rc, int position) {
    guard(rc.degree() <= 3, "punctured_gray_params enumerates the code; n <= 3");
    auto gens = kernel_generator_matrix(parity_check_Cf(f, rc));
    auto code = enumerate_code(gens);
    int len2 = 2 * (int)gens[0].e.size();
    require(position >= 0 && position < len2, "puncture position out of range");
    std::vector<uint32_t> words;
    words.reserve(code.size());
    for (const Z4Word& w : code) {
        auto bits = gray_map(w);
        uint32_t v = 0;
        int out = 0;
        for (int i = 0; i < len2; ++i) {
            if (i == position) continue;
            v |= (uint32_t)bits[i] << out++;
        }
        words.push_back(v);
    }
    std::vector<uint32_t> uniq = words;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    int best = INT32_MAX;
    for (size_t i = 0; i < uniq.size(); ++i) {
        for (size_t j = i + 1; j < uniq.size(); ++j) {
            int d = __builtin_popcount(uniq[i] ^ uniq[j]);
            if (d < best) best = d;
        }
    }
    return GrayParams{len2 - 1, (long long)uniq.size(), best};
}

std::vector<uint64_t> binary_Df_columns(const FuncTable& f) {
    const FieldCtx& ctx = *f.ctx;
    require(f(0) == 0, "binary_Df requires f(0) = 0");
    int n = ctx.degree();
    std::vector<uint64_t> cols;
    cols.reserve(ctx.order());
    for (uint32_t i = 0; i < ctx.order(); ++i) {
        Fe x = ctx.exp(i);
        cols.push_back((uint64_t)x | ((uint64_t)f(x) << n));
    }
    return cols;
}

int min_hamming_distance_Df(const FuncTable& f) {
    auto cols = binary_Df_columns(f);
    int m = (int)cols.size();
    guard(m <= 1024, "D_f distance search supports n <= 10");
    std::unordered_map<uint64_t, int> col_index;
    for (int i = 0; i < m; ++i) {
        if (cols[i] == 0) return 1;
        auto [it, fresh] = col_index.emplace(cols[i], i);
        if (!fresh) return 2;
    }
    // weight 3: a pair summing to a third column
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            auto it = col_index.find(cols[i] ^ cols[j]);
            if (it != col_index.end() && it->second != i && it->second != j) return 3;
        }
    }
    // weight 4: two pairs with equal sums (equal sums force disjoint pairs)
    std::unordered_map<uint64_t, std::vector<std::pair<int, int>>> pair_sums;
    bool w4 = false;
    for (int i = 0; i < m && !w4; ++i) {
        for (int j = i + 1; j < m; ++j) {
            auto& v = pair_sums[cols[i] ^ cols[j]];
            if (!v.empty()) { w4 = true; break; }
            v.emplace_back(i, j);
        }
    }
    if (w4) return 4;
    // weight 5: column + pair + pair, all indices distinct
    for (int q = 0; q < m; ++q) {
        for (int i = 0; i < m; ++i) {
            if (i == q) continue;
            for (int j = i + 1; j < m; ++j) {
                if (j == q) continue;
                auto it = pair_sums.find(cols[q] ^ cols[i] ^ cols[j]);
                if (it == pair_sums.end()) continue;
                for (auto [k, l] : it->second) {
                    if (k != q && k != i && k != j && l != q && l != i && l != j) return 5;
                }
            }
        }
    }
    throw InternalError("D_f minimum distance exceeds 5");
}

std::string distribution_csv(const WeightDistribution& d) {
    std::ostringstream os;
    os << "weight,frequency\n";
    for (auto& [w, c] : d.freq) os << w << "," << c << "\n";
    return os.str();
}

std::string distribution_json(const WeightDistribution& d, int n, const std::string& f_desc,
                              bool matches_table) {
    std::ostringstream os;
    os << "{\"metric\":\"" << (d.metric == WeightDistribution::Metric::Lee ? "Lee" : "Hamming")
       << "\",\"n\":" << n << ",\"f\":\"" << f_desc << "\",\"matches_table\":"
       << (matches_table ? "true" : "false") << ",\"distribution\":{";
    bool first = true;
    for (auto& [w, c] : d.freq) {
        if (!first) os << ",";
        first = false;
        os << "\"" << w << "\":" << c;
    }
    os << "}}";
    return os.str();
}

}  // namespace planar2
