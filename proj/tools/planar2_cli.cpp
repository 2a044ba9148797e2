// Command-line front end: planar-monomial search, Lee weight tables,
// difference-set verification, minimum Lee distance, curve reports and the
// B_n coefficient sets. Every command prints a run manifest line first,
// then the results in JSON or CSV.
//
// Exit codes: 0 ok, 2 guard violation (input out of supported range),
// 3 property mismatch, 4 internal assertion failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "planar2/curve.hpp"
#include "planar2/gf2.hpp"
#include "planar2/gr4.hpp"
#include "planar2/planar.hpp"
#include "planar2/rds.hpp"
#include "planar2/z4code.hpp"

using json = nlohmann::ordered_json;
using namespace planar2;

namespace {

constexpr const char* kToolVersion = "1.0.0";

struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Monomial spec "t,0xHEX" or a path to a table file.
FuncTable parse_function(const FieldCtx& ctx, const std::string& spec) {
    auto comma = spec.find(',');
    if (comma != std::string::npos && spec.find('/') == std::string::npos &&
        spec.find('.') == std::string::npos) {
        uint64_t t = std::stoull(spec.substr(0, comma));
        Fe c = FieldCtx::parse_hex(spec.substr(comma + 1));
        require(t >= 1, "monomial exponent must be positive");
        require(c != 0 && c < ctx.size(), "monomial coefficient out of range");
        return FuncTable::monomial(ctx, t, c);
    }
    std::ifstream in(spec);
    require(static_cast<bool>(in), "cannot open function table file: " + spec);
    return FuncTable::load(in, ctx);
}

json manifest(const std::string& command, const json& params, int n, uint32_t modulus,
              double elapsed_ms, uint64_t digest) {
    json m;
    m["tool_version"] = kToolVersion;
    m["command"] = command;
    m["n"] = n;
    m["modulus"] = FieldCtx::to_hex(modulus);
    m["parameters"] = params;
    m["moduli_table_checksum"] = FieldCtx::modulus_table_checksum();
    m["elapsed_ms"] = elapsed_ms;
    m["result_digest"] = digest;
    return m;
}

std::string lifted_modulus_string(const RingCtx& rc) {
    std::ostringstream os;
    for (int i = 0; i <= rc.degree(); ++i) {
        if (i) os << ",";
        os << (int)rc.lifted_modulus()[i];
    }
    return os.str();
}

std::string classify_exponent(int n, uint64_t t) {
    if ((t & (t - 1)) == 0) return "power-of-2";
    for (int k = 1; k < 2 * n; ++k) {
        if (t == (1ull << k) + 1) return "2^k+1-family";
        if (t == (1ull << k) * ((1ull << k) + 1)) return "2^k(2^k+1)-family";
    }
    return "unexplained";
}

json distribution_to_json(const WeightDistribution& d) {
    json out = json::object();
    for (auto& [w, c] : d.freq) out[std::to_string(w)] = c;
    return out;
}

struct Emitter {
    std::string command;
    json params;
    int n = 0;
    uint32_t modulus = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(const std::string& results) const {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        std::cout << manifest(command, params, n, modulus, ms, fnv1a(results)).dump() << "\n";
        std::cout << results << "\n";
    }
    void emit_failure(const std::string& message) const {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        std::cout << manifest(command, params, n, modulus, ms, 0).dump() << "\n";
        std::cerr << "error: " << message << "\n";
    }
};

int run(int argc, char** argv) {
    CLI::App app{"planar2: planar monomials over binary fields, Z4 codes and curves"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads (results are independent of this)");

    // planar-search
    auto* sc_search = app.add_subcommand("planar-search", "exhaustive planar monomial search");
    int n_search = 0;
    int64_t t_only = -1;
    std::string fmt_search = "json";
    sc_search->add_option("--n", n_search, "field degree")->required();
    sc_search->add_option("--t", t_only, "restrict to one exponent");
    sc_search->add_option("--format", fmt_search, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    // lee-table
    auto* sc_lee = app.add_subcommand("lee-table", "Lee weight distribution of the dual code");
    int n_lee = 0;
    std::string f_lee, fmt_lee = "csv";
    bool check_table = false;
    sc_lee->add_option("--n", n_lee, "field degree")->required();
    sc_lee->add_option("--f", f_lee, "monomial t,0xHEX or table file")->required();
    sc_lee->add_flag("--check-table", check_table, "compare against the closed form");
    sc_lee->add_option("--format", fmt_lee, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    // rds-verify
    auto* sc_rds = app.add_subcommand("rds-verify", "difference-set and character-sum checks");
    int n_rds = 0;
    std::string f_rds;
    sc_rds->add_option("--n", n_rds, "field degree")->required();
    sc_rds->add_option("--f", f_rds, "monomial t,0xHEX or table file")->required();

    // min-lee
    auto* sc_min = app.add_subcommand("min-lee", "minimum Lee distance of C_f");
    int n_min = 0;
    std::string f_min;
    sc_min->add_option("--n", n_min, "field degree")->required();
    sc_min->add_option("--f", f_min, "monomial t,0xHEX or table file")->required();

    // curve-report
    auto* sc_curve = app.add_subcommand("curve-report", "singular points of the curves");
    int n_curve = 0, ext_curve = 0;
    uint64_t t_curve = 0;
    std::string c_curve = "0x1";
    sc_curve->add_option("--t", t_curve, "exponent")->required();
    sc_curve->add_option("--n", n_curve, "field degree")->required();
    sc_curve->add_option("--c", c_curve, "monomial coefficient (hex)");
    sc_curve->add_option("--ext", ext_curve, "search extension degree M");

    // bset
    auto* sc_bset = app.add_subcommand("bset", "the coefficient set B_n");
    int n_bset = 0, ext_bset = 0;
    uint64_t t_bset = 0;
    std::string c_bset = "0x1";
    sc_bset->add_option("--t", t_bset, "exponent")->required();
    sc_bset->add_option("--n", n_bset, "field degree")->required();
    sc_bset->add_option("--c", c_bset, "monomial coefficient (hex)");
    sc_bset->add_option("--ext", ext_bset, "search extension degree M");

    CLI11_PARSE(app, argc, argv);

    if (sc_search->parsed()) {
        Emitter em{"planar-search", {{"n", n_search}, {"t", t_only}, {"jobs", jobs}}};
        FieldCtx ctx(n_search);
        em.n = n_search;
        em.modulus = ctx.modulus();
        try {
            std::vector<MonomialFamily> fams;
            if (t_only >= 1) {
                guard(n_search >= 2 && n_search <= 7, "exhaustive search supports 2 <= n <= 7");
                MonomialFamily fam{(uint64_t)t_only, {}};
                for (uint32_t e = 0; e < ctx.order(); ++e) {
                    Fe c = ctx.exp(e);
                    if (is_planar(FuncTable::monomial(ctx, (uint64_t)t_only, c)).planar) {
                        fam.cs.push_back(c);
                    }
                }
                fams.push_back(std::move(fam));
            } else {
                fams = search_planar_monomials(n_search, jobs);
            }
            std::string results;
            if (fmt_search == "csv") {
                std::ostringstream os;
                os << "t,class,c\n";
                for (auto& fam : fams) {
                    for (Fe c : fam.cs) {
                        os << fam.t << "," << classify_exponent(n_search, fam.t) << ","
                           << FieldCtx::to_hex(c) << "\n";
                    }
                    if (fam.cs.empty()) {
                        os << fam.t << "," << classify_exponent(n_search, fam.t) << ",\n";
                    }
                }
                results = os.str();
            } else {
                json out = json::array();
                for (auto& fam : fams) {
                    json cs = json::array();
                    for (Fe c : fam.cs) cs.push_back(FieldCtx::to_hex(c));
                    out.push_back({{"t", fam.t},
                                   {"class", classify_exponent(n_search, fam.t)},
                                   {"cs", cs}});
                }
                results = out.dump();
            }
            em.emit(results);
        } catch (...) {
            em.emit_failure("planar-search failed");
            throw;
        }
        return 0;
    }

    if (sc_lee->parsed()) {
        Emitter em{"lee-table",
                   {{"n", n_lee}, {"f", f_lee}, {"check_table", check_table}}};
        FieldCtx ctx(n_lee);
        em.n = n_lee;
        em.modulus = ctx.modulus();
        guard(n_lee <= 8, "lee-table supports n <= 8");
        FuncTable f = parse_function(ctx, f_lee);
        RingCtx rc(ctx);
        WeightDistribution dist = dual_lee_distribution(f, rc);
        bool matches = dist.freq == planar_dual_distribution_closed_form(n_lee).freq;
        std::string desc = f.descriptor ? std::to_string(f.descriptor->first) + "," +
                                              FieldCtx::to_hex(f.descriptor->second)
                                        : "table";
        std::string results;
        if (fmt_lee == "csv") results = distribution_csv(dist);
        else results = distribution_json(dist, n_lee, desc, matches);
        em.emit(results);
        if (check_table && !matches) {
            throw MismatchError("distribution does not match the closed form");
        }
        return 0;
    }

    if (sc_rds->parsed()) {
        Emitter em{"rds-verify", {{"n", n_rds}, {"f", f_rds}}};
        FieldCtx ctx(n_rds);
        em.n = n_rds;
        em.modulus = ctx.modulus();
        FuncTable f = parse_function(ctx, f_rds);
        RingCtx rc(ctx);
        em.params["lifted_modulus"] = lifted_modulus_string(rc);
        DiffSet d = build_diffset(f, rc);
        RdsReport rds = verify_rds(d);
        CharProfileReport prof = char_profile_check(d);
        bool planar = is_planar(f).planar;
        std::string results = rds_report_json(d, rds, prof, planar);
        em.emit(results);
        bool equiv = rds.is_rds == prof.ok && rds.is_rds == planar;
        if (!equiv) throw MismatchError("difference-set / character / planarity disagreement");
        return 0;
    }

    if (sc_min->parsed()) {
        Emitter em{"min-lee", {{"n", n_min}, {"f", f_min}}};
        FieldCtx ctx(n_min);
        em.n = n_min;
        em.modulus = ctx.modulus();
        FuncTable f = parse_function(ctx, f_min);
        RingCtx rc(ctx);
        int d = min_lee_distance_Cf(f, rc);
        json out = {{"n", n_min}, {"f", f_min}, {"min_lee", d}};
        em.emit(out.dump());
        return 0;
    }

    if (sc_curve->parsed() || sc_bset->parsed()) {
        bool full = sc_curve->parsed();
        int n = full ? n_curve : n_bset;
        uint64_t t = full ? t_curve : t_bset;
        int M = full ? ext_curve : ext_bset;
        Fe c = FieldCtx::parse_hex(full ? c_curve : c_bset);
        if (M == 0) M = default_search_degree(n);
        Emitter em{full ? "curve-report" : "bset",
                   {{"t", t}, {"n", n}, {"c", FieldCtx::to_hex(c)}, {"M", M}}};
        FieldCtx ctx(n);
        em.n = n;
        em.modulus = ctx.modulus();
        guard(M >= n && M % n == 0 && M <= FieldCtx::kMaxDegree,
              "extension degree must be a multiple of n, at most 24");
        FieldCtx big(M);
        Embedding emb(ctx, big);
        SingularScan scan(emb, t, a_set(ctx, t, c), jobs);
        std::vector<Fe> bs = b_set(scan, c);
        json out;
        out["t"] = t;
        out["n"] = n;
        out["M"] = M;
        out["c"] = FieldCtx::to_hex(c);
        json bj = json::array();
        for (Fe a : bs) bj.push_back(FieldCtx::to_hex(a));
        out["b_set"] = bj;
        bool table_ok = true;
        if (full) {
            json reports = json::array();
            for (Fe a : bs) {
                SingularReport rep = singular_points(scan, a);
                table_ok = table_ok && verify_table4(rep);
                reports.push_back(json::parse(singular_report_json(rep)));
            }
            out["reports"] = reports;
            out["table_multiplicities_ok"] = table_ok;
        }
        em.emit(out.dump());
        if (full && !table_ok) throw MismatchError("multiplicity table mismatch");
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const MismatchError& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
