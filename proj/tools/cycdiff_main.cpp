/* Command-line front end.
 *
 *   cycdiff decompose <config> [--format text|csv]
 *   cycdiff boseck    <config> [--format text|csv]
 *   cycdiff gaps      <config> [--place ID] [--format text|csv]
 *   cycdiff verify    <config>
 *   cycdiff verify    --sweep [p=2,3,5] [n=1,2,3,4] [count=100] [seed=42]
 *   cycdiff semigroup --generators a,b,... [--bound N]
 *
 * Exit codes: 0 success, 1 parse error, 2 validation error, 3 internal
 * assertion, 4 oracle comparison failure.
 */

#include "cycdiff/boseck.hpp"
#include "cycdiff/config.hpp"
#include "cycdiff/decomp.hpp"
#include "cycdiff/oracle.hpp"
#include "cycdiff/sweep.hpp"
#include "cycdiff/weier.hpp"

#include <cstring>
#include <iostream>
#include <string>
#include <vector>

using namespace cycdiff;

namespace {

int usage() {
    std::cerr <<
        "usage:\n"
        "  cycdiff decompose <config> [--format text|csv]\n"
        "  cycdiff boseck    <config> [--format text|csv]\n"
        "  cycdiff gaps      <config> [--place ID] [--format text|csv]\n"
        "  cycdiff verify    <config>\n"
        "  cycdiff verify    --sweep [p=2,3,5] [n=1,2,3,4] [count=100] [seed=42]\n"
        "  cycdiff semigroup --generators a,b,... [--bound N]\n";
    return 1;
}

std::vector<long long> parse_list(const std::string& s) {
    std::vector<long long> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoll(cur));
            cur.clear();
        } else cur += c;
    }
    return out;
}

int cmd_decompose(const Config& cfg, const std::string& format) {
    TowerData tower = cfg.effective_tower();
    require_valid(tower);
    DecompositionTable table = decompose(tower);
    if (format == "csv") {
        std::cout << table.to_csv();
    } else {
        std::cout << "V = (+) V(lambda,k)^d(lambda,k) with multiplicities:\n";
        for (const auto& [label, d] : table.mult)
            std::cout << "  d(" << label.lambda << "," << label.k << ") = " << d << "\n";
        if (table.mult.empty()) std::cout << "  (zero space, genus 0)\n";
        std::cout << "genus identity: sum k*d(lambda,k) = " << table.dimension()
                  << " = g_F\n";
    }
    return 0;
}

int cmd_boseck(const Config& cfg, const std::string& format) {
    TowerData tower = cfg.effective_tower();
    require_valid(tower);
    BoseckContext ctx(tower);
    const long long pl = ctx.p_ell(), n = ctx.n();
    if (format == "csv") {
        std::cout << "k,lambda,gamma\n";
        for (long long k = 0; k <= pl; ++k)
            for (long long lambda = 0; lambda < n; ++lambda)
                std::cout << k << "," << lambda << "," << ctx.gamma(k, lambda) << "\n";
    } else {
        std::cout << "Gamma_{k,lambda} (rows k = 0.." << pl << ", columns lambda = 0.."
                  << n - 1 << "):\n";
        for (long long k = 0; k <= pl; ++k) {
            std::cout << "  k=" << k << ":";
            for (long long lambda = 0; lambda < n; ++lambda)
                std::cout << " " << ctx.gamma(k, lambda);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_gaps(const Config& cfg, const std::string& place, const std::string& format) {
    TowerData tower = cfg.effective_tower();
    require_valid(tower);
    BoseckContext ctx(tower);
    size_t branch_index = tower.branch_points.size();
    if (!place.empty()) {
        for (size_t i = 0; i < tower.branch_points.size(); ++i)
            if (tower.branch_points[i].id == place) branch_index = i;
        if (branch_index == tower.branch_points.size())
            throw ValidationError("no branch point with id '" + place + "'");
    } else {
        for (size_t i = 0; i < tower.branch_points.size(); ++i) {
            const BranchPoint& bp = tower.branch_points[i];
            if (ramification_e_prime(tower, bp) * wild_e(tower, bp) == tower.group.order()) {
                branch_index = i;
                break;
            }
        }
        if (branch_index == tower.branch_points.size())
            throw ValidationError("no totally ramified branch point; use --place");
    }
    GapProfile profile = gap_profile(ctx, branch_index);
    const long long n = ctx.n(), pl = ctx.p_ell();
    if (format == "csv") {
        if (profile.has_full_gaps) {
            std::cout << "gap\n";
            for (long long g : profile.full_gaps) std::cout << g << "\n";
        }
        if (profile.has_full_gaps) {
            std::cout << "\ni,b_i,nu_i\n";
            for (const auto& row : descriptors(profile.full_gaps, profile.d).rows)
                std::cout << row.i << "," << row.b_i << "," << row.nu_i << "\n";
        }
        if (!profile.has_full_gaps) {
            std::cout << "i_mod_n,i_mod_pl,count\n";
            for (const auto& [cls, count] : profile.classes)
                std::cout << cls.first << "," << cls.second << "," << count << "\n";
        }
    } else {
        std::cout << "gap classes at " << profile.place << " (d = " << profile.d
                  << "); rows i mod n, columns i mod p^ell:\n";
        for (long long i0 = 0; i0 < n; ++i0) {
            std::cout << " ";
            for (long long i1 = 0; i1 < pl; ++i1) {
                auto it = profile.classes.find({i0, i1});
                std::cout << " " << (it == profile.classes.end() ? 0 : it->second);
            }
            std::cout << "\n";
        }
        if (profile.has_small_gaps) {
            std::cout << "small gaps (< p^ell):";
            for (long long g : profile.small_gaps) std::cout << " " << g;
            std::cout << "\n";
        }
        if (profile.has_full_gaps) {
            std::cout << "gaps:";
            for (long long g : profile.full_gaps) std::cout << " " << g;
            std::cout << "\n";
            std::cout << "descriptors (i, b_i, nu_i) for d = " << profile.d << ":\n";
            for (const auto& row : descriptors(profile.full_gaps, profile.d).rows)
                std::cout << "  " << row.i << ": b=" << row.b_i << " nu=" << row.nu_i << "\n";
        } else {
            std::cout << "(full gap list unavailable: g_{F^P} > 0)\n";
        }
    }
    return 0;
}

int cmd_verify_file(const Config& cfg) {
    if (!cfg.curve) throw ValidationError("verify needs a [curve] section");
    OracleReport rep = cfg.explicit_branches ? verify_curve(*cfg.curve, cfg.tower)
                                             : verify_curve(*cfg.curve);
    std::cout << rep.to_text();
    return rep.pass() ? 0 : 4;
}

int cmd_verify_sweep(const std::vector<std::string>& args) {
    CurveSweepParams params;
    unsigned long long seed = 42;
    long long count = 100;
    for (const auto& arg : args) {
        size_t eq = arg.find('=');
        if (eq == std::string::npos) throw ValidationError("sweep arguments look like key=value");
        std::string key = arg.substr(0, eq), value = arg.substr(eq + 1);
        if (key == "p") params.ps = parse_list(value);
        else if (key == "n") params.ns = parse_list(value);
        else if (key == "count") count = std::stoll(value);
        else if (key == "seed") seed = std::stoull(value);
        else throw ValidationError("unknown sweep argument '" + key + "'");
    }
    SweepResult result = run_sweep(seed, count, params);
    for (size_t i = 0; i < result.reports.size(); ++i) {
        const OracleReport& r = result.reports[i];
        std::cout << (r.pass() ? "PASS" : "FAIL") << " instance " << i + 1 << "/" << count
                  << " curve " << std::hex << r.spec_hash << std::dec
                  << " genus " << r.dim_basis << "\n";
        if (!r.pass())
            for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    }
    std::cout << result.passed << "/" << count << " instances PASS\n";
    return result.all_pass() ? 0 : 4;
}

int cmd_semigroup(const std::vector<std::string>& args) {
    std::vector<long long> gens;
    long long bound = 0;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--generators" && i + 1 < args.size()) gens = parse_list(args[++i]);
        else if (args[i] == "--bound" && i + 1 < args.size()) bound = std::stoll(args[++i]);
        else throw ValidationError("unknown semigroup argument '" + args[i] + "'");
    }
    if (gens.empty()) throw ValidationError("semigroup needs --generators");
    auto gaps = semigroup_gaps(gens, bound);
    std::cout << "gaps:";
    for (long long g : gaps) std::cout << " " << g;
    if (gaps.empty()) std::cout << " (none)";
    std::cout << "\nfrobenius: " << (gaps.empty() ? -1 : gaps.back()) << "\n";
    long long d = *std::min_element(gens.begin(), gens.end());
    std::cout << "descriptors (i, b_i, nu_i) for d = " << d << ":\n";
    for (const auto& row : descriptors(gaps, d).rows)
        std::cout << "  " << row.i << ": b=" << row.b_i << " nu=" << row.nu_i << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) return usage();
    std::string cmd = args[0];

    try {
        if (cmd == "semigroup")
            return cmd_semigroup({args.begin() + 1, args.end()});

        if (cmd == "verify" && args.size() >= 2 && args[1] == "--sweep")
            return cmd_verify_sweep({args.begin() + 2, args.end()});

        if (cmd == "decompose" || cmd == "boseck" || cmd == "gaps" || cmd == "verify") {
            if (args.size() < 2) return usage();
            std::string path = args[1], format = "text", place;
            for (size_t i = 2; i < args.size(); ++i) {
                if (args[i] == "--format" && i + 1 < args.size()) format = args[++i];
                else if (args[i] == "--place" && i + 1 < args.size()) place = args[++i];
                else return usage();
            }
            if (format != "text" && format != "csv") return usage();
            Config cfg = parse_config_file(path);
            if (cmd == "decompose") return cmd_decompose(cfg, format);
            if (cmd == "boseck") return cmd_boseck(cfg, format);
            if (cmd == "gaps") return cmd_gaps(cfg, place, format);
            return cmd_verify_file(cfg);
        }
        return usage();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
