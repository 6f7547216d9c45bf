#include "k3smooth/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "k3smooth/hilbert.hpp"
#include "k3smooth/parse.hpp"
#include "k3smooth/report.hpp"

namespace k3smooth {

namespace {

struct TwistRange {
    int lo = -6;
    int hi = 8;
};

// Priority: --twist-range flag, then K3SMOOTH_TWIST_RANGE, then [-6, 8].
// The range must be a nonempty interval containing 4.
TwistRange resolve_twist_range(const std::string& flag_value) {
    std::string s = flag_value;
    if (s.empty()) {
        const char* env = std::getenv("K3SMOOTH_TWIST_RANGE");
        if (env) s = env;
    }
    TwistRange r;
    if (!s.empty()) {
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw InputError("twist range must have the form lo:hi");
        try {
            size_t used = 0;
            r.lo = std::stoi(s.substr(0, colon), &used);
            if (used != colon) throw InputError("twist range must have the form lo:hi");
            std::string hi = s.substr(colon + 1);
            r.hi = std::stoi(hi, &used);
            if (used != hi.size()) throw InputError("twist range must have the form lo:hi");
        } catch (const InputError&) {
            throw;
        } catch (const std::exception&) {
            throw InputError("twist range must have the form lo:hi with integer bounds");
        }
    }
    if (r.lo > r.hi) throw InputError("twist range is empty");
    if (r.lo > 4 || r.hi < 4) throw InputError("twist range must contain 4");
    return r;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

GradedIdeal ideal_from_arg(const std::string& generators) {
    return GradedIdeal(default_ring(), parse_generator_list(generators));
}

int cmd_check(const std::string& poly, const std::string& file, bool json,
              const std::string& twist_flag, bool verbose) {
    TwistRange tr = resolve_twist_range(twist_flag);
    if (poly.empty() == file.empty())
        throw InputError("provide exactly one input: a polynomial argument or --file");

    std::vector<std::string> inputs;
    if (!poly.empty()) {
        inputs.push_back(poly);
    } else {
        std::ifstream in(file);
        if (!in) throw InputError("cannot open file: " + file);
        std::string line;
        while (std::getline(in, line)) {
            line = strip(line);
            if (line.empty() || line[0] == '#') continue;
            inputs.push_back(line);
        }
        if (inputs.empty()) throw InputError("no polynomials in " + file);
    }

    std::vector<QuarticReport> reports;
    for (const std::string& text : inputs) {
        if (verbose) std::cerr << "[k3smooth] analyzing " << text << "\n";
        reports.push_back(analyze_quartic(parse_polynomial(text), tr.lo, tr.hi));
        if (verbose)
            std::cerr << "[k3smooth] verdict " << verdict_name(reports.back().verdict) << "\n";
    }

    if (!poly.empty()) {
        std::cout << (json ? quartic_report_json(reports[0]) : quartic_report_text(reports[0]));
    } else if (json) {
        std::cout << quartic_batch_json(reports);
    } else {
        for (size_t i = 0; i < reports.size(); ++i) {
            if (i) std::cout << "\n";
            std::cout << "== [" << (i + 1) << "] ==\n" << quartic_report_text(reports[i]);
        }
    }

    for (const QuarticReport& r : reports)
        if (r.verdict == Verdict::NOT_APPLICABLE_POSITIVE_DIM) return 3;
    return 0;
}

int cmd_resolve(const std::string& generators, bool json, int probe_degree, bool probe_set) {
    GradedIdeal I = ideal_from_arg(generators);
    if (I.is_zero()) throw InputError("the zero ideal has no free resolution here");
    FreeResolution R = free_resolution(I, true);
    BettiTable b = R.betti();
    if (probe_set) {
        std::string why;
        if (!verify_exactness(R, I, 0, probe_degree, &why))
            throw InternalError("exactness check failed: " + why);
    }
    if (json) {
        std::cout << (probe_set ? betti_json(b, probe_degree) : betti_json(b));
    } else {
        std::cout << b.str() << "\n";
        if (probe_set)
            std::cout << "exactness verified through degree " << probe_degree << "\n";
    }
    return 0;
}

int cmd_cohomology(const std::string& generators, bool json, const std::string& twist_flag) {
    TwistRange tr = resolve_twist_range(twist_flag);
    GradedIdeal I = ideal_from_arg(generators);
    if (I.is_zero()) throw InputError("the zero ideal is not supported");
    GradedIdeal sat = saturate_irrelevant(I);
    if (!ideal_equal(I, sat))
        throw InputError("the ideal is not saturated: run the saturate subcommand first");
    HilbertData H = hilbert_data(buchberger(sat));
    FreeResolution R = free_resolution(sat, true);
    CohomologyTable t = H.scheme_dimension > 0
                            ? cohomology_table_via_resolution(R, tr.lo, tr.hi)
                            : cohomology_table_checked(sat, R, tr.lo, tr.hi);
    std::cout << (json ? cohomology_json(t) : t.str() + "\n");
    return 0;
}

int cmd_saturate(const std::string& generators, bool json) {
    GradedIdeal I = ideal_from_arg(generators);
    GradedIdeal sat = I.is_zero() ? I : saturate_irrelevant(I);
    std::cout << (json ? ideal_json(sat) : ideal_text(sat) + "\n");
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact smoothability analysis of singular quartic surfaces in projective "
                 "3-space, with moduli-dimension bookkeeping",
                 "k3smooth"};
    app.require_subcommand(1);

    std::string poly, file, generators, twist_flag;
    std::string format = "text";
    bool verbose = false;
    int probe_degree = 0;
    long r = 0, lsq = 0, c2 = 0, w = 0, v = 0;
    int rc = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_twist = [&](CLI::App* sub) {
        sub->add_option("--twist-range", twist_flag,
                        "cohomology twist range lo:hi, must contain 4 (default -6:8; env "
                        "K3SMOOTH_TWIST_RANGE)");
    };
    auto add_rlc = [&](CLI::App* sub) {
        sub->add_option("--r", r, "rank")->required();
        sub->add_option("--lsq", lsq, "determinant self-intersection (even)")->required();
        sub->add_option("--c2", c2, "second Chern number")->required();
    };

    CLI::App* check = app.add_subcommand(
        "check-quartic", "full analysis of a quartic surface: singular scheme, resolution, "
                         "cohomology, smoothability verdict");
    check->add_option("polynomial", poly, "defining quartic in x, y, z, t");
    check->add_option("--file", file, "batch mode: one polynomial per line");
    check->add_flag("-v,--verbose", verbose, "log analysis stages to stderr");
    add_format(check);
    add_twist(check);
    check->callback(
        [&] { rc = cmd_check(poly, file, format == "json", twist_flag, verbose); });

    CLI::App* resolve = app.add_subcommand(
        "resolve", "minimal free resolution (Betti table) of a homogeneous ideal");
    resolve->add_option("generators", generators, "comma-separated generator list")->required();
    CLI::Option* probe = resolve->add_option(
        "--probe-degree", probe_degree, "verify the rank-ledger exactness of the resolution "
                                        "through this degree");
    add_format(resolve);
    resolve->callback([&] {
        rc = cmd_resolve(generators, format == "json", probe_degree, probe->count() > 0);
    });

    CLI::App* cohom = app.add_subcommand(
        "cohomology", "twisted ideal-sheaf cohomology table of a saturated homogeneous ideal");
    cohom->add_option("generators", generators, "comma-separated generator list")->required();
    add_format(cohom);
    add_twist(cohom);
    cohom->callback([&] { rc = cmd_cohomology(generators, format == "json", twist_flag); });

    CLI::App* sat = app.add_subcommand(
        "saturate", "saturation of a homogeneous ideal with respect to (x, y, z, t)");
    sat->add_option("generators", generators, "comma-separated generator list")->required();
    add_format(sat);
    sat->callback([&] { rc = cmd_saturate(generators, format == "json"); });

    CLI::App* mdim = app.add_subcommand(
        "moduli-dim", "dimension of the moduli space of simple perfect sheaves on a K3 surface");
    add_rlc(mdim);
    add_format(mdim);
    mdim->callback([&] {
        ModuliInvariants m{r, lsq, c2};
        validate(m);
        if (format == "json")
            std::cout << moduli_dim_json(m);
        else
            std::cout << pspl_dimension(m) << "\n";
        rc = 0;
    });

    CLI::App* syz = app.add_subcommand(
        "syzygy-invariants", "invariants of the syzygy sheaf of a globally generated sheaf "
                             "with a w-dimensional section space");
    add_rlc(syz);
    syz->add_option("--w", w, "section-space dimension, at least r + 2")->required();
    add_format(syz);
    syz->callback([&] {
        ModuliInvariants out = syzygy_invariants({r, lsq, c2}, w);
        std::cout << (format == "json" ? invariants_json(out) : invariants_text(out));
        rc = 0;
    });

    CLI::App* ext = app.add_subcommand(
        "extension-invariants", "invariants of an extension by v trivial summands");
    add_rlc(ext);
    ext->add_option("--v", v, "extension dimension, at least 1")->required();
    add_format(ext);
    ext->callback([&] {
        ModuliInvariants out = extension_invariants({r, lsq, c2}, v);
        std::cout << (format == "json" ? invariants_json(out) : invariants_text(out));
        rc = 0;
    });

    CLI::App* lag = app.add_subcommand(
        "lagrangian-identities", "exact dimension identities of the syzygy and extension "
                                 "correspondences");
    add_rlc(lag);
    lag->add_option("--w", w, "section-space dimension, at least r + 2")->required();
    lag->add_option("--v", v, "extension dimension, at least 1")->required();
    add_format(lag);
    lag->callback([&] {
        LagrangianIdentityReport rep = lagrangian_dimension_identities({r, lsq, c2}, w, v);
        std::cout << (format == "json" ? identities_json(rep) : identities_text(rep));
        rc = 0;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace k3smooth
