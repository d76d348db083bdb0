#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "signtope/error.hpp"
#include "signtope/gf2top.hpp"
#include "signtope/report.hpp"
#include "signtope/reproduce.hpp"
#include "signtope/signcomplex.hpp"
#include "signtope/version.hpp"
#include "signtope/vrcube.hpp"

using namespace signtope;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kInputError = 2, kCapError = 3 };

FaceLimits face_limits(std::size_t flag) {
    FaceLimits f;
    if (flag) f.max_faces = flag;
    if (const char* env = std::getenv("SIGNTOPE_MAX_FACES")) {
        try {
            f.max_faces = std::stoull(env);
        } catch (const std::exception&) {
            throw InvalidInput(std::string("SIGNTOPE_MAX_FACES is not a number: ") + env);
        }
    }
    return f;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
}

json betti_json(const std::vector<std::size_t>& b) { return json(b); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sign complexes, Z2-index bounds and sign-rank certificates"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a generated sign matrix");
    std::string family, gen_out;
    unsigned gen_n = 0, gen_k = 1, gen_q = 2;
    std::uint64_t gen_seed = 1;
    GeneratorCaps caps;
    gen->add_option("family", family, "ghd | hadamard | random | pg")->required()
        ->check(CLI::IsMember({"ghd", "hadamard", "random", "pg"}));
    gen->add_option("--n", gen_n, "Cube dimension (ghd), exponent (hadamard) or size (random)");
    gen->add_option("--k", gen_k, "Gap parameter for ghd");
    gen->add_option("--q", gen_q, "Field size for pg");
    gen->add_option("--seed", gen_seed, "Seed for random and pg");
    gen->add_option("--out,-o", gen_out, "Output file (default stdout)");
    gen->add_option("--max-ghd-n", caps.max_ghd_n, "Cap on n for ghd");
    gen->add_option("--max-hadamard-exp", caps.max_hadamard_exp, "Cap on the hadamard exponent");

    // build
    auto* build = app.add_subcommand("build", "Write the facets of S(A)");
    std::string build_in, build_out;
    build->add_option("matrix", build_in, "Matrix file")->required();
    build->add_option("--out,-o", build_out, "Output file (default stdout)");

    // invariants
    auto* inv = app.add_subcommand("invariants", "Bound chain report as JSON");
    std::string inv_in, inv_out, inv_realization;
    std::vector<std::string> inv_skip;
    std::size_t inv_max_faces = 0;
    ReportOptions ropts;
    inv->add_option("matrix", inv_in, "Matrix file")->required();
    inv->add_option("--out,-o", inv_out, "Output file (default stdout)");
    inv->add_option("--skip", inv_skip, "Components to skip")->delimiter(',')
        ->check(CLI::IsMember(report_component_names()));
    inv->add_option("--seed", ropts.seed, "Seed for the sign-rank search");
    inv->add_option("--search-iters", ropts.search_iters, "Alternation rounds per restart");
    inv->add_option("--search-restarts", ropts.search_restarts, "Restarts per dimension");
    inv->add_option("--search-max-cols", ropts.search_max_cols, "Skip the search above this many columns");
    inv->add_option("--realization", inv_realization, "JSON realization to use as the sign-rank witness");
    inv->add_option("--max-faces", inv_max_faces, "Face cap (SIGNTOPE_MAX_FACES overrides)");
    inv->add_option("--max-closure", ropts.closure.max_sets, "Cap on sets visited by the chain-height search");
    inv->add_option("--max-exact-cols", ropts.shatter.max_exact_cols, "Column cap for exact VC / omega search");

    // vr
    auto* vr = app.add_subcommand("vr", "Vietoris-Rips complex of the hypercube");
    unsigned vr_n = 3, vr_k = 1;
    int vr_t = -1, vr_max_degree = -1;
    bool vr_nerve = false, vr_betti = false;
    CubeLimits cube_limits;
    std::size_t vr_max_faces = 0;
    vr->add_option("--n", vr_n, "Cube dimension")->required();
    vr->add_option("--k", vr_k, "Distance threshold")->required();
    vr->add_option("--t", vr_t, "Also build VR^t and the t-face diagnostics");
    vr->add_flag("--nerve", vr_nerve, "With --t: compare the face-cover nerve with the t-skeleton");
    vr->add_flag("--betti", vr_betti, "Reduced Betti numbers and homological connectivity");
    vr->add_option("--max-degree", vr_max_degree, "Highest Betti degree (default: dimension)");
    vr->add_option("--max-n", cube_limits.max_n, "Cap on n");
    vr->add_option("--max-faces", vr_max_faces, "Face cap (SIGNTOPE_MAX_FACES overrides)");

    // reproduce
    auto* rep = app.add_subcommand("reproduce", "Run the acceptance suite");
    std::string suite = "all";
    rep->add_option("suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));

    // convert
    auto* conv = app.add_subcommand("convert", "Matrix <-> facet list");
    std::string conv_in, conv_out, conv_to;
    conv->add_option("input", conv_in, "Matrix or facet-list file")->required();
    conv->add_option("--to", conv_to, "facets | matrix")->required()->check(CLI::IsMember({"facets", "matrix"}));
    conv->add_option("--out,-o", conv_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*gen) {
            PartialSignMatrix a = [&] {
                if (family == "ghd") return ghd(gen_n, gen_k, caps);
                if (family == "hadamard") return hadamard(gen_n, caps);
                if (family == "random") return random_total(gen_n, gen_seed);
                return pg_random_partial(gen_q, gen_seed);
            }();
            write_output(gen_out, format_matrix(a));
            auto& info = (gen_out.empty() || gen_out == "-") ? std::cerr : std::cout;
            info << a.rows() << "x" << a.cols() << ", " << a.specified_count() << " specified entries, density "
                 << static_cast<double>(a.specified_count()) / static_cast<double>(a.rows() * a.cols()) << "\n";
            return kOk;
        }
        if (*build) {
            write_output(build_out, format_facets(sign_complex(parse_matrix(read_file(build_in)))));
            return kOk;
        }
        if (*inv) {
            const PartialSignMatrix a = parse_matrix(read_file(inv_in));
            ropts.faces = face_limits(inv_max_faces);
            ropts.skip.insert(inv_skip.begin(), inv_skip.end());
            if (!inv_realization.empty()) {
                try {
                    ropts.known_realization = realization_from_json(json::parse(read_file(inv_realization)));
                } catch (const json::exception& e) {
                    throw ParseError(std::string("realization file: ") + e.what());
                }
                ropts.known_realization_source = "supplied";
            }
            const auto r = invariant_report(a, inv_in, ropts);
            json j = report_to_json(r);
            j["params"] = {{"matrix", inv_in},
                           {"seed", ropts.seed},
                           {"search_iters", ropts.search_iters},
                           {"search_restarts", ropts.search_restarts},
                           {"search_max_cols", ropts.search_max_cols},
                           {"max_faces", ropts.faces.max_faces},
                           {"max_closure", ropts.closure.max_sets},
                           {"max_exact_cols", ropts.shatter.max_exact_cols},
                           {"skip", inv_skip},
                           {"realization", inv_realization}};
            write_output(inv_out, j.dump(2) + "\n");
            return r.chain_holds() ? kOk : kViolation;
        }
        if (*vr) {
            const FaceLimits fl = face_limits(vr_max_faces);
            const CubeComplex c = vr_cube(vr_n, vr_k, cube_limits);
            json j;
            j["schema"] = kReportSchema;
            j["tool"] = "signtope";
            j["version"] = kVersion;
            j["params"] = {{"n", vr_n}, {"k", vr_k}, {"t", vr_t}, {"nerve", vr_nerve}, {"betti", vr_betti},
                           {"max_degree", vr_max_degree}, {"max_faces", fl.max_faces}};
            j["facets"] = c.plain.facets().size();
            j["dimension"] = c.plain.dimension();
            j["free"] = c.is_free();
            if (vr_k < vr_n) j["alpha"] = alpha(vr_n, vr_k).get_str();
            else j["alpha"] = nullptr;
            bool ok = true;
            if (vr_betti) {
                const int top = vr_max_degree >= 0 ? vr_max_degree : std::max(0, c.plain.dimension());
                const auto b = vr_reduced_betti(vr_n, vr_k, top, fl, cube_limits);
                j["reduced_betti"] = betti_json(b);
                int conn = -1;
                while (conn + 1 < static_cast<int>(b.size()) && b[conn + 1] == 0) ++conn;
                j["homological_connectivity"] = conn;
                j["homological_connectivity_complete"] = top >= c.plain.dimension();
            }
            if (vr_t >= 0) {
                const auto t = static_cast<unsigned>(vr_t);
                const CubeComplex sub = vr_t_subcomplex(vr_n, vr_k, t, cube_limits);
                json tj = {{"t", t}, {"vr_t_facets", sub.plain.facets().size()}, {"vr_t_free", sub.is_free()},
                           {"cube_faces", cube_faces(vr_n, t).size()}};
                if (vr_k >= 2) {
                    const unsigned ct = choose_t(vr_k);
                    tj["choose_t"] = ct;
                    const auto tail = tail_inequality_check(t, vr_k);
                    json margins = json::array();
                    for (const auto& m : tail.margins)
                        margins.push_back({{"t_prime", m.t_prime}, {"alpha", m.alpha.get_str()},
                                           {"margin", m.margin.get_str()}});
                    tj["tail_inequality"] = {{"holds", tail.holds}, {"margins", margins}};
                }
                if (vr_nerve) {
                    const auto nb = betti(face_cover_nerve(vr_n, vr_k, t, cube_limits), -1, fl);
                    const auto sb = betti(hypercube_skeleton_triangulated(vr_n, t, cube_limits).plain, -1, fl);
                    auto trimmed = [](std::vector<std::size_t> v) {
                        while (!v.empty() && v.back() == 0) v.pop_back();
                        return v;
                    };
                    const bool same = trimmed(nb) == trimmed(sb);
                    tj["nerve_betti"] = nb;
                    tj["skeleton_betti"] = sb;
                    tj["nerve_matches_skeleton"] = same;
                    ok = ok && same;
                }
                j["vr_t"] = tj;
            }
            std::cout << j.dump(2) << "\n";
            return ok ? kOk : kViolation;
        }
        if (*rep) return run_suite(suite, std::cout) ? kOk : kViolation;
        if (*conv) {
            const std::string text = read_file(conv_in);
            if (conv_to == "facets")
                write_output(conv_out, format_facets(sign_complex(parse_matrix(text))));
            else
                write_output(conv_out, format_matrix(matrix_from_complex(parse_z2_facets(text))));
            return kOk;
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: resource cap: " << e.what() << "\n";
        return kCapError;
    } catch (const ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return kInputError;
    } catch (const InvalidInput& e) {
        std::cerr << "error: invalid input: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
