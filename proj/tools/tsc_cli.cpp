#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "tsc/decoders.hpp"
#include "tsc/io.hpp"
#include "tsc/sweep.hpp"

using namespace tsc;

namespace {

constexpr const char* kVersion = "tscode 0.1.0";

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_hex(const std::string& data) {
    std::ostringstream os;
    os << std::hex << fnv1a(data);
    return os.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << data;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/* Every run emits a manifest: config echo, seed, version, output digests.
 * It lands next to --out when writing files, else on standard error. */
void emit_manifest(const std::string& subcommand, const std::string& config_echo,
                   std::uint64_t seed, const std::vector<std::pair<std::string, std::string>>& outputs,
                   const std::string& timings = "") {
    std::ostringstream os;
    os << "{\"subcommand\":\"" << subcommand << "\",\"version\":\"" << kVersion
       << "\",\"seed\":" << seed << ",\"config\":" << config_echo << ",\"outputs\":[";
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        if (i) os << ',';
        os << "{\"file\":\"" << outputs[i].first << "\",\"fnv1a\":\""
           << digest_hex(outputs[i].second) << "\"}";
    }
    os << "]";
    if (!timings.empty()) os << ",\"timings\":" << timings;
    os << "}";
    std::string manifest = os.str();
    if (!outputs.empty() && !outputs.front().first.empty() && outputs.front().first != "-") {
        write_file(outputs.front().first + ".manifest.json", manifest + "\n");
    } else {
        std::cerr << manifest << "\n";
    }
}

struct CodeSpec {
    std::string family;
    std::size_t size = 1, size2 = 0;
};

/* "--code honeycomb12" or "--code tscc-sqoct:2" style references. */
CodeSpec parse_code_ref(const std::string& ref) {
    CodeSpec spec;
    auto colon = ref.find(':');
    spec.family = ref.substr(0, colon);
    if (colon != std::string::npos) {
        auto rest = ref.substr(colon + 1);
        auto x = rest.find('x');
        spec.size = std::stoul(rest.substr(0, x));
        if (x != std::string::npos) spec.size2 = std::stoul(rest.substr(x + 1));
    }
    return spec;
}

struct BuiltCode {
    std::unique_ptr<Decoder> decoder;  // default decoding algorithm for the family
    std::string default_alg;
};

std::unique_ptr<Decoder> build_decoder(const CodeSpec& spec, std::string alg) {
    if (spec.family == "honeycomb12") {
        if (alg.empty() || alg == "cubic-projection")
            return std::make_unique<CubicProjectionDecoder>(honeycomb12_code());
        if (alg == "cubic-colored-matching")
            return std::make_unique<CubicColoredMatchingDecoder>(honeycomb12_code());
        throw Error("honeycomb12 decodes with cubic-projection or cubic-colored-matching");
    }
    if (spec.family == "cubic-honeycomb") {
        if (alg.empty()) alg = "cubic-projection";
        return make_decoder(Family::honeycomb_torus, alg, spec.size, spec.size2);
    }
    if (spec.family == "tscc-sqoct")
        return make_decoder(Family::square_octagon_torus, alg.empty() ? "tscc" : alg, spec.size);
    if (spec.family == "five-squares")
        return make_decoder(Family::triangular_torus, alg.empty() ? "five-squares" : alg,
                            spec.size);
    if (spec.family == "ssc-square")
        return make_decoder(Family::square_torus, alg.empty() ? "subsystem-surface" : alg,
                            spec.size);
    if (spec.family == "ssc-dsq")
        return make_decoder(Family::rotated_surface_dsq,
                            alg.empty() ? "subsystem-surface" : alg, spec.size);
    throw Error("unknown code family: " + spec.family +
                " (try honeycomb12, cubic-honeycomb, tscc-sqoct, five-squares, ssc-square, "
                "ssc-dsq)");
}

int cmd_build(const std::string& family, std::size_t size, std::size_t size2,
              const std::string& construction, const std::string& out) {
    auto fam = family_from_name(family);
    std::string doc;
    if (construction.empty() || construction == "lattice") {
        doc = complex_to_json(build_family(fam, size, size2));
    } else if (construction == "colex") {
        doc = complex_to_json(colex_from_graph(build_family(fam, size, size2)).colex);
    } else if (construction == "vertex-expand") {
        doc = tscc_to_json(vertex_expand(build_family(fam, size, size2)));
    } else if (construction == "five-squares") {
        doc = promoted_to_json(five_squares_construction(build_family(fam, size, size2)).ph);
    } else if (construction == "five-squares-bad") {
        doc = promoted_to_json(five_squares_bad_variant(build_family(fam, size, size2)).ph);
    } else if (construction == "subsystem-surface") {
        doc = ssurf_to_json(subsystem_surface_construction(build_family(fam, size, size2)));
    } else {
        throw Error("unknown construction: " + construction);
    }
    if (out.empty() || out == "-")
        std::cout << doc;
    else
        write_file(out, doc);
    std::ostringstream cfg;
    cfg << "{\"family\":\"" << family << "\",\"size\":" << size << ",\"size2\":" << size2
        << ",\"construction\":\"" << construction << "\"}";
    emit_manifest("build", cfg.str(), 0, {{out, doc}});
    return 0;
}

int cmd_verify(const std::string& code_ref, std::size_t budget, bool as_json) {
    auto spec = parse_code_ref(code_ref);
    auto dec = build_decoder(spec, "");
    const auto& code = dec->code();
    ParameterExpectation expect;
    if (spec.family == "tscc-sqoct")
        expect.d_lower_bound = shortest_nontrivial_cycle_length(
            build_family(Family::square_octagon_torus, spec.size));
    auto rep = verify_parameters(code, expect, budget);
    if (spec.family == "ssc-square" || spec.family == "ssc-dsq")
        rep.notes.push_back(
            "gauge qubit count follows the construction proof (r = v + 2g - 2), not the "
            "theorem statement");
    if (as_json)
        std::cout << report_to_json(rep);
    else
        std::cout << rep.to_string() << "\n";
    std::ostringstream cfg;
    cfg << "{\"code\":\"" << code_ref << "\",\"budget\":" << budget << "}";
    emit_manifest("verify", cfg.str(), 0, {});
    return 0;
}

int cmd_decode(const std::string& code_ref, const std::string& alg, const std::string& error_str,
               const std::string& syndrome_str, bool with_trace) {
    auto spec = parse_code_ref(code_ref);
    auto dec = build_decoder(spec, alg);
    const auto& code = dec->code();
    SyndromeVector syn;
    std::optional<PauliOperator> error;
    if (!error_str.empty()) {
        error = PauliOperator::from_string(error_str, code.n_qubits);
        syn = code.measure_syndrome(*error);
    } else if (!syndrome_str.empty()) {
        syn.bits = gf2::BitVec(code.num_stabilizer_gens());
        if (syndrome_str.size() != code.num_stabilizer_gens())
            throw Error("syndrome needs " + std::to_string(code.num_stabilizer_gens()) + " bits");
        for (std::size_t i = 0; i < syndrome_str.size(); ++i)
            if (syndrome_str[i] == '1')
                syn.bits.set(i);
            else if (syndrome_str[i] != '0')
                throw Error("syndrome must be a 0/1 string");
    } else {
        throw Error("decode needs --error or --syndrome");
    }
    auto out = dec->decode(syn, true);
    std::cout << "estimate: " << out.estimate.to_string() << "\n";
    if (error) {
        std::cout << "gauge_equivalent: "
                  << (code.is_equivalent_modulo_gauge(*error, out.estimate) ? "true" : "false")
                  << "\n";
        std::cout << "logical_failure: "
                  << (code.logical_failure(*error, out.estimate) ? "true" : "false") << "\n";
    }
    if (with_trace) {
        std::cout << "trace: [\n";
        for (std::size_t i = 0; i < out.trace.size(); ++i)
            std::cout << "  {\"stage\": \"" << out.trace[i].stage << "\", \"detail\": \""
                      << out.trace[i].detail << "\"}" << (i + 1 < out.trace.size() ? "," : "")
                      << "\n";
        std::cout << "]\n";
    }
    std::ostringstream cfg;
    cfg << "{\"code\":\"" << code_ref << "\",\"alg\":\"" << dec->name() << "\"}";
    emit_manifest("decode", cfg.str(), 0, {});
    return 0;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& familyname, const std::string& out) {
    auto t0 = std::chrono::steady_clock::now();
    auto res = sweep(cfg, [](const SweepRow& r) {
        std::cerr << "size " << r.lattice_size << " (n=" << r.n_qubits << ") p=" << r.p
                  << ": " << r.failures << "/" << r.trials << " failures  [" << r.wall_time
                  << "s]\n";
    });
    auto csv = sweep_csv(res);
    if (out.empty() || out == "-")
        std::cout << csv;
    else
        write_file(out, csv);
    auto th = estimate_threshold(res);
    if (th.found)
        std::cerr << "crossing estimate: p = " << th.p_cross << " in [" << th.bracket_low << ", "
                  << th.bracket_high << "]\n";
    std::ostringstream cfgj, times;
    cfgj << "{\"family\":\"" << familyname << "\",\"algorithm\":\"" << cfg.algorithm
         << "\",\"sizes\":[";
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i)
        cfgj << (i ? "," : "") << cfg.sizes[i];
    cfgj << "],\"p_min\":" << cfg.p_min << ",\"p_max\":" << cfg.p_max
         << ",\"p_step\":" << cfg.p_step << ",\"trials\":" << cfg.trials
         << ",\"seed\":" << cfg.seed << ",\"workers\":" << resolve_worker_count(cfg.workers)
         << "}";
    times << "{\"total_s\":"
          << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
          << ",\"rows\":[";
    for (std::size_t i = 0; i < res.rows.size(); ++i)
        times << (i ? "," : "") << res.rows[i].wall_time;
    times << "]}";
    emit_manifest("sweep", cfgj.str(), cfg.seed, {{out, csv}}, times.str());
    return 0;
}

int cmd_threshold(const std::string& in) {
    auto rows = sweep_rows_from_csv(read_file(in));
    auto th = estimate_threshold(rows);
    if (!th.found) {
        std::cout << "no crossing\n";
        return 0;
    }
    std::cout << "p_cross " << th.p_cross << "\nbracket [" << th.bracket_low << ", "
              << th.bracket_high << "]\n";
    return 0;
}

int cmd_export(const std::string& code_ref, const std::string& what, const std::string& out) {
    auto spec = parse_code_ref(code_ref);
    std::string doc;
    if (what == "listing") {
        auto dec = build_decoder(spec, "");
        doc = code_export_listing(dec->code());
    } else if (what == "dot") {
        if (spec.family == "honeycomb12")
            doc = complex_to_dot(honeycomb12());
        else
            throw Error("dot export takes honeycomb12 or use `build` for lattices");
    } else {
        throw Error("export --what must be listing or dot");
    }
    if (out.empty() || out == "-")
        std::cout << doc;
    else
        write_file(out, doc);
    std::ostringstream cfg;
    cfg << "{\"code\":\"" << code_ref << "\",\"what\":\"" << what << "\"}";
    emit_manifest("export", cfg.str(), 0, {{out, doc}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological subsystem code constructions, decoders, and threshold sweeps"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // build
    auto* b = app.add_subcommand("build", "Emit a lattice or construction as JSON");
    std::string b_family, b_construction, b_out;
    std::size_t b_size = 1, b_size2 = 0;
    b->add_option("--family", b_family, "lattice family (honeycomb, square, square-octagon, triangular, rotated-surface)")->required();
    b->add_option("--size", b_size, "scale parameter")->required();
    b->add_option("--size2", b_size2, "second scale parameter (honeycomb)");
    b->add_option("--construction", b_construction,
                  "lattice | colex | vertex-expand | five-squares | five-squares-bad | subsystem-surface");
    b->add_option("--out,-o", b_out, "output file (default stdout)");

    // verify
    auto* v = app.add_subcommand("verify", "Extract a code and report [[n,k,r,d]]");
    std::string v_code;
    std::size_t v_budget = 6;
    bool v_json = false;
    v->add_option("--family,--code", v_code,
                  "code: honeycomb12 | cubic-honeycomb | tscc-sqoct | five-squares | ssc-square | ssc-dsq, with :size suffix or --size")->required();
    std::size_t v_size = 0, v_size2 = 0;
    v->add_option("--size", v_size, "scale parameter");
    v->add_option("--size2", v_size2, "second scale parameter");
    v->add_option("--distance-budget", v_budget, "max weight for the exhaustive distance search");
    v->add_flag("--json", v_json, "emit the report as JSON");

    // decode
    auto* d = app.add_subcommand("decode", "Decode an error or syndrome");
    std::string d_code, d_alg, d_error, d_syndrome;
    bool d_trace = false;
    d->add_option("--code", d_code, "code reference, e.g. honeycomb12 or tscc-sqoct:2")->required();
    d->add_option("--alg", d_alg, "cubic-projection | cubic-colored-matching | tscc | five-squares | subsystem-surface");
    d->add_option("--error", d_error, "Pauli string, e.g. \"Z4 X8\"");
    d->add_option("--syndrome", d_syndrome, "syndrome bits, e.g. 1001101");
    d->add_flag("--trace", d_trace, "print the stage trace");

    // sweep; precedence is flags > config file > built-in defaults, and the
    // config file uses the same JSON schema the run manifest echoes back
    auto* s = app.add_subcommand("sweep", "Monte Carlo failure-rate sweep");
    std::string s_family = "tscc-sqoct", s_out, s_config;
    SweepConfig scfg;
    std::vector<std::size_t> s_sizes = {2, 4};
    auto* o_family = s->add_option("--family", s_family, "code family (default tscc-sqoct)");
    auto* o_sizes = s->add_option("--sizes", s_sizes, "lattice sizes")->delimiter(',');
    auto* o_pmin = s->add_option("--p-min", scfg.p_min, "lowest depolarizing rate");
    auto* o_pmax = s->add_option("--p-max", scfg.p_max, "highest depolarizing rate");
    auto* o_pstep = s->add_option("--p-step", scfg.p_step, "grid step");
    auto* o_trials = s->add_option("--trials", scfg.trials, "samples per grid point");
    auto* o_seed = s->add_option("--seed", scfg.seed, "base seed");
    auto* o_workers =
        s->add_option("--workers", scfg.workers, "worker threads (default: TSC_WORKERS or hardware)");
    s->add_option("--out,-o", s_out, "CSV output file (default stdout)");
    s->add_option("--config", s_config, "JSON config file (manifest schema)");

    // threshold
    auto* t = app.add_subcommand("threshold", "Estimate the crossing from a sweep CSV");
    std::string t_in;
    t->add_option("--in,-i", t_in, "sweep CSV file")->required();

    // export
    auto* x = app.add_subcommand("export", "Export stabilizer/gauge listings");
    std::string x_code, x_what = "listing", x_out;
    x->add_option("--code,--family", x_code, "code reference")->required();
    x->add_option("--what", x_what, "listing | dot");
    x->add_option("--out,-o", x_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*b) return cmd_build(b_family, b_size, b_size2, b_construction, b_out);
        if (*v) {
            auto spec = parse_code_ref(v_code);
            if (v_size) spec.size = v_size;
            if (v_size2) spec.size2 = v_size2;
            std::ostringstream ref;
            ref << spec.family << ':' << spec.size;
            if (spec.size2) ref << 'x' << spec.size2;
            return cmd_verify(spec.family == "honeycomb12" ? spec.family : ref.str(), v_budget,
                              v_json);
        }
        if (*d) return cmd_decode(d_code, d_alg, d_error, d_syndrome, d_trace);
        if (*s) {
            if (!s_config.empty()) {
                auto j = nlohmann::json::parse(read_file(s_config));
                if (j.contains("config")) j = j["config"];  // accept a whole manifest
                if (!*o_family && j.contains("family")) s_family = j["family"];
                if (!*o_sizes && j.contains("sizes"))
                    s_sizes = j["sizes"].get<std::vector<std::size_t>>();
                if (!*o_pmin && j.contains("p_min")) scfg.p_min = j["p_min"];
                if (!*o_pmax && j.contains("p_max")) scfg.p_max = j["p_max"];
                if (!*o_pstep && j.contains("p_step")) scfg.p_step = j["p_step"];
                if (!*o_trials && j.contains("trials")) scfg.trials = j["trials"];
                if (!*o_seed && j.contains("seed")) scfg.seed = j["seed"];
                if (!*o_workers && j.contains("workers")) scfg.workers = j["workers"];
            }
            auto spec = parse_code_ref(s_family);
            if (spec.family == "tscc-sqoct") {
                scfg.family = Family::square_octagon_torus;
                scfg.algorithm = "tscc";
            } else if (spec.family == "cubic-honeycomb") {
                scfg.family = Family::honeycomb_torus;
                scfg.algorithm = "cubic-projection";
            } else if (spec.family == "five-squares") {
                scfg.family = Family::triangular_torus;
                scfg.algorithm = "five-squares";
            } else if (spec.family == "ssc-square") {
                scfg.family = Family::square_torus;
                scfg.algorithm = "subsystem-surface";
            } else if (spec.family == "ssc-dsq") {
                scfg.family = Family::rotated_surface_dsq;
                scfg.algorithm = "subsystem-surface";
            } else {
                throw Error("unknown sweep family: " + spec.family);
            }
            scfg.sizes = s_sizes;
            return cmd_sweep(scfg, spec.family, s_out);
        }
        if (*t) return cmd_threshold(t_in);
        if (*x) return cmd_export(x_code, x_what, x_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
