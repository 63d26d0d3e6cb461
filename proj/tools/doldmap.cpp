// doldmap: build planar skew-product maps whose fixed-point index sequences
// realize a prescribed Dold-admissible target, and verify the realization.
//
// Exit codes: 0 success / all indices agree, 1 disagreement or failed check,
// 2 Dold congruence violation, 3 construction failure, 64 usage error.

#include "doldmap/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace doldmap;

namespace {

constexpr int kExitDisagree = 1;
constexpr int kExitCongruence = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitUsage = 64;

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << payload;
}

// --coeffs takes precedence rules: exactly one of --coeffs/--index
std::optional<DoldCoefficients> resolve_coefficients(const std::string& coeffs_literal,
                                                     bool coeffs_given,
                                                     const std::string& index_literal,
                                                     bool index_given) {
    if (coeffs_given == index_given) {
        std::cerr << "exactly one of --coeffs or --index is required\n";
        return std::nullopt;
    }
    if (coeffs_given) return parse_coefficient_literal(coeffs_literal);
    return invert(parse_index_literal(index_literal));  // may throw congruence_error
}

int run_realize(const std::string& coeffs_literal, bool coeffs_given,
                const std::string& index_literal, bool index_given, int max_n,
                int samples, int max_depth, bool dump_curve, const std::string& out) {
    std::optional<DoldCoefficients> coeffs;
    try {
        coeffs = resolve_coefficients(coeffs_literal, coeffs_given, index_literal, index_given);
    } catch (const congruence_error& e) {
        std::cerr << "index sequence is not Dold-admissible: " << e.what() << "\n";
        return kExitCongruence;
    }
    if (!coeffs) return kExitUsage;

    WindingOptions opts;
    opts.initial_samples = samples;
    opts.max_depth = max_depth;
    opts.record_curve = dump_curve;
    try {
        IndexReport report = verify_indices(*coeffs, max_n, opts);
        write_output(index_report_to_json(report), out);
        if (!report.all_agree) {
            std::cerr << "index verification disagrees for some n\n";
            return kExitDisagree;
        }
        return 0;
    } catch (const primitivity_error& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return kExitConstruction;
    } catch (const winding_refinement_error& e) {
        std::cerr << "winding computation failed: " << e.what() << "\n";
        return kExitDisagree;
    }
}

int run_validate(const std::string& index_literal) {
    CongruenceVerdict verdict = check_congruences(parse_index_literal(index_literal));
    if (verdict.pass) {
        std::cout << "pass\n";
        return 0;
    }
    std::cout << "fail at n=" << verdict.failing_n << " (residue " << verdict.residue
              << " mod " << verdict.failing_n << ")\n";
    return kExitCongruence;
}

int run_invert(const std::string& index_literal) {
    try {
        DoldCoefficients coeffs = invert(parse_index_literal(index_literal));
        std::cout << format_coefficient_literal(coeffs) << "\n";
        return 0;
    } catch (const congruence_error& e) {
        std::cerr << "index sequence is not Dold-admissible: " << e.what() << "\n";
        return kExitCongruence;
    }
}

int run_words(const std::string& check, int n_max, int prefix_n,
              const std::string& conjugates_word, const std::string& power_word,
              int power_k, int dump_streams_n, const std::string& out) {
    if (prefix_n > 0) {
        write_output(ptm_prefix(prefix_n) + "\n", out);
        return 0;
    }
    if (!conjugates_word.empty()) {
        std::string joined;
        for (const Word& rot : conjugates(conjugates_word)) {
            if (!joined.empty()) joined += ',';
            joined += rot;
        }
        write_output(joined + "\n", out);
        return 0;
    }
    if (!power_word.empty()) {
        PowerHit hit = find_k_power(power_word, power_k);
        if (!hit.found()) {
            write_output("free\n", out);
            return 0;
        }
        write_output("power at position " + std::to_string(hit.position) + ", block " +
                         std::to_string(hit.block) + "\n",
                     out);
        return kExitDisagree;
    }
    if (dump_streams_n > 0) {
        write_output(stream_family_to_json(build_stream_family(dump_streams_n)), out);
        return 0;
    }
    if (check.empty()) {
        std::cerr << "words: pick one of --check/--prefix/--conjugates/--power-free/--dump-streams\n";
        return kExitUsage;
    }

    std::string lines;
    bool pass = true;
    auto run_cube = [&] {
        PrefixPowerHit hit = first_power_in_prefixes(n_max, 3);
        if (hit.found()) {
            pass = false;
            lines += "cube-free: FAIL at n=" + std::to_string(hit.n) + " (prefix " +
                     ptm_prefix(hit.n) + ", position " + std::to_string(hit.position) +
                     ", block " + std::to_string(hit.block) + ")\n";
        } else {
            lines += "cube-free: pass (n <= " + std::to_string(n_max) + ")\n";
        }
    };
    auto run_circular = [&] {
        for (int n = 1; n <= n_max; ++n) {
            Word s = ptm_prefix(n);
            CircularPowerHit hit = find_circular_k_power(s, 6);
            if (hit.found()) {
                pass = false;
                lines += "circular6: FAIL at n=" + std::to_string(n) + " (word " + s +
                         ", rotation " + std::to_string(hit.rotation) + ", block " +
                         std::to_string(hit.block) + ")\n";
                return;
            }
        }
        lines += "circular6: pass (n <= " + std::to_string(n_max) + ")\n";
    };
    auto run_primitive = [&] {
        for (int n = 1; n <= n_max; ++n) {
            Word s = ptm_prefix(n);
            if (!is_primitive(s)) {
                pass = false;
                lines += "primitive: FAIL at n=" + std::to_string(n) + " (word " + s + ")\n";
                return;
            }
        }
        lines += "primitive: pass (n <= " + std::to_string(n_max) + ")\n";
    };

    if (check == "cube-free") {
        run_cube();
    } else if (check == "circular6") {
        run_circular();
    } else if (check == "primitive") {
        run_primitive();
    } else if (check == "all") {
        run_cube();
        run_circular();
        run_primitive();
    } else {
        std::cerr << "unknown check: " << check << "\n";
        return kExitUsage;
    }
    write_output(lines, out);
    return pass ? 0 : kExitDisagree;
}

int run_map_dump(const std::string& coeffs_literal, bool coeffs_given,
                 const std::string& rebuild_path, const std::string& out) {
    if (coeffs_given == !rebuild_path.empty()) {
        std::cerr << "map-dump: exactly one of --coeffs or --rebuild is required\n";
        return kExitUsage;
    }
    try {
        SkewProductMap map = [&] {
            if (coeffs_given) return build_map(parse_coefficient_literal(coeffs_literal));
            std::ifstream in(rebuild_path, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open dump file: " + rebuild_path);
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            return map_from_json(text);
        }();
        write_output(map_to_json(map), out);
        return 0;
    } catch (const primitivity_error& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return kExitConstruction;
    }
}

int run_separation(int n_max, int probe_period, double floor,
                   const std::string& coeffs_literal, bool coeffs_given,
                   int escape_samples, int escape_steps, double band,
                   std::uint64_t seed, const std::string& out) {
    SeparationReport separation = separation_scan(n_max, probe_period, floor);
    if (!coeffs_given) {
        write_output(separation_report_to_json(separation), out);
        return 0;
    }
    SkewProductMap map = build_map(parse_coefficient_literal(coeffs_literal));
    EscapeReport escape = escape_scan(map, escape_samples, escape_steps, band, seed);
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["separation"] = nlohmann::ordered_json::parse(separation_report_to_json(separation));
    doc["escape"] = nlohmann::ordered_json::parse(escape_report_to_json(escape));
    write_output(doc.dump(2) + "\n", out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar maps realizing prescribed fixed-point index sequences"};
    app.require_subcommand(1);

    std::string coeffs_literal, index_literal, out_path;
    int max_n = 8, samples = 0, max_depth = 20;
    bool dump_curve = false;

    CLI::App* realize = app.add_subcommand("realize", "build the map and verify its indices");
    CLI::Option* realize_coeffs = realize->add_option("--coeffs", coeffs_literal,
                                                      "coefficients k:a_k, comma separated");
    CLI::Option* realize_index = realize->add_option("--index", index_literal,
                                                     "index sequence prefix, auto-inverted");
    realize->add_option("--max-n", max_n, "verify n = 1..max-n")->check(CLI::PositiveNumber);
    realize->add_option("--samples", samples, "initial winding samples (0 = automatic)");
    realize->add_option("--max-depth", max_depth, "bisection rounds for winding refinement");
    realize->add_flag("--dump-curve", dump_curve, "include sampled displacement curves");
    realize->add_option("--out", out_path, "write the JSON report to a file");

    std::string validate_index;
    CLI::App* validate = app.add_subcommand("validate", "check Dold congruences of an index sequence");
    validate->add_option("--index", validate_index, "index sequence")->required();

    std::string invert_index;
    CLI::App* invert_cmd = app.add_subcommand("invert", "index sequence -> coefficients");
    invert_cmd->add_option("--index", invert_index, "index sequence")->required();

    std::string check, conj_word, power_word, words_out;
    int n_max = 256, prefix_n = 0, power_k = 3, dump_streams_n = 0;
    CLI::App* words = app.add_subcommand("words", "Thue-Morse word diagnostics");
    words->add_option("--check", check, "cube-free | circular6 | primitive | all");
    words->add_option("--n-max", n_max, "prefix lengths to scan");
    words->add_option("--prefix", prefix_n, "print the Thue-Morse prefix of this length");
    words->add_option("--conjugates", conj_word, "list rotations of a word");
    words->add_option("--power-free", power_word, "scan one word for k-powers");
    words->add_option("--k", power_k, "exponent for --power-free");
    words->add_option("--dump-streams", dump_streams_n, "dump the periodic stream family as JSON");
    words->add_option("--out", words_out, "write output to a file");

    std::string dump_coeffs, rebuild_path, dump_out;
    CLI::App* map_dump = app.add_subcommand("map-dump", "emit the constructed map as JSON");
    CLI::Option* dump_coeffs_opt = map_dump->add_option("--coeffs", dump_coeffs, "coefficients k:a_k");
    map_dump->add_option("--rebuild", rebuild_path, "rebuild from a previous dump");
    map_dump->add_option("--out", dump_out, "write the dump to a file");

    int sep_n_max = 64, probe_period = 4, escape_samples = 1000, escape_steps = 50;
    double floor = 1e-6, band = 20.0;
    std::uint64_t seed = 0;
    std::string sep_coeffs, sep_out;
    CLI::App* separation = app.add_subcommand("separation", "isolation diagnostics");
    separation->add_option("--n-max", sep_n_max, "orbit periods to probe");
    separation->add_option("--probe-period", probe_period, "probe periodic points up to this period (<= 8)");
    separation->add_option("--floor", floor, "flag probes whose distance drops below this");
    CLI::Option* sep_coeffs_opt = separation->add_option("--coeffs", sep_coeffs,
                                                         "also escape-scan the map for these coefficients");
    separation->add_option("--escape-samples", escape_samples, "escape scan sample count");
    separation->add_option("--escape-steps", escape_steps, "escape scan iterations per sample");
    separation->add_option("--band", band, "escape band for |r|");
    separation->add_option("--seed", seed, "seed for the sample offsets");
    separation->add_option("--out", sep_out, "write the JSON report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (realize->parsed())
            return run_realize(coeffs_literal, realize_coeffs->count() > 0, index_literal,
                               realize_index->count() > 0, max_n, samples, max_depth,
                               dump_curve, out_path);
        if (validate->parsed()) return run_validate(validate_index);
        if (invert_cmd->parsed()) return run_invert(invert_index);
        if (words->parsed())
            return run_words(check, n_max, prefix_n, conj_word, power_word, power_k,
                             dump_streams_n, words_out);
        if (map_dump->parsed())
            return run_map_dump(dump_coeffs, dump_coeffs_opt->count() > 0, rebuild_path,
                                dump_out);
        if (separation->parsed())
            return run_separation(sep_n_max, probe_period, floor, sep_coeffs,
                                  sep_coeffs_opt->count() > 0, escape_samples,
                                  escape_steps, band, seed, sep_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagree;
    }
    return kExitUsage;
}
