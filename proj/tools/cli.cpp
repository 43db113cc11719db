#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "injwords/certificate.hpp"
#include "injwords/collapse.hpp"
#include "injwords/complex.hpp"
#include "injwords/homology.hpp"

namespace injwords::cli {

namespace {

using nlohmann::json;

/// Bad user input discovered after argument parsing.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GeneratorChoice {
    std::vector<std::string> spec{"nonderangements"};

    std::string describe() const { return spec.size() == 2 ? spec[0] + " " + spec[1] : spec[0]; }
};

void require_range(int n, int lo, int hi, const std::string& what)
{
    if (n < lo || n > hi)
        throw UsageError(what + ": --n " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
}

GeneratedComplex build(const GeneratorChoice& gen, int n)
{
    const auto& kind = gen.spec.at(0);
    if (kind == "full" || kind == "nonderangements") {
        if (gen.spec.size() != 1) throw UsageError("--gen " + kind + " takes no path");
        require_range(n, 2, 8, "--gen " + kind);
        return generate_complex(kind == "full" ? permutations(n) : non_derangements(n), n);
    }
    if (kind == "file") {
        if (gen.spec.size() != 2) throw UsageError("--gen file needs a path");
        require_range(n, 1, kMaxAlphabet, "--gen file");
        return generate_complex(load_generators(gen.spec[1], n), n);
    }
    throw UsageError("unknown generator '" + kind + "' (expected full, nonderangements, or file <path>)");
}

RingSpec parse_ring(const std::string& text, int n)
{
    RingSpec ring = RingSpec::integers();
    try {
        ring = RingSpec::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (ring.kind() == RingSpec::Kind::integers && n > 7)
        throw UsageError("integral homology is limited to n <= 7; use q or fp:P");
    return ring;
}

CollapsePolicy policy_of(const std::string& text)
{
    try {
        return parse_policy(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

} // namespace

std::vector<InjWord> load_generators(const std::string& path, int n)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(path + ": cannot open generator file");
    std::vector<InjWord> out;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            out.push_back(InjWord::parse(line, n));
        } catch (const std::exception& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.empty()) throw std::invalid_argument(path + ": no generators");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Complexes of injective words: homology, collapses, and redundancy certificates",
                 "injwords"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    bool no_meta = false;
    app.add_flag("--no-meta", no_meta, "Omit run duration from the report");
    app.fallthrough();

    int n = 0;
    GeneratorChoice gen;
    std::string ring_text = "z";
    std::string policy_text = "lex";
    std::string emit_path, out_path;
    int level = 0;

    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "Alphabet size")->required(); };
    auto add_gen = [&](CLI::App* sub) {
        sub->add_option("--gen", gen.spec, "full | nonderangements | file <path>")->expected(1, 2);
    };

    auto* homology_cmd = app.add_subcommand("homology", "Homology of X(S) over z, q, or fp:P");
    add_gen(homology_cmd);
    add_n(homology_cmd);
    homology_cmd->add_option("--ring", ring_text, "z | q | fp:P");

    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of X(S)");
    add_gen(euler_cmd);
    add_n(euler_cmd);

    auto* collapse_cmd = app.add_subcommand("collapse", "Greedy elementary collapse of X(S)");
    add_gen(collapse_cmd);
    add_n(collapse_cmd);
    collapse_cmd->add_option("--policy", policy_text, "lex | topdim");

    auto* top_cmd = app.add_subcommand("top-experiment", "Collapse top cells of X(Sigma_n \\ D_n) only");
    add_n(top_cmd);
    top_cmd->add_option("--policy", policy_text, "lex | topdim");

    auto* certify_cmd = app.add_subcommand("certify", "Build and verify the redundancy certificate");
    add_n(certify_cmd);
    certify_cmd->add_option("--emit", emit_path, "Write the certificate as JSON lines");

    std::string cert_path;
    auto* verify_cmd = app.add_subcommand("verify-certificate", "Re-check a certificate written by certify --emit");
    verify_cmd->add_option("--in", cert_path, "JSON-lines certificate")->required();

    auto* fred_cmd = app.add_subcommand("fredpoint", "Round-by-round redundancy marking");
    add_n(fred_cmd);

    auto* tables_cmd = app.add_subcommand("tables", "Incidence tables of the collapse sequence");
    add_n(tables_cmd);

    auto* export_cmd = app.add_subcommand("export-matrix", "Write a boundary matrix in coordinate form");
    add_gen(export_cmd);
    add_n(export_cmd);
    export_cmd->add_option("--level", level, "Word length of the columns")->required();
    export_cmd->add_option("--ring", ring_text, "z | q | fp:P");
    export_cmd->add_option("--out", out_path, "Output path")->required();

    // CLI11 reports a stray word as a missing subcommand; name it instead
    for (int a = 1; a < argc; ++a) {
        const std::string arg = argv[a];
        if (arg.starts_with("-")) continue;
        if (!app.get_subcommand_no_throw(arg)) {
            err << "injwords: unknown subcommand '" << arg << "'\n";
            return usage_error;
        }
        break;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "injwords: " << e.what() << '\n';
        return usage_error;
    }

    const auto start = std::chrono::steady_clock::now();
    auto* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    json params = {{"n", n}};
    json result;

    try {
        if (command == "homology") {
            const auto ring = parse_ring(ring_text, n);
            params["gen"] = gen.describe();
            params["ring"] = ring.str();
            result = to_json(homology(build(gen, n), ring));
        } else if (command == "euler") {
            params["gen"] = gen.describe();
            result = euler_characteristic(build(gen, n));
        } else if (command == "collapse") {
            const auto policy = policy_of(policy_text);
            params["gen"] = gen.describe();
            params["policy"] = to_string(policy);
            result = to_json(greedy_collapse(build(gen, n), policy));
        } else if (command == "top-experiment") {
            const auto policy = policy_of(policy_text);
            require_range(n, 2, 8, command);
            params["policy"] = to_string(policy);
            result = to_json(top_collapse_experiment(n, policy));
        } else if (command == "certify") {
            require_range(n, 3, 8, command);
            const auto cert = build_certificate(n);
            std::size_t by_excess = 0;
            for (const auto& r : cert.records) by_excess += r.progress == Progress::excess;
            result = {{"n", n},
                      {"faces", cert.face_count()},
                      {"records", cert.records.size()},
                      {"excess_records", by_excess},
                      {"omega_records", cert.records.size() - by_excess},
                      {"acyclic", true}};
            if (!emit_path.empty()) {
                std::ofstream file(emit_path);
                if (!file) throw UsageError(emit_path + ": cannot open for writing");
                write_certificate_jsonl(file, cert);
                result["emitted"] = emit_path;
            }
        } else if (command == "verify-certificate") {
            std::ifstream file(cert_path);
            if (!file) throw UsageError(cert_path + ": cannot open certificate");
            Certificate cert;
            try {
                cert = read_certificate_jsonl(file);
            } catch (const std::exception& e) {
                throw CertificateError(cert_path + ": " + e.what());
            }
            verify_certificate(cert);
            params = {{"n", cert.n}, {"in", cert_path}};
            result = {{"n", cert.n},
                      {"faces", cert.face_count()},
                      {"records", cert.records.size()},
                      {"acyclic", true}};
        } else if (command == "fredpoint") {
            require_range(n, 3, 8, command);
            const auto fp = fred_fixed_point(n);
            result = {{"n", n},
                      {"faces", fp.faces},
                      {"rounds", fp.rounds()},
                      {"marked_per_round", fp.marked_per_round},
                      {"marked", fp.marked.size()},
                      {"complete", fp.complete()}};
        } else if (command == "tables") {
            require_range(n, 2, 4, command);
            out << incidence_tables(n);
            return ok;
        } else if (command == "export-matrix") {
            const auto ring = RingSpec::parse(ring_text);
            const auto c = build(gen, n);
            require_range(level, 2, n, "--level");
            const auto d = boundary_matrix(c, level, ring);
            std::ofstream file(out_path);
            std::ofstream rows_file(out_path + ".rows");
            std::ofstream cols_file(out_path + ".cols");
            if (!file || !rows_file || !cols_file) throw UsageError(out_path + ": cannot open for writing");
            write_coordinates(file, d, level);
            write_legend(rows_file, c.level(level - 1));
            write_legend(cols_file, c.level(level));
            params["gen"] = gen.describe();
            params["level"] = level;
            params["ring"] = ring.str();
            result = {{"out", out_path},
                      {"rows_legend", out_path + ".rows"},
                      {"cols_legend", out_path + ".cols"},
                      {"rows", d.rows()},
                      {"cols", d.cols()},
                      {"nonzeros", d.nonzeros()}};
        }
    } catch (const UsageError& e) {
        err << "injwords: " << e.what() << '\n';
        return usage_error;
    } catch (const CertificateError& e) {
        err << "injwords: " << e.what() << '\n';
        return computation_failure;
    } catch (const std::invalid_argument& e) {
        // generator files and other malformed input
        err << "injwords: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "injwords: " << command << " failed: " << e.what() << '\n';
        return computation_failure;
    }

    json report = {{"command", command}, {"parameters", params}, {"result", result}, {"version", kVersion}};
    if (!no_meta)
        report["duration_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << report.dump(2) << '\n';
    return ok;
}

} // namespace injwords::cli
