#include "isobar/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "isobar/connectivity.hpp"
#include "isobar/construct.hpp"
#include "isobar/dot.hpp"
#include "isobar/errors.hpp"
#include "isobar/grinberg.hpp"
#include "isobar/oracle.hpp"
#include "isobar/three_h.hpp"

namespace isobar::cli {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    if (path.empty())
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot open " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

PlanarMap read_map(const std::string& path, std::istream& in) {
    return parse_map(slurp(path, in));
}

// The single-threaded build honors any positive cap, but the variable must
// still be well-formed.
void check_thread_cap() {
    const char* raw = std::getenv("ISOBAR_THREADS");
    if (!raw) return;
    const std::string value(raw);
    std::size_t used = 0;
    int threads = 0;
    try {
        threads = std::stoi(value, &used);
    } catch (const std::exception&) {
        throw ValidationError("ISOBAR_THREADS must be a positive integer");
    }
    if (used != value.size() || threads < 1)
        throw ValidationError("ISOBAR_THREADS must be a positive integer");
}

void print_certificate_line(const Certificate& cert, std::ostream& out) {
    switch (cert.kind) {
        case Certificate::Kind::case_a:
            out << "certificate: case_a face=" << cert.case_a.face_id
                << " weight=" << cert.case_a.weight << "\n";
            break;
        case Certificate::Kind::case_b:
            out << "certificate: case_b vertex=" << cert.case_b.vertex << " faces="
                << cert.case_b.face_ids[0] << "," << cert.case_b.face_ids[1] << ","
                << cert.case_b.face_ids[2] << "\n";
            break;
        case Certificate::Kind::exhaustive:
            out << "certificate: exhaustive partitions=" << cert.exhaustive.partitions.size()
                << "\n";
            break;
    }
}

void print_cycle_line(const HamiltonianCycle& cycle, std::ostream& out) {
    out << "cycle:";
    for (int v : cycle.order()) out << " " << v;
    out << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"planar map toolkit: generation, certificates, cycle search"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate the layered triangulation or its dual map");
    int alpha = 1, beta = 2;
    bool gen_dual = false;
    gen->add_option("--alpha", alpha, "number of annulus layers")->required();
    gen->add_option("--beta", beta, "base ring scale, 2 mod 3")->required();
    gen->add_flag("--dual", gen_dual, "emit the dual cubic map instead");

    // fixture
    auto* fixture_cmd = app.add_subcommand("fixture", "emit an embedded reference map");
    std::string fixture_name;
    fixture_cmd->add_option("name", fixture_name, "tetrahedron|cube|dodecahedron|tutte")
        ->required();

    // Commands below read a map from --input or stdin.
    const auto add_input = [](CLI::App* cmd, std::string& path) {
        cmd->add_option("--input", path, "map file (default: stdin)");
    };

    auto* check = app.add_subcommand("check", "emit a non-Hamiltonicity certificate");
    std::string check_input, certificate_out;
    bool check_exhaustive = false;
    int check_ceiling = 32;
    add_input(check, check_input);
    check->add_flag("--exhaustive", check_exhaustive,
                    "always build the full partition-by-partition certificate");
    check->add_option("--ceiling", check_ceiling, "face count ceiling for exhaustive search");
    check->add_option("--certificate-out", certificate_out, "write the full certificate here");

    auto* hamilton = app.add_subcommand("hamilton", "search for Hamiltonian cycles");
    std::string hamilton_input;
    bool hamilton_all = false, hamilton_count = false;
    std::uint64_t hamilton_budget = 50'000'000;
    add_input(hamilton, hamilton_input);
    auto* all_flag = hamilton->add_flag("--all", hamilton_all, "list every cycle");
    hamilton->add_flag("--count", hamilton_count, "print only the number of cycles")
        ->excludes(all_flag);
    hamilton->add_option("--budget", hamilton_budget, "search expansion budget");

    auto* qconn = app.add_subcommand("qconn", "quasi-connectivity and minimal nontrivial cuts");
    std::string qconn_input;
    int qconn_ceiling = 6;
    add_input(qconn, qconn_input);
    qconn->add_option("--ceiling", qconn_ceiling, "largest cut size to try");

    auto* dual_cmd = app.add_subcommand("dual", "emit the dual map");
    std::string dual_input;
    add_input(dual_cmd, dual_input);

    auto* threeh = app.add_subcommand("threeh", "search for a 3H edge coloring");
    std::string threeh_input;
    std::uint64_t threeh_budget = 50'000'000;
    add_input(threeh, threeh_input);
    threeh->add_option("--budget", threeh_budget, "search expansion budget");

    auto* verify = app.add_subcommand("verify", "check a certificate against a map");
    std::string verify_input, verify_certificate;
    add_input(verify, verify_input);
    verify->add_option("--certificate", verify_certificate, "certificate file")->required();

    auto* export_cmd = app.add_subcommand("export", "render the map");
    std::string export_input, export_format, highlight_cycle_path;
    int highlight_face = -1;
    add_input(export_cmd, export_input);
    export_cmd->add_option("--format", export_format, "output format (dot)")->required();
    auto* face_opt =
        export_cmd->add_option("--highlight-face", highlight_face, "bold this face's border");
    export_cmd->add_option("--highlight-cycle", highlight_cycle_path,
                           "bold the edges of the cycle in this file")
        ->excludes(face_opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& parse_error) {
        const int code = app.exit(parse_error, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        check_thread_cap();

        if (gen->parsed()) {
            const ConstructionParams params{alpha, beta};
            const PlanarMap map =
                gen_dual ? grinberg_map(params) : grinberg_triangulation(params).map;
            out << serialize_map(map);
            return exit_ok;
        }

        if (fixture_cmd->parsed()) {
            out << serialize_map(fixture(fixture_name));
            return exit_ok;
        }

        if (check->parsed()) {
            const PlanarMap map = read_map(check_input, in);
            std::optional<Certificate> cert;
            if (check_exhaustive) {
                // Skip the weight shortcuts: list every partition with its
                // obstruction, or concede when some partition has none.
                Certificate exhaustive;
                exhaustive.kind = Certificate::Kind::exhaustive;
                exhaustive.exhaustive.partitions =
                    isobaric_partitions(map, std::nullopt, check_ceiling);
                bool complete = true;
                for (const IsobaricPartition& partition : exhaustive.exhaustive.partitions) {
                    const auto obstruction = partition_obstruction(map, partition);
                    if (!obstruction) {
                        complete = false;
                        break;
                    }
                    exhaustive.exhaustive.obstructions.push_back(*obstruction);
                }
                if (complete) cert = std::move(exhaustive);
            } else {
                cert = certify_non_hamiltonian(map, check_ceiling);
            }
            if (!cert) {
                out << "no certificate\n";
                return exit_negative;
            }
            print_certificate_line(*cert, out);
            if (!certificate_out.empty()) {
                std::ofstream file(certificate_out);
                if (!file) throw ValidationError("cannot write " + certificate_out);
                file << serialize_certificate(*cert);
            }
            return exit_ok;
        }

        if (hamilton->parsed()) {
            const PlanarMap map = read_map(hamilton_input, in);
            if (hamilton_all || hamilton_count) {
                const EnumerationResult result =
                    enumerate_hamiltonian_cycles(map, 1'000'000, hamilton_budget);
                if (result.status == SearchResult::Status::budget_exhausted)
                    throw BudgetError("cycle enumeration ran out of budget");
                if (hamilton_count) {
                    out << result.cycles.size() << "\n";
                    return result.cycles.empty() ? exit_negative : exit_ok;
                }
                for (const HamiltonianCycle& cycle : result.cycles) print_cycle_line(cycle, out);
                if (result.cycles.empty()) {
                    out << "none\n";
                    return exit_negative;
                }
                return exit_ok;
            }
            const SearchResult result = find_hamiltonian_cycle(map, hamilton_budget);
            if (result.status == SearchResult::Status::budget_exhausted)
                throw BudgetError("cycle search ran out of budget");
            if (result.status == SearchResult::Status::none) {
                out << "none\n";
                return exit_negative;
            }
            print_cycle_line(*result.cycle, out);
            return exit_ok;
        }

        if (qconn->parsed()) {
            const PlanarMap map = read_map(qconn_input, in);
            const auto result = quasi_connectivity(map, qconn_ceiling);
            if (!result) {
                out << "no nontrivial cut\n";
                return exit_negative;
            }
            out << "q=" << result->q << "\n";
            for (const NontrivialCut& cut : result->cuts) {
                out << "cut";
                for (const Edge& e : cut.edges) out << " " << e.first << "-" << e.second;
                out << "\n";
            }
            return exit_ok;
        }

        if (dual_cmd->parsed()) {
            out << serialize_map(dual(read_map(dual_input, in)));
            return exit_ok;
        }

        if (threeh->parsed()) {
            const PlanarMap map = read_map(threeh_input, in);
            const auto fact = find_3h_factorization(map, threeh_budget);
            if (!fact) {
                out << "none\n";
                return exit_negative;
            }
            for (const auto& [edge, color] : fact->edge_colors)
                out << "edge " << edge.first << " " << edge.second << " " << color << "\n";
            for (int f = 0; f < map.face_count(); ++f)
                out << "face " << f << " " << fact->face_colors[f] << "\n";
            out << "sigma " << fact->sigma[0] << " " << fact->sigma[1] << " " << fact->sigma[2]
                << " " << fact->sigma[3] << "\n";
            return exit_ok;
        }

        if (verify->parsed()) {
            const PlanarMap map = read_map(verify_input, in);
            const Certificate cert = parse_certificate(slurp(verify_certificate, in));
            const auto problem = check_certificate_error(map, cert);
            if (problem) {
                out << "invalid: " << *problem << "\n";
                return exit_negative;
            }
            out << "valid\n";
            return exit_ok;
        }

        if (export_cmd->parsed()) {
            if (export_format != "dot")
                throw ValidationError("unknown export format '" + export_format + "'");
            const PlanarMap map = read_map(export_input, in);
            std::vector<Edge> highlight;
            if (highlight_face >= 0) {
                if (highlight_face >= map.face_count())
                    throw ValidationError("map has no face " + std::to_string(highlight_face));
                const Face& face = map.face(highlight_face);
                for (const Dart& d : face.boundary)
                    highlight.push_back(edge_of(d.first, d.second));
            } else if (!highlight_cycle_path.empty()) {
                std::istringstream cycle_text(slurp(highlight_cycle_path, in));
                std::vector<int> order;
                for (int v; cycle_text >> v;) order.push_back(v);
                if (!is_hamiltonian_cycle(map, order))
                    throw ValidationError("highlight file is not a Hamiltonian cycle of the map");
                highlight = HamiltonianCycle(map, order).edges();
            }
            out << export_dot(map, highlight);
            return exit_ok;
        }
    } catch (const BudgetError& budget_error) {
        err << "error: " << budget_error.what() << "\n";
        return exit_budget;
    } catch (const std::exception& failure) {
        err << "error: " << failure.what() << "\n";
        return exit_usage;
    }
    return exit_usage; // unreachable: a subcommand is required
}

} // namespace isobar::cli
