// Command-line front end: gen, build, query, check, bench, space.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "sno/check.hpp"
#include "sno/container.hpp"
#include "sno/diagrams.hpp"
#include "sno/errors.hpp"
#include "sno/geometry.hpp"

namespace {

volatile std::uint64_t g_sink = 0;  // keeps timed loops from being optimized out

enum Exit : int { kOk = 0, kUsage = 1, kValidation = 2, kMismatch = 3, kIo = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path);
    return buf.str();
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError("error writing " + path);
}

sno::ClassTag parse_class(const std::string& name) {
    const auto cls = sno::class_from_name(name);
    if (!cls) throw UsageError("unknown class '" + name + "'");
    return *cls;
}

sno::ImplTag parse_impl(const std::string& impl, sno::ClassTag cls) {
    if (impl == "unified") return sno::ImplTag::unified;
    if (impl == "wavelet") {
        if (cls == sno::ClassTag::circle) return sno::ImplTag::wavelet_circle;
        if (cls == sno::ClassTag::trapezoid) return sno::ImplTag::wavelet_trapezoid;
        throw UsageError("impl 'wavelet' is only available for classes circle and trapezoid");
    }
    throw UsageError("unknown impl '" + impl + "'");
}

std::string_view impl_name(sno::ImplTag tag) { return tag == sno::ImplTag::unified ? "unified" : "wavelet"; }

sno::LoadedOracle load(const std::string& path) {
    const std::string bytes = read_file(path);
    return sno::load_oracle(std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

std::string join(const std::vector<std::uint32_t>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i != 0) out += ' ';
        out += std::to_string(ids[i]);
    }
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Succinct navigation oracles for polygon-circle style intersection graphs"};
    app.require_subcommand(1);

    std::string cls_name, impl = "unified", input, output, oracle_path, op;
    std::uint32_t n = 1, k = 4, locality = 0;
    std::uint64_t seed = 0, queries = 1000;
    std::vector<std::uint32_t> args;
    bool explicit_degrees = false, inject_mismatch = false;

    auto* gen = app.add_subcommand("gen", "Generate a random diagram");
    gen->add_option("--class", cls_name, "Graph class")->required();
    gen->add_option("--n", n, "Vertex count")->required();
    gen->add_option("--k", k, "Corners per polygon (kpolygon) or upper bound (polygon)");
    gen->add_option("--seed", seed, "Random seed")->required();
    gen->add_option("--locality", locality, "Bound corner displacement (0 = uniform)");
    gen->add_option("--out", output, "Output diagram file")->required();

    auto* build = app.add_subcommand("build", "Build an oracle file from a diagram");
    build->add_option("--class", cls_name, "Graph class")->required();
    build->add_option("--impl", impl, "unified or wavelet");
    build->add_option("--input", input, "Diagram file")->required();
    build->add_option("--out", output, "Output oracle file")->required();
    build->add_flag("--explicit-degrees", explicit_degrees, "Store degrees for O(1) lookup");

    auto* query = app.add_subcommand("query", "Answer one query from an oracle file");
    query->add_option("--oracle", oracle_path, "Oracle file")->required();
    query->add_option("--op", op, "degree, adjacent or neighborhood")
        ->required()
        ->check(CLI::IsMember({"degree", "adjacent", "neighborhood"}));
    query->add_option("--args", args, "Vertex ids")->required()->expected(1, 2);

    auto* check = app.add_subcommand("check", "Verify an oracle against brute force");
    check->add_option("--class", cls_name, "Graph class")->required();
    check->add_option("--input", input, "Diagram file")->required();
    check->add_option("--impl", impl, "unified or wavelet");
    check->add_flag("--inject-mismatch", inject_mismatch)->group("");

    auto* bench = app.add_subcommand("bench", "Time build and queries; CSV on stdout");
    bench->add_option("--class", cls_name, "Graph class")->required();
    bench->add_option("--n", n, "Vertex count")->required();
    bench->add_option("--queries", queries, "Queries per operation");
    bench->add_option("--seed", seed, "Random seed");
    bench->add_option("--k", k, "Corners per polygon");
    bench->add_option("--impl", impl, "unified or wavelet");
    bench->add_option("--locality", locality, "Generator locality (0 = uniform)");

    auto* space = app.add_subcommand("space", "Print the bit breakdown of an oracle file");
    space->add_option("--oracle", oracle_path, "Oracle file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (gen->parsed()) {
            const auto cls = parse_class(cls_name);
            const auto d = sno::generate(cls, {n, k, seed, locality});
            write_file(output, sno::render_diagram(d));
            return kOk;
        }
        if (build->parsed()) {
            const auto cls = parse_class(cls_name);
            const auto tag = parse_impl(impl, cls);
            const auto parsed = sno::parse_diagram(read_file(input), cls);
            const auto oracle = sno::build_oracle(parsed.diagram, cls, {tag, explicit_degrees});
            const auto bytes = sno::save_oracle(*oracle, cls);
            write_file(output, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
            return kOk;
        }
        if (query->parsed()) {
            const auto loaded = load(oracle_path);
            const auto& o = *loaded.oracle;
            if (op == "adjacent") {
                if (args.size() != 2) throw UsageError("adjacent needs two vertex ids");
                std::cout << (o.adjacent(args[0], args[1]) ? "true" : "false") << '\n';
            } else {
                if (args.size() != 1) throw UsageError(op + " needs one vertex id");
                if (op == "degree") {
                    std::cout << o.degree(args[0]) << '\n';
                } else {
                    std::cout << join(o.neighborhood(args[0])) << '\n';
                }
            }
            return kOk;
        }
        if (check->parsed()) {
            const auto cls = parse_class(cls_name);
            const auto tag = parse_impl(impl, cls);
            const auto parsed = sno::parse_diagram(read_file(input), cls);
            std::unique_ptr<sno::GraphOracle> oracle = sno::build_oracle(parsed.diagram, cls, {tag, false});
            if (inject_mismatch) oracle = std::make_unique<sno::FaultyOracle>(std::move(oracle));
            const auto truth = sno::native_matrix(parsed.diagram, cls);
            const auto report = sno::run_check(*oracle, truth);
            std::cout << (report.ok() ? "match" : "MISMATCH") << " n=" << report.n << " pairs=" << report.pairs
                      << " adjacency_mismatches=" << report.adjacency_mismatches
                      << " degree_mismatches=" << report.degree_mismatches
                      << " neighborhood_mismatches=" << report.neighborhood_mismatches << '\n';
            for (const auto& ex : report.examples) std::cout << "  " << ex << '\n';
            return report.ok() ? kOk : kMismatch;
        }
        if (bench->parsed()) {
            const auto cls = parse_class(cls_name);
            const auto tag = parse_impl(impl, cls);
            const auto d = sno::generate(cls, {n, k, seed, locality});
            const auto t0 = std::chrono::steady_clock::now();
            const auto oracle = sno::build_oracle(d, cls, {tag, false});
            const double build_ms = elapsed_ms(t0);
            const std::uint64_t corners = sno::to_polygon_diagram(d, cls).corners();
            const std::uint64_t bits = oracle->space_report().total();

            std::mt19937_64 rng(seed ^ 0x5eedULL);
            auto pick = [&] { return static_cast<std::uint32_t>(rng() % n) + 1; };
            const std::uint64_t q = std::max<std::uint64_t>(queries, 1);
            std::uint64_t sink = 0;
            auto t = std::chrono::steady_clock::now();
            for (std::uint64_t i = 0; i < q; ++i) sink += oracle->adjacent(pick(), pick());
            const double adjacent_ns = elapsed_ms(t) * 1e6 / static_cast<double>(q);
            t = std::chrono::steady_clock::now();
            for (std::uint64_t i = 0; i < q; ++i) sink += oracle->degree(pick());
            const double degree_ns = elapsed_ms(t) * 1e6 / static_cast<double>(q);
            std::uint64_t outputs = 0;
            t = std::chrono::steady_clock::now();
            for (std::uint64_t i = 0; i < q; ++i) outputs += oracle->neighborhood(pick()).size();
            const double neigh_ns = elapsed_ms(t) * 1e6 / static_cast<double>(std::max<std::uint64_t>(outputs, 1));
            g_sink = sink;

            std::printf("class,impl,n,N,build_ms,bits_total,bits_per_vertex,adjacent_ns,degree_ns,neigh_ns_per_out\n");
            std::printf("%s,%s,%u,%llu,%.3f,%llu,%.3f,%.1f,%.1f,%.1f\n", std::string(sno::class_name(cls)).c_str(),
                        std::string(impl_name(tag)).c_str(), n, static_cast<unsigned long long>(corners), build_ms,
                        static_cast<unsigned long long>(bits), static_cast<double>(bits) / n, adjacent_ns,
                        degree_ns, neigh_ns);
            return kOk;
        }
        if (space->parsed()) {
            const auto loaded = load(oracle_path);
            const auto report = loaded.oracle->space_report();
            std::cout << "class " << sno::class_name(loaded.cls) << '\n';
            std::cout << "impl " << impl_name(loaded.oracle->impl()) << '\n';
            for (const auto& c : report.components) std::cout << c.name << ' ' << c.bits << '\n';
            std::cout << "total " << report.total() << '\n';
            std::cout << "bits_per_vertex " << static_cast<double>(report.total()) / loaded.oracle->vertex_count()
                      << '\n';
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const sno::RangeError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const sno::ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kValidation;
    } catch (const sno::FormatError& e) {
        std::cerr << "invalid oracle file: " << e.what() << '\n';
        return kValidation;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    }
    return kUsage;
}
