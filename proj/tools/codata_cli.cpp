#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "codata/coalgebra.hpp"
#include "codata/gen.hpp"
#include "codata/json_io.hpp"
#include "codata/suite.hpp"

namespace {

using namespace codata;

StreamV stream_fixture(const std::string& name) {
    if (name == "nats") return nats();
    if (name == "const") return const_stream(Value(7));
    if (name == "pairs") return pair_stream(1, 0);
    throw CLI::ValidationError("--fixture", "unknown stream fixture: " + name);
}

TriV tri_fixture(const std::string& name) {
    if (name == "constant") return const_tri(Value(7), Value(1));
    if (name == "position") return position_tri();
    if (name == "hash") return hash_tri(kDefaultSeed);
    throw CLI::ValidationError("--fixture", "unknown tri fixture: " + name);
}

void print_stream(const StreamV& s, int n, bool json) {
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const Value& v : stake(n, s)) out.push_back(value_json(v));
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "[";
    bool first = true;
    for (const Value& v : stake(n, s)) {
        if (!first) std::cout << ", ";
        first = false;
        std::cout << v.str();
    }
    std::cout << "]\n";
}

void print_triangle(const TriV& t, int n, bool json) {
    FiniteTriangle<Value, Value> ft = truncate(n, t);
    if (json) {
        std::cout << finite_triangle_json(ft).dump() << "\n";
        return;
    }
    for (std::size_t j = 0; j < ft.layers.size(); ++j) {
        std::cout << j << ": prefix=[";
        bool first = true;
        for (const Value& e : ft.layers[j].prefix) {
            if (!first) std::cout << ", ";
            first = false;
            std::cout << e.str();
        }
        std::cout << "] core=" << ft.layers[j].core.str() << "\n";
    }
}

std::uint64_t seed_from_env() {
    if (const char* env = std::getenv("CODATA_SEED"))
        return std::strtoull(env, nullptr, 0);
    return kDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codata: streams, infinite triangular matrices, and their law harness"};
    app.require_subcommand(1);

    std::string sfixture = "nats";
    std::string tfixture = "constant";
    std::string term_fixture = "position";
    int n = 5;
    bool json = false;

    GenConfig cfg;
    cfg.seed = seed_from_env();

    // stream take | stream redec
    auto* stream_cmd = app.add_subcommand("stream", "stream operations");
    stream_cmd->require_subcommand(1);
    auto* stream_take = stream_cmd->add_subcommand("take", "first n elements");
    auto* stream_redec = stream_cmd->add_subcommand("redec", "cosubstitution demo");
    for (auto* c : {stream_take, stream_redec}) {
        c->add_option("--fixture", sfixture, "nats|const|pairs")->capture_default_str();
        c->add_option("-n", n, "window size")->capture_default_str();
        c->add_flag("--json", json, "machine output");
    }

    // tri truncate | tri redec | tri diag
    auto* tri_cmd = app.add_subcommand("tri", "triangular matrix operations");
    tri_cmd->require_subcommand(1);
    auto* tri_trunc = tri_cmd->add_subcommand("truncate", "first n layers");
    auto* tri_redec_cmd = tri_cmd->add_subcommand("redec", "redecoration demo");
    auto* tri_diag = tri_cmd->add_subcommand("diag", "diagonal stream");
    for (auto* c : {tri_trunc, tri_redec_cmd, tri_diag}) {
        c->add_option("--fixture", tfixture, "constant|position|hash")->capture_default_str();
        c->add_option("-n", n, "window size")->capture_default_str();
        c->add_flag("--json", json, "machine output");
    }

    // terminal stream | terminal tri
    std::string coalg;
    auto* term_cmd = app.add_subcommand("terminal", "terminal coalgebra morphisms");
    term_cmd->require_subcommand(1);
    auto* term_stream = term_cmd->add_subcommand("stream", "terminal map into streams");
    term_stream->add_option("--coalg", coalg, "stream_stail|tri_tail_cut")->required();
    auto* term_tri = term_cmd->add_subcommand("tri", "terminal map into matrices");
    term_tri->add_option("--coalg", coalg, "tri_tail|tri_product")->required();
    for (auto* c : {term_stream, term_tri}) {
        c->add_option("--fixture", term_fixture, "carrier fixture")->capture_default_str();
        c->add_option("-n", n, "window size")->capture_default_str();
        c->add_flag("--json", json, "machine output");
    }

    // laws
    auto* laws = app.add_subcommand("laws", "run the consolidated law suite");
    laws->add_option("--depth", cfg.depth, "check depth")->capture_default_str();
    laws->add_option("--samples", cfg.samples, "samples per law")->capture_default_str();
    laws->add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
    laws->add_flag("--mutations", cfg.mutations, "include sabotaged instances");
    laws->add_flag("--json", json, "machine output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (stream_take->parsed()) {
            print_stream(stream_fixture(sfixture), n, json);
        } else if (stream_redec->parsed()) {
            // observe each suffix by the sum of its first two heads
            StreamFun<Value, Value> f{"head+head.tail", [](const StreamV& s) {
                                          return Value(shead(s).leaf_sum() +
                                                       shead(stail(s)).leaf_sum());
                                      }};
            print_stream(sredec(f, stream_fixture(sfixture)), n, json);
        } else if (tri_trunc->parsed()) {
            print_triangle(tri_fixture(tfixture), n, json);
        } else if (tri_redec_cmd->parsed()) {
            // redecorate each sub-matrix by the leaf sum of its head layer
            std::function<Value(const TriV&)> f = [](const TriV& t) {
                return Value(tri_head_value(t).leaf_sum());
            };
            print_triangle(redec(f, tri_fixture(tfixture)), n, json);
        } else if (tri_diag->parsed()) {
            print_stream(diag(tri_fixture(tfixture)), n, json);
        } else if (term_stream->parsed()) {
            if (coalg == "stream_stail") {
                StreamV x =
                    term_fixture == "position" ? nats() : stream_fixture(term_fixture);
                print_stream(terminal_to_stream(stream_terminal_coalgebra(), x), n, json);
            } else if (coalg == "tri_tail_cut") {
                print_stream(
                    terminal_to_stream(tri_as_stream_coalgebra(), tri_fixture(term_fixture)), n,
                    json);
            } else {
                std::cerr << "unknown coalgebra: " << coalg << "\n";
                return 2;
            }
        } else if (term_tri->parsed()) {
            if (coalg == "tri_tail") {
                print_triangle(terminal_to_tri(tri_terminal_coalgebra(), tri_fixture(term_fixture)),
                               n, json);
            } else if (coalg == "tri_product") {
                TriV x = ttail(tri_fixture(term_fixture));
                print_triangle(terminal_to_tri(tri_product_coalgebra(), x), n, json);
            } else {
                std::cerr << "unknown coalgebra: " << coalg << "\n";
                return 2;
            }
        } else if (laws->parsed()) {
            LawReport report = run_all_laws(cfg);
            if (json) {
                std::cout << report.to_json().dump(2) << "\n";
            } else {
                for (const auto& e : report.entries)
                    std::cout << to_string(e.status) << "  " << e.law_id << "  " << e.instance_id
                              << "\n";
                std::cout << "pass=" << report.count(LawStatus::Pass)
                          << " fail=" << report.count(LawStatus::Fail)
                          << " vacuous=" << report.count(LawStatus::Vacuous) << "\n";
            }
            return report_clean(report) ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
