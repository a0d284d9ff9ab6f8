// Command line front end: diagram validation, canonical forms, bounded
// simplification and equivalence search, invariants, Shannon capacity,
// prime factorization, format conversion, and a seeded generator.
//
// Exit codes: 0 success, 1 semantic failure or verdict "no", 2 usage,
// 3 resource or numerical failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "inca/cache.hpp"
#include "inca/canonical.hpp"
#include "inca/capacity.hpp"
#include "inca/coloring.hpp"
#include "inca/errors.hpp"
#include "inca/fingerprint.hpp"
#include "inca/io.hpp"
#include "inca/linking.hpp"
#include "inca/quandle.hpp"
#include "inca/search.hpp"
#include "inca/sum.hpp"
#include "inca/theta.hpp"
#include "inca/wcode.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inca::GaussDiagram load_diagram(const std::string& path) {
    auto m = inca::parse_diagram(read_input(path));
    inca::require_valid(m);
    return m;
}

inca::MultiQuandle load_quandle(const std::string& spec) {
    if (spec.find(':') != std::string::npos) return inca::quandle_from_spec(spec);
    auto q = inca::parse_quandle(read_input(spec));
    q.name = spec;
    inca::require_valid(q);
    return q;
}

std::optional<inca::ResultCache> open_cache(const std::string& flag) {
    std::string path = flag;
    if (path.empty())
        if (const char* env = std::getenv("INCA_CACHE")) path = env;
    if (path.empty()) return std::nullopt;
    return inca::ResultCache(path);
}

void print_witness(const inca::GaussDiagram& start, const std::vector<inca::MoveInstance>& w) {
    inca::GaussDiagram cur = inca::canonical(start).diagram;
    for (const auto& inst : w) {
        std::cout << "move: " << inca::describe(inst, cur) << "\n";
        cur = inca::canonical(inca::apply(cur, inst)).diagram;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Gauss-diagram calculus for Inca foams"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    std::string file, file_b, to_format, cache_path, policy_name = "aut", linking_name;
    std::vector<std::string> quandle_specs, component_specs;
    int depth = 8, max_states = 20000, max_steps = 16, kmax = 2, workers = 1;
    int interactions = 0, marks = 0, limit = 512;
    std::uint64_t seed = 0;
    bool stable = false, use_false = false, want_wcode = false, want_presentation = false;
    bool want_theta = false, print_code = false;

    auto* validate_cmd = app.add_subcommand("validate", "check a diagram document");
    validate_cmd->add_option("file", file, "diagram file or -")->required();

    auto* canon_cmd = app.add_subcommand("canon", "print the canonical form");
    canon_cmd->add_option("file", file)->required();
    canon_cmd->add_flag("--code", print_code, "print only the canonical code");

    auto* simplify_cmd = app.add_subcommand("simplify", "greedy interaction-count descent");
    simplify_cmd->add_option("file", file)->required();
    simplify_cmd->add_option("--max-steps", max_steps, "total move budget");
    simplify_cmd->add_option("--max-states", max_states);
    simplify_cmd->add_flag("--stable", stable, "allow (de)stabilization");
    simplify_cmd->add_option("--cache", cache_path, "result cache file (or INCA_CACHE)");

    auto* equiv_cmd = app.add_subcommand("equiv", "bounded equivalence search");
    equiv_cmd->add_option("file_a", file)->required();
    equiv_cmd->add_option("file_b", file_b)->required();
    equiv_cmd->add_option("--depth", depth, "total move-path budget");
    equiv_cmd->add_option("--max-states", max_states);
    equiv_cmd->add_flag("--stable", stable);
    equiv_cmd->add_flag("--use-false", use_false, "w-tangle mode moves");
    equiv_cmd->add_option("--workers", workers);

    auto* inv_cmd = app.add_subcommand("invariants", "linking, colorings, w-code");
    inv_cmd->add_option("file", file)->required();
    inv_cmd->add_option("--quandle", quandle_specs, "family:n or a table file (repeatable)");
    inv_cmd->add_option("--linking", linking_name, "full|unframed|reduced|reduced-unframed");
    inv_cmd->add_flag("--wcode", want_wcode, "emit the underlying w-tangle code");
    inv_cmd->add_flag("--presentation", want_presentation, "emit the fundamental quandle");
    inv_cmd->add_option("--cache", cache_path);

    auto* cap_cmd = app.add_subcommand("capacity", "Shannon capacity lower bounds");
    cap_cmd->add_option("file", file)->required();
    cap_cmd->add_option("--quandle", quandle_specs)->required();
    cap_cmd->add_option("--kmax", kmax, "longest message length");
    cap_cmd->add_option("--policy", policy_name, "aut or aut+triples");
    cap_cmd->add_flag("--theta", want_theta, "theta of the length-1 message graph");
    cap_cmd->add_option("--limit", limit, "message graph vertex limit");

    auto* fact_cmd = app.add_subcommand("factorize", "agent-wise prime factorization");
    fact_cmd->add_option("file", file)->required();
    fact_cmd->add_option("--depth", depth);
    fact_cmd->add_option("--max-states", max_states);
    fact_cmd->add_flag("--stable", stable);

    auto* conv_cmd = app.add_subcommand("convert", "export dot or wcode");
    conv_cmd->add_option("file", file)->required();
    conv_cmd->add_option("--to", to_format, "dot|wcode")->required();

    auto* gen_cmd = app.add_subcommand("gen", "seeded random diagram");
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--component", component_specs, "kind:size (repeatable)")->required();
    gen_cmd->add_option("--interactions", interactions);
    gen_cmd->add_option("--marks", marks);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
    }

    if (validate_cmd->parsed()) {
        auto m = inca::parse_diagram(read_input(file));
        auto violations = inca::validate(m);
        if (violations.empty()) {
            std::cout << "valid: yes\n";
            return 0;
        }
        for (const auto& v : violations) std::cout << "violation: " << v << "\n";
        return 1;
    }

    if (canon_cmd->parsed()) {
        auto m = load_diagram(file);
        if (print_code)
            std::cout << "code: " << inca::canonical_code(m) << "\n";
        else
            std::cout << inca::serialize(m);
        return 0;
    }

    if (simplify_cmd->parsed()) {
        auto m = load_diagram(file);
        inca::SearchBudget budget{max_steps, max_states, stable, false};
        auto cache = open_cache(cache_path);
        std::string key = "simplify|d=" + std::to_string(max_steps) +
                          "|s=" + std::to_string(max_states) + "|st=" + (stable ? "1" : "0") +
                          "|" + inca::canonical_code(m);
        std::string text;
        if (cache) {
            if (auto hit = cache->lookup(key)) text = *hit;
        }
        if (text.empty()) {
            text = inca::serialize(inca::simplify(m, budget));
            if (cache) cache->store(key, text);
        }
        std::cout << text;
        return 0;
    }

    if (equiv_cmd->parsed()) {
        auto a = load_diagram(file);
        auto b = load_diagram(file_b);
        inca::SearchBudget budget{depth, max_states, stable, use_false};
        inca::Verdict v = inca::equivalent(a, b, budget, workers);
        std::cout << "verdict: " << inca::verdict_name(v.kind) << "\n";
        if (v.yes()) {
            std::cout << "moves: " << v.witness.size() << "\n";
            print_witness(a, v.witness);
        }
        if (v.no()) std::cout << "certificate: " << v.certificate << "\n";
        return v.no() ? 1 : 0;
    }

    if (inv_cmd->parsed()) {
        auto m = load_diagram(file);
        std::string code = inca::canonical_code(m);
        std::cout << "graph: " << inca::underlying_graph(m).code << "\n";

        if (quandle_specs.empty()) {
            auto cache = open_cache(cache_path);
            std::string key = "fp|default|" + code;
            std::string digest;
            if (cache) {
                if (auto hit = cache->lookup(key)) digest = *hit;
            }
            if (digest.empty()) {
                digest = inca::fingerprint(m).digest();
                if (cache) cache->store(key, digest);
            }
            // Last digest line holds name=count pairs.
            auto counts = digest.substr(digest.rfind('\n') + 1);
            std::istringstream cs(counts);
            std::string item;
            while (std::getline(cs, item, ';'))
                if (auto eq = item.find('='); eq != std::string::npos)
                    std::cout << "colorings[" << item.substr(0, eq) << "]: " << item.substr(eq + 1)
                              << "\n";
        } else if (quandle_specs.size() == 1) {
            std::cout << "colorings: " << inca::count_colorings(m, load_quandle(quandle_specs[0]))
                      << "\n";
        } else {
            for (const auto& spec : quandle_specs) {
                auto q = load_quandle(spec);
                std::cout << "colorings[" << q.name << "]: " << inca::count_colorings(m, q) << "\n";
            }
        }

        if (!linking_name.empty()) {
            auto variant = inca::linking_variant_from_name(linking_name);
            std::cout << "linking[" << linking_name << "]: " << inca::linking_graph(m, variant).code
                      << "\n";
        } else {
            std::cout << "linking[reduced-unframed]: "
                      << inca::linking_graph(m, inca::LinkingVariant::ReducedUnframed).code << "\n";
        }
        if (want_wcode) std::cout << "wcode: " << inca::w_code(m).text << "\n";
        if (want_presentation) std::cout << inca::quandle_presentation(m).text();
        return 0;
    }

    if (cap_cmd->parsed()) {
        auto m = load_diagram(file);
        auto q = load_quandle(quandle_specs.at(0));
        inca::MessagePolicy policy;
        if (policy_name == "aut") policy = {true, false};
        else if (policy_name == "aut+triples") policy = {true, true};
        else throw CLI::ValidationError("--policy", "expected aut or aut+triples");
        auto report = inca::cap_report(m, q, kmax, policy, limit);
        for (std::size_t k = 0; k < report.cap.size(); ++k)
            std::cout << "cap[" << k + 1 << "]: " << report.cap[k] << "\n";
        std::cout << "lower_bound: " << report.lower_bound << "\n";
        std::cout << "alphabet: " << report.alphabet << "\n";
        std::cout << "certified: lower-bounds-only\n";
        if (want_theta) {
            auto g1 = inca::message_graph(m, q, 1, policy, limit);
            std::cout << "theta[1]: " << inca::lovasz_theta(g1) << "\n";
        }
        return 0;
    }

    if (fact_cmd->parsed()) {
        auto m = load_diagram(file);
        inca::SearchBudget budget{depth, max_states, stable, false};
        auto f = inca::prime_factorize(m, budget);
        std::cout << "factors: " << f.factors.size() << "\n";
        std::cout << "units: " << f.units.size() << "\n";
        std::cout << "exhaustive: " << (f.exhaustive ? "yes" : "no") << "\n";
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            const auto& fac = f.factors[i];
            std::cout << "factor[" << i << "]: agent=" << inca::to_string(fac.agent, m)
                      << " interactions=" << fac.diagram.interaction_count()
                      << " trivial=" << inca::verdict_name(fac.triviality.kind) << "\n";
        }
        return 0;
    }

    if (conv_cmd->parsed()) {
        auto m = load_diagram(file);
        if (to_format == "dot") std::cout << inca::export_dot(m);
        else if (to_format == "wcode") std::cout << "wcode: " << inca::w_code(m).text << "\n";
        else throw CLI::ValidationError("--to", "expected dot or wcode");
        return 0;
    }

    if (gen_cmd->parsed()) {
        inca::RandomSpec spec;
        spec.seed = seed;
        spec.interactions = interactions;
        spec.marks = marks;
        for (const auto& cs : component_specs) {
            auto colon = cs.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("--component", "expected kind:size");
            std::string kind = cs.substr(0, colon);
            int size = std::stoi(cs.substr(colon + 1));
            if (kind == "cycle") spec.components.emplace_back(inca::ComponentKind::Cycle, size);
            else if (kind == "path") spec.components.emplace_back(inca::ComponentKind::Path, size);
            else throw CLI::ValidationError("--component", "kind must be cycle or path");
        }
        std::cout << inca::serialize(inca::random_diagram(spec));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const inca::resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const inca::numerical_failure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
