// Command-line surface for the library: every operation behind stable JSON
// I/O. Output goes to stdout, diagnostics to stderr. Exit codes: 0 on
// success or a passing verdict, 1 on a failing verdict, 2 on malformed
// input.
#include "typeb/json_io.hpp"
#include "typeb/verify.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace typeb;

struct Options {
    int n = 0;
    std::string weight;
    std::string word;
    std::string triangle;
    std::string pattern;
    std::string policy = "ordered";
    std::uint64_t seed = 0;
    std::string format = "json";
    int max_len = 6;
};

std::vector<long long> parse_csv(const std::string& text) {
    std::vector<long long> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer list: '" + text + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

DominantWeight weight_of(const Options& o) {
    if (o.weight.empty()) throw std::invalid_argument("--weight is required");
    return weight_from_fundamental(o.n, parse_csv(o.weight));
}

// Payload flags accept inline JSON or @file.json.
ordered_json load_payload(const std::string& text) {
    try {
        if (!text.empty() && text.front() == '@') {
            std::ifstream in(text.substr(1));
            if (!in) throw std::invalid_argument("cannot open " + text.substr(1));
            return ordered_json::parse(in);
        }
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON payload: ") + e.what());
    }
}

Triangle triangle_of(const Options& o) {
    if (o.triangle.empty()) throw std::invalid_argument("--triangle is required");
    const Triangle T = triangle_from_json(load_payload(o.triangle));
    require_same_rank(T.n, o.n);
    return T;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

int emit_certificate(const Certificate& cert) {
    emit(cert.to_json());
    return cert.pass ? 0 : 1;
}

BasisPolicy policy_of(const Options& o) {
    if (o.policy == "ordered") return BasisPolicy::ordered();
    if (o.policy == "random-arranged") return BasisPolicy::random_arranged(o.seed);
    throw std::invalid_argument("unknown policy '" + o.policy + "'");
}

void add_common(CLI::App* cmd, Options& o, bool needs_weight) {
    cmd->add_option("--n", o.n, "rank")->required();
    auto* wopt = cmd->add_option("--weight", o.weight, "fundamental coordinates a1,...,an");
    if (needs_weight) wopt->required();
}

int run(int argc, char** argv) {
    CLI::App app{"type B monomial bases: weighted Dyck-path polytopes, Gelfand-Tsetlin patterns, PBW words"};
    app.require_subcommand(1);
    Options o;
    int exit_code = 0;

    auto* cells_cmd = app.add_subcommand("cells", "list the n^2 cells in << order");
    cells_cmd->add_option("--n", o.n, "rank")->required();
    cells_cmd->callback([&] {
        ordered_json out = ordered_json::array();
        for (Cell c : cells(o.n)) out.push_back({c.i, c.j});
        emit(out);
    });

    auto* dim_cmd = app.add_subcommand("dim", "dimension of L_lambda by the Weyl formula");
    add_common(dim_cmd, o, true);
    dim_cmd->callback([&] { std::cout << weyl_dim(weight_of(o)).str() << "\n"; });

    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate Pi_lambda or Gamma_lambda");
    enum_cmd->require_subcommand(1);
    auto* enum_pi = enum_cmd->add_subcommand("pi", "triangles of Pi_lambda in lexicographic order");
    auto* enum_gt = enum_cmd->add_subcommand("gt", "Gelfand-Tsetlin patterns of Gamma_lambda");
    for (CLI::App* sub : {enum_pi, enum_gt}) {
        add_common(sub, o, true);
        sub->add_option("--format", o.format, "json|jsonl")->check(CLI::IsMember({"json", "jsonl"}));
    }
    enum_pi->callback([&] {
        const auto pi = enumerate_pi(weight_of(o));
        if (o.format == "jsonl") {
            for (const auto& T : pi) emit(triangle_to_json(T));
        } else {
            ordered_json out = ordered_json::array();
            for (const auto& T : pi) out.push_back(triangle_to_json(T));
            emit(out);
        }
    });
    enum_gt->callback([&] {
        const auto gamma = enumerate_gt(weight_of(o));
        if (o.format == "jsonl") {
            for (const auto& R : gamma) emit(pattern_to_json(R));
        } else {
            ordered_json out = ordered_json::array();
            for (const auto& R : gamma) out.push_back(pattern_to_json(R));
            emit(out);
        }
    });

    auto* map_cmd = app.add_subcommand("map", "apply the transfer bijection");
    map_cmd->require_subcommand(1);
    auto* map_f = map_cmd->add_subcommand("f", "Gamma_lambda -> Pi_lambda");
    add_common(map_f, o, true);
    map_f->add_option("--pattern", o.pattern, "GT pattern JSON or @file")->required();
    map_f->callback([&] {
        const DominantWeight w = weight_of(o);
        const GTPattern R = pattern_from_json(load_payload(o.pattern), w);
        emit(triangle_to_json(f_map(R)));
    });
    auto* map_g = map_cmd->add_subcommand("g", "Pi_lambda -> Gamma_lambda");
    add_common(map_g, o, true);
    map_g->add_option("--triangle", o.triangle, "triangle JSON or @file")->required();
    map_g->callback([&] { emit(pattern_to_json(g_map(triangle_of(o), weight_of(o)))); });

    auto* member_cmd = app.add_subcommand("membership", "test a triangle against Pi_lambda");
    add_common(member_cmd, o, true);
    member_cmd->add_option("--triangle", o.triangle, "triangle JSON or @file")->required();
    member_cmd->callback([&] { emit(ordered_json(in_pi(triangle_of(o), weight_of(o)))); });

    auto* poly_cmd = app.add_subcommand("polytope", "H-representation of P_lambda");
    add_common(poly_cmd, o, true);
    poly_cmd->callback([&] { emit(hrep_to_json(polytope_h_rep(weight_of(o)))); });

    auto* norm_cmd = app.add_subcommand("normalize", "PBW-normalize a word into ordered monomials");
    norm_cmd->add_option("--n", o.n, "rank")->required();
    norm_cmd->add_option("--word", o.word, "space-separated i,j factors")->required();
    norm_cmd->callback([&] {
        const Word wd = parse_word(o.n, o.word);
        emit(lincomb_to_json(pbw_normalize(wd, StructureConstants::compute(o.n))));
    });

    auto* apply_cmd = app.add_subcommand("apply", "apply a word to the highest vector of L_lambda");
    add_common(apply_cmd, o, true);
    apply_cmd->add_option("--word", o.word, "space-separated i,j factors")->required();
    apply_cmd->callback([&] {
        const DominantWeight w = weight_of(o);
        const Word wd = parse_word(o.n, o.word);
        const IrredModule m = irreducible_module(w);
        emit(modvec_to_json(m.mod, apply_word(m.mod, wd, m.highest)));
    });

    auto* basis_cmd = app.add_subcommand("verify-basis", "check that the monomial vectors form a basis");
    add_common(basis_cmd, o, true);
    basis_cmd->add_option("--policy", o.policy, "ordered|random-arranged")
        ->check(CLI::IsMember({"ordered", "random-arranged"}));
    basis_cmd->add_option("--seed", o.seed, "seed for random-arranged");
    basis_cmd->callback([&] { exit_code = emit_certificate(verify_basis(weight_of(o), policy_of(o))); });

    auto* str_cmd = app.add_subcommand("straighten", "decompose an out-of-Pi ordered monomial over the basis");
    add_common(str_cmd, o, true);
    str_cmd->add_option("--word", o.word, "ordered word (<<-sorted factors)");
    str_cmd->add_option("--triangle", o.triangle, "exponent triangle JSON or @file");
    str_cmd->callback([&] {
        Triangle M;
        if (!o.word.empty() == !o.triangle.empty())
            throw std::invalid_argument("straighten needs exactly one of --word / --triangle");
        if (!o.word.empty()) {
            const Word wd = parse_word(o.n, o.word);
            for (std::size_t k = 0; k + 1 < wd.factors.size(); ++k)
                if (ll_less(wd.factors[k + 1], wd.factors[k]))
                    throw std::invalid_argument("straighten expects an ordered word");
            M = log_word(wd);
        } else {
            M = triangle_of(o);
        }
        exit_code = emit_certificate(straighten(weight_of(o), M).cert);
    });

    auto* mink_cmd = app.add_subcommand("minkowski", "split T as T' + U along the minimal fundamental direction");
    add_common(mink_cmd, o, true);
    mink_cmd->add_option("--triangle", o.triangle, "triangle JSON or @file")->required();
    mink_cmd->callback([&] { exit_code = emit_certificate(minkowski_decompose(weight_of(o), triangle_of(o)).cert); });

    auto* graded_cmd = app.add_subcommand("graded-dims", "grade census of Pi against filtration ranks");
    add_common(graded_cmd, o, true);
    graded_cmd->callback([&] { exit_code = emit_certificate(graded_dims(weight_of(o)).cert); });

    auto* degen_cmd = app.add_subcommand("degen-check", "graded independence of the monomial basis");
    add_common(degen_cmd, o, true);
    degen_cmd->callback([&] { exit_code = emit_certificate(degeneration_basis_check(weight_of(o))); });

    auto* scan_cmd = app.add_subcommand("conjecture-scan", "evidence scan for the subexpression conjecture");
    add_common(scan_cmd, o, true);
    scan_cmd->add_option("--max-len", o.max_len, "sample words up to this length");
    scan_cmd->add_option("--seed", o.seed, "sampling seed");
    scan_cmd->callback([&] { emit(conjecture_scan(weight_of(o), o.max_len, o.seed)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
