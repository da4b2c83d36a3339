// uq: exact computations in U_q(g) and its positive part.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "uq/autos.hpp"
#include "uq/parser.hpp"
#include "uq/structure.hpp"
#include "uq/verify.hpp"

namespace {

using namespace uq;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string type;        // "A2" or "B2", empty when --cartan given
    std::string cartan_file;
    int cap = 10;
    std::string word;        // "1,2,1,2"
    int degree = 0;
    bool machine = false;
};

ReducedWord parse_word(const std::string& s) {
    ReducedWord w;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        w.letters.push_back(std::stoi(item));
    if (w.letters.empty()) throw InvalidArgument("empty word");
    return w;
}

struct Context {
    RewriteSystem rs;
    std::optional<TypeTag> type;
    NameTable names;
};

Context make_context(const Options& opt) {
    CartanData cd = CartanData::preset(TypeTag::A2);
    std::optional<TypeTag> type;
    if (!opt.cartan_file.empty()) {
        std::ifstream in(opt.cartan_file);
        if (!in) throw InvalidArgument("cannot open " + opt.cartan_file);
        cd = CartanData::from_stream(in);
    } else {
        type = opt.type == "B2" ? TypeTag::B2 : TypeTag::A2;
        cd = CartanData::preset(*type);
    }
    Context ctx{RewriteSystem(cd, opt.cap), type, {}};
    if (type)
        for (const auto& tag : named_tags(*type))
            ctx.names.emplace(tag, named(ctx.rs, *type, tag).element);
    return ctx;
}

ReducedWord word_or_default(const Context& ctx, const Options& opt) {
    if (!opt.word.empty()) return parse_word(opt.word);
    auto words = longest_words(ctx.rs.cartan());
    if (words.empty()) throw InvalidArgument("no reduced word available");
    return words.front();
}

// --- subcommand bodies; return the process exit code ---

int cmd_nf(const Context& ctx, const std::string& expr) {
    std::cout << render(parse_element(ctx.rs, ctx.names, expr)) << '\n';
    return kExitOk;
}

int cmd_mul(const Context& ctx, const std::string& a, const std::string& b) {
    AlgElement x = parse_element(ctx.rs, ctx.names, a);
    AlgElement y = parse_element(ctx.rs, ctx.names, b);
    std::cout << render(ctx.rs.multiply(x, y)) << '\n';
    return kExitOk;
}

int cmd_comm(const Context& ctx, const std::string& a, const std::string& b) {
    AlgElement x = parse_element(ctx.rs, ctx.names, a);
    AlgElement y = parse_element(ctx.rs, ctx.names, b);
    std::cout << render(ctx.rs.commutator(x, y)) << '\n';
    return kExitOk;
}

int cmd_qcomm(const Context& ctx, const std::string& a, const std::string& b,
              const std::string& scalar) {
    AlgElement x = parse_element(ctx.rs, ctx.names, a);
    AlgElement y = parse_element(ctx.rs, ctx.names, b);
    AlgElement c = parse_element(ctx.rs, ctx.names, scalar);
    if (c.terms().size() != 1 || !c.terms().begin()->first.empty())
        throw InvalidArgument("qcomm scalar must be a rational function in q");
    std::cout << render(
                     ctx.rs.q_commutator(x, y, c.terms().begin()->second))
              << '\n';
    return kExitOk;
}

int cmd_root_vectors(const Context& ctx, const Options& opt) {
    RootVectorTable table = root_vectors(ctx.rs, word_or_default(ctx, opt));
    std::cout << table.export_text();
    return kExitOk;
}

int cmd_straighten(const Context& ctx, const Options& opt,
                   const std::string& pair) {
    auto comma = pair.find(',');
    if (comma == std::string::npos)
        throw InvalidArgument("--pair expects i,j");
    int i = std::stoi(pair.substr(0, comma));
    int j = std::stoi(pair.substr(comma + 1));
    RootVectorTable table = root_vectors(ctx.rs, word_or_default(ctx, opt));
    StraighteningRelation rel = ls_straighten(ctx.rs, table, i, j);
    std::cout << "q_scalar = " << rel.q_scalar.str() << '\n';
    if (rel.coefficients.empty()) std::cout << "(no correction terms)\n";
    for (const auto& [exps, c] : rel.coefficients) {
        std::cout << "(";
        for (std::size_t t = 0; t < exps.size(); ++t)
            std::cout << (t ? "," : "") << exps[t];
        std::cout << ") : " << c.str() << '\n';
    }
    return kExitOk;
}

int cmd_center(const Context& ctx, const Options& opt) {
    RootVectorTable table = root_vectors(ctx.rs, word_or_default(ctx, opt));
    auto basis = center_basis(ctx.rs, table, opt.degree);
    std::cout << "dimension " << basis.size() << '\n';
    for (const auto& x : basis) std::cout << render(x) << '\n';
    return kExitOk;
}

int cmd_check_central(const Context& ctx, const std::string& expr) {
    AlgElement x = parse_element(ctx.rs, ctx.names, expr);
    bool central = check_central(ctx.rs, x);
    std::cout << (central ? "central" : "not central") << '\n';
    return central ? kExitOk : kExitMathFailure;
}

int cmd_check_normal(const Context& ctx, const std::string& expr) {
    AlgElement x = parse_element(ctx.rs, ctx.names, expr);
    auto res = check_normal(ctx.rs, x);
    if (!res.certificate) {
        // absence of a certificate is a report, not a failure
        std::cout << "certificate unavailable for i=" << res.failing_index
                  << '\n';
        return kExitOk;
    }
    std::cout << "normal; q-commutation scalars:\n";
    for (std::size_t i = 0; i < res.certificate->scalars.size(); ++i)
        std::cout << "  E" << i + 1 << ": "
                  << res.certificate->scalars[i].str() << '\n';
    return kExitOk;
}

int cmd_check_auto(const Context& ctx, const std::string& file) {
    std::ifstream in(file);
    if (!in) throw InvalidArgument("cannot open " + file);
    EndoSpec spec = parse_endo_file(ctx.rs, ctx.names, in);
    EndoReport rep = verify_endo(ctx.rs, spec);
    for (const auto& line : rep.lines) std::cout << line << '\n';
    if (!rep.passed) return kExitMathFailure;
    std::cout << (linear_part_invertible(ctx.rs, spec)
                      ? "linear part invertible"
                      : "linear part singular")
              << '\n';
    return kExitOk;
}

int cmd_braid_check(const Context& ctx, bool machine) {
    int n = ctx.rs.cartan().rank();
    bool ok = true;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto rep = verify_braid_relation(ctx.rs, i, j);
            ok = ok && rep.passed;
            if (machine) {
                std::cout << (rep.passed ? "PASS" : "FAIL") << " braid-" << i
                          << '-' << j << '\n';
            } else {
                for (const auto& line : rep.lines) std::cout << line << '\n';
            }
        }
    return ok ? kExitOk : kExitMathFailure;
}

int cmd_verify_paper(const Context& ctx, bool machine, bool negative) {
    if (!ctx.type)
        throw InvalidArgument("verify-paper requires --type A2 or --type B2");
    auto checks = paper_checks(ctx.rs, *ctx.type, negative);
    std::cout << format_checks(checks, machine);
    return all_passed(checks) ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in quantised enveloping algebras"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--type", opt.type, "preset type")
        ->check(CLI::IsMember({"A2", "B2"}));
    app.add_option("--cartan", opt.cartan_file,
                   "Cartan matrix file (rank line, then rows)");
    app.add_option("--cap", opt.cap, "degree cap (default 10)");
    app.add_option("--word", opt.word, "reduced word, e.g. 1,2,1,2");
    app.add_option("--degree", opt.degree, "graded degree");
    app.add_flag("--machine", opt.machine, "machine-readable output");

    std::string expr_a, expr_b, scalar, pair, auto_file;
    bool negative = false;

    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("expr", expr_a)->required();
    auto* mul = app.add_subcommand("mul", "product, normalized");
    mul->add_option("lhs", expr_a)->required();
    mul->add_option("rhs", expr_b)->required();
    auto* comm = app.add_subcommand("comm", "commutator xy - yx");
    comm->add_option("lhs", expr_a)->required();
    comm->add_option("rhs", expr_b)->required();
    auto* qcomm = app.add_subcommand("qcomm", "q-commutator xy - c yx");
    qcomm->add_option("lhs", expr_a)->required();
    qcomm->add_option("rhs", expr_b)->required();
    qcomm->add_option("scalar", scalar)->required();
    auto* rv =
        app.add_subcommand("root-vectors", "root vectors of a reduced word");
    auto* st = app.add_subcommand("straighten",
                                  "straightening relation for a root pair");
    st->add_option("--pair", pair, "positions i,j with i<j")->required();
    auto* ce = app.add_subcommand("center", "center basis in a given degree");
    auto* cc =
        app.add_subcommand("check-central", "is the element central?");
    cc->add_option("expr", expr_a)->required();
    auto* cn = app.add_subcommand("check-normal",
                                  "q-commutation certificate, if any");
    cn->add_option("expr", expr_a)->required();
    auto* ca = app.add_subcommand("check-auto",
                                  "verify a generator-image file");
    ca->add_option("--file", auto_file)->required();
    auto* bc = app.add_subcommand("braid-check", "verify braid relations");
    auto* vp = app.add_subcommand("verify-paper",
                                  "run the named regression checks");
    vp->add_flag("--self-test-negative", negative,
                 "inject a deliberately failing identity");

    // global options (--type, --cap, ...) may follow the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        Context ctx = make_context(opt);
        if (nf->parsed()) return cmd_nf(ctx, expr_a);
        if (mul->parsed()) return cmd_mul(ctx, expr_a, expr_b);
        if (comm->parsed()) return cmd_comm(ctx, expr_a, expr_b);
        if (qcomm->parsed()) return cmd_qcomm(ctx, expr_a, expr_b, scalar);
        if (rv->parsed()) return cmd_root_vectors(ctx, opt);
        if (st->parsed()) return cmd_straighten(ctx, opt, pair);
        if (ce->parsed()) return cmd_center(ctx, opt);
        if (cc->parsed()) return cmd_check_central(ctx, expr_a);
        if (cn->parsed()) return cmd_check_normal(ctx, expr_a);
        if (ca->parsed()) return cmd_check_auto(ctx, auto_file);
        if (bc->parsed()) return cmd_braid_check(ctx, opt.machine);
        if (vp->parsed()) return cmd_verify_paper(ctx, opt.machine, negative);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMathFailure;
    }
    return kExitUsage;
}
