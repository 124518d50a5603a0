#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zsig/cyclo.hpp"
#include "zsig/factor_fp.hpp"
#include "zsig/poly_io.hpp"
#include "zsig/resultant.hpp"
#include "zsig/sequences.hpp"
#include "zsig/suites.hpp"

namespace {

using namespace zsig;

SeqKind parse_kind(const std::string& k) {
    if (k == "F") return SeqKind::F;
    if (k == "S") return SeqKind::S;
    if (k == "L") return SeqKind::L;
    if (k == "U") return SeqKind::U;
    throw ConfigError("--kind must be one of F, S, L, U");
}

SeedKind seed_kind_for(SeqKind k) {
    switch (k) {
        case SeqKind::L: return SeedKind::LUCAS;
        case SeqKind::U: return SeedKind::LEHMER;
        default: return SeedKind::FG;
    }
}

struct CommonOpts {
    uint64_t characteristic = 0;
    int vars = 1;
    std::string kind = "F";
    std::string seed_a;
    std::string seed_b;

    SeedPair make_seed(SeqKind k) const {
        RingSpec ring(characteristic, vars);
        return SeedPair(seed_kind_for(k), parse_poly(seed_a, ring),
                        parse_poly(seed_b, ring));
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_seed = true) {
    cmd->add_option("--char", o.characteristic, "field characteristic (0 or prime)");
    cmd->add_option("--vars", o.vars, "number of variables (1..8)");
    cmd->add_option("--kind", o.kind, "sequence kind: F, S, L or U");
    auto* a = cmd->add_option("--seed-a", o.seed_a, "first seed polynomial");
    auto* b = cmd->add_option("--seed-b", o.seed_b, "second seed polynomial");
    if (need_seed) {
        a->required();
        b->required();
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw ConfigError("cannot open output file: " + out_path);
        f << text << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sequences of polynomial type: terms, primitive parts, "
                 "divisibility and identity verification"};
    app.require_subcommand(1);

    CommonOpts seq_o;
    uint64_t seq_n = 1;
    auto* seq_cmd = app.add_subcommand("seq", "print a sequence term");
    add_common(seq_cmd, seq_o);
    seq_cmd->add_option("--n", seq_n, "term index")->required();

    CommonOpts pp_o;
    uint64_t pp_n = 3;
    auto* pp_cmd = app.add_subcommand("primitive-part", "print a primitive part");
    add_common(pp_cmd, pp_o);
    pp_cmd->add_option("--n", pp_n, "term index (>= 3)")->required();

    CommonOpts sd_o;
    uint64_t sd_m = 1, sd_n = 1;
    auto* sd_cmd = app.add_subcommand("strongdiv", "check strong divisibility");
    add_common(sd_cmd, sd_o);
    sd_cmd->add_option("--m", sd_m, "first index")->required();
    sd_cmd->add_option("--n", sd_n, "second index")->required();

    std::string res_lemma;
    uint64_t res_m = 0, res_n = 0;
    auto* res_cmd = app.add_subcommand("resultant", "evaluate a resultant identity");
    res_cmd->add_option("--lemma", res_lemma, "RES2, MIX, PMN or ABN")->required();
    res_cmd->add_option("--m", res_m, "first index");
    res_cmd->add_option("--n", res_n, "second index")->required();

    uint64_t cyc_n = 1;
    auto* cyc_cmd = app.add_subcommand("cyclotomic", "print Phi_n(X, Y)");
    cyc_cmd->add_option("--n", cyc_n, "index")->required();

    uint64_t fac_char = 0;
    std::string fac_poly;
    uint64_t fac_seed = kDefaultFactorSeed;
    auto* fac_cmd = app.add_subcommand("factor", "factor a univariate polynomial mod p");
    fac_cmd->add_option("--char", fac_char, "prime characteristic")->required();
    fac_cmd->add_option("--poly", fac_poly, "polynomial to factor")->required();
    fac_cmd->add_option("--rand-seed", fac_seed, "splitting seed");

    std::string ver_suite, ver_out;
    SuiteConfig ver_cfg;
    auto* ver_cmd = app.add_subcommand("verify", "run a verification suite");
    ver_cmd->add_option("--suite", ver_suite,
                        "zsigmondy, lucas, lehmer, lemmas, valuation or frobenius")
        ->required();
    ver_cmd->add_option("--char", ver_cfg.characteristic, "field characteristic");
    ver_cmd->add_option("--vars", ver_cfg.vars, "number of variables");
    ver_cmd->add_option("--max-n", ver_cfg.max_n, "largest index checked");
    ver_cmd->add_option("--trials", ver_cfg.trials, "random seed pairs per battery");
    ver_cmd->add_option("--rand-seed", ver_cfg.rand_seed, "corpus seed");
    ver_cmd->add_option("--out", ver_out, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*seq_cmd) {
            SeqKind k = parse_kind(seq_o.kind);
            Sequence s(seq_o.make_seed(k), k, std::max<uint64_t>(seq_n, 4));
            std::cout << format_poly(s.term(seq_n)) << "\n";
            return 0;
        }
        if (*pp_cmd) {
            SeqKind k = parse_kind(pp_o.kind);
            Sequence s(pp_o.make_seed(k), k, std::max<uint64_t>(2 * pp_n, 8));
            PrimitivePartReport r = primitive_part(s, pp_n);
            std::cout << format_poly(r.primitive_part) << "\n";
            return 0;
        }
        if (*sd_cmd) {
            SeqKind k = parse_kind(sd_o.kind);
            uint64_t cap = std::max<uint64_t>(std::max(sd_m, sd_n), 4);
            Sequence s(sd_o.make_seed(k), k, cap);
            bool ok = strong_div_check(s, sd_m, sd_n);
            std::cout << (ok ? "pass" : "fail") << "\n";
            return ok ? 0 : 1;
        }
        if (*res_cmd) {
            ResLemma lemma;
            if (res_lemma == "RES2") lemma = ResLemma::RES2;
            else if (res_lemma == "MIX") lemma = ResLemma::MIX;
            else if (res_lemma == "PMN") lemma = ResLemma::PMN;
            else if (res_lemma == "ABN") lemma = ResLemma::ABN;
            else throw ConfigError("--lemma must be RES2, MIX, PMN or ABN");
            auto r = resultant_lemma_check(lemma, res_m, res_n);
            std::cout << r.value.get_str() << (r.pass ? " (unit)" : " (NOT a unit)")
                      << "\n";
            return r.pass ? 0 : 1;
        }
        if (*cyc_cmd) {
            std::cout << cyclotomic_int(cyc_n).to_string() << "\n";
            return 0;
        }
        if (*fac_cmd) {
            RingSpec ring(fac_char, 1);
            if (fac_char == 0) throw ConfigError("factor needs a prime --char");
            MPoly h = parse_poly(fac_poly, ring);
            FactorizationFp f = factor_fp(h, fac_seed);
            std::cout << f.unit.value;
            for (const auto& [g, m] : f.factors) {
                std::cout << " * (" << format_poly(g) << ")";
                if (m > 1) std::cout << "^" << m;
            }
            std::cout << "\n";
            return 0;
        }
        if (*ver_cmd) {
            SuiteReport rep = run_suite(ver_suite, ver_cfg);
            emit(rep.to_json(), ver_out);
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const zsig::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
