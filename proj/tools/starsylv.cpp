// starsylv: exact star-Sylvester system tool.
//
// Subcommands: solve, witness, verify, extract, analyze, gen, oracle,
// probe-char2. Exit codes are uniform across commands: 0 for a positive
// verdict (consistent / accepted / found / completed), 1 for a negative one
// (inconsistent / refuted / absent), 2 for usage, format or runtime errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "starsylv/oracle.hpp"
#include "starsylv/roth.hpp"
#include "starsylv/vecsolve.hpp"

using json = nlohmann::json;
using namespace starsylv;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json matrix_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

void emit(const json& report, bool as_json) {
    if (!as_json) return;
    std::cout << report.dump(2) << '\n';
}

int run_solve(const std::string& path, bool as_json, bool probe) {
    StarSylvesterSystem sys = parse_system(read_file(path), probe);
    Verdict v = solve(sys);
    json report{{"command", "solve"},
                {"field", sys.tag().name()},
                {"star", sys.mode() == StarMode::ConjugateTranspose ? "H" : "T"},
                {"m", sys.m()},
                {"n", sys.n()},
                {"ell", sys.ell()},
                {"verdict", v.consistent() ? "consistent" : "inconsistent"},
                {"rank", v.rank},
                {"rank_augmented", v.rank_augmented}};
    if (v.consistent()) {
        report["particular"] = matrix_json(v.solution->particular);
        report["homogeneous_dim"] = v.solution->dim;
    }
    if (as_json) {
        emit(report, true);
    } else {
        std::cout << "verdict: " << report["verdict"].get<std::string>() << '\n';
        if (v.consistent()) {
            std::cout << "homogeneous_dim: " << v.solution->dim << '\n';
            std::cout << "particular:\n" << serialize_matrix(v.solution->particular);
        } else {
            std::cout << "rank: " << v.rank << "\nrank_augmented: " << v.rank_augmented << '\n';
        }
    }
    return v.consistent() ? 0 : 1;
}

int run_witness(const std::string& path, const std::string& xfile, bool as_json, bool probe) {
    StarSylvesterSystem sys = parse_system(read_file(path), probe);
    ExactMatrix x = parse_matrix(sys.tag(), read_file(xfile));
    CongruenceWitness w = witness_from_solution(sys, x);
    json report{{"command", "witness"},
                {"accepted", w.accepted()},
                {"invertible", w.invertible},
                {"per_equation_ok", w.per_equation_ok},
                {"s", matrix_json(w.s)}};
    if (as_json) {
        emit(report, true);
    } else {
        std::cout << "accepted: " << (w.accepted() ? "true" : "false") << '\n';
        std::cout << "s:\n" << serialize_matrix(w.s);
    }
    return w.accepted() ? 0 : 1;
}

int run_verify(const std::string& path, const std::string& sfile, bool as_json, bool probe) {
    StarSylvesterSystem sys = parse_system(read_file(path), probe);
    ExactMatrix s = parse_matrix(sys.tag(), read_file(sfile));
    CongruenceWitness w = verify_congruence(sys, s);
    json report{{"command", "verify"},
                {"accepted", w.accepted()},
                {"invertible", w.invertible},
                {"per_equation_ok", w.per_equation_ok}};
    if (as_json) {
        emit(report, true);
    } else {
        std::cout << "accepted: " << (w.accepted() ? "true" : "false") << '\n';
        std::cout << "invertible: " << (w.invertible ? "true" : "false") << '\n';
        std::cout << "per_equation_ok:";
        for (bool ok : w.per_equation_ok) std::cout << ' ' << (ok ? "true" : "false");
        std::cout << '\n';
    }
    return w.accepted() ? 0 : 1;
}

int run_extract(const std::string& path, bool as_json, bool probe) {
    StarSylvesterSystem sys = parse_system(read_file(path), probe);
    auto x = extract_solution(sys);
    json report{{"command", "extract"}, {"verdict", x ? "found" : "absent"}};
    if (x) report["x"] = matrix_json(*x);
    if (as_json) {
        emit(report, true);
    } else {
        std::cout << "verdict: " << (x ? "found" : "absent") << '\n';
        if (x) std::cout << "x:\n" << serialize_matrix(*x);
    }
    return x ? 0 : 1;
}

int run_analyze(const std::string& path, const std::string& sfile, bool as_json, bool probe) {
    StarSylvesterSystem sys = parse_system(read_file(path), probe);
    std::optional<ExactMatrix> s;
    if (!sfile.empty()) s = parse_matrix(sys.tag(), read_file(sfile));
    ClaimReport rep = check_claims(sys, s);
    json report{{"command", "analyze"},
                {"dim_d", rep.dim_d},
                {"dim_d0", rep.dim_d0},
                {"dim_ker_phi_hat", rep.dim_ker_phi_hat},
                {"dim_im_phi_hat", rep.dim_im_phi_hat},
                {"dim_ker_phi0", rep.dim_ker_phi0},
                {"dim_im_phi0", rep.dim_im_phi0},
                {"rank_nullity_ok", rep.rank_nullity_ok},
                {"claim_ii", rep.claim_ii},
                {"claim_iii", rep.claim_iii},
                {"claim_iv", rep.claim_iv},
                {"s_provided", rep.s_provided}};
    bool all_ok = rep.claim_ii && rep.claim_iii && rep.claim_iv && rep.rank_nullity_ok;
    if (rep.s_provided) {
        report["claim_i"] = rep.claim_i;
        report["twist_ok"] = rep.twist_ok;
        all_ok = all_ok && rep.claim_i && rep.twist_ok;
    }
    if (as_json) {
        emit(report, true);
    } else {
        std::cout << "dim_d: " << rep.dim_d << "\ndim_d0: " << rep.dim_d0 << '\n';
        std::cout << "dim_ker_phi_hat: " << rep.dim_ker_phi_hat
                  << "\ndim_im_phi_hat: " << rep.dim_im_phi_hat << '\n';
        std::cout << "dim_ker_phi0: " << rep.dim_ker_phi0 << "\ndim_im_phi0: " << rep.dim_im_phi0
                  << '\n';
        std::cout << "rank_nullity_ok: " << (rep.rank_nullity_ok ? "true" : "false") << '\n';
        std::cout << "claim_ii: " << (rep.claim_ii ? "true" : "false") << '\n';
        std::cout << "claim_iii: " << (rep.claim_iii ? "true" : "false") << '\n';
        std::cout << "claim_iv: " << (rep.claim_iv ? "true" : "false") << '\n';
        if (rep.s_provided) {
            std::cout << "claim_i: " << (rep.claim_i ? "true" : "false") << '\n';
            std::cout << "twist_ok: " << (rep.twist_ok ? "true" : "false") << '\n';
        }
    }
    return all_ok ? 0 : 1;
}

int run_gen(const std::vector<std::string>& field_tokens, const std::string& star, std::size_t m,
            std::size_t n, std::size_t ell, std::uint64_t seed, std::int64_t entry_bound,
            std::uint64_t perturb_seed, bool perturb, const std::string& out_path, bool as_json,
            bool probe) {
    FieldTag tag = FieldTag::rationals();
    if (field_tokens.size() == 1 && field_tokens[0] == "Q") {
        tag = FieldTag::rationals();
    } else if (field_tokens.size() == 1 && field_tokens[0] == "QI") {
        tag = FieldTag::gaussian_rationals();
    } else if (field_tokens.size() == 2 && field_tokens[0] == "GF") {
        std::uint64_t p = std::stoull(field_tokens[1]);
        tag = probe ? FieldTag::prime_field_probe(p) : FieldTag::prime_field(p);
    } else {
        throw Error("--field expects Q, QI or GF <p>");
    }
    if (star != "T" && star != "H") throw Error("--star expects T or H");
    StarMode mode = star == "H" ? StarMode::ConjugateTranspose : StarMode::Transpose;

    GeneratedSystem g = gen_consistent(tag, mode, m, n, ell, seed, entry_bound);
    std::string text = perturb ? serialize_system(gen_perturbed(g.system, perturb_seed, entry_bound))
                               : serialize_system(g.system);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << text;
    } else if (as_json) {
        emit(json{{"command", "gen"}, {"system", text}, {"planted", matrix_json(g.planted)}}, true);
    } else {
        std::cout << text;
    }
    return 0;
}

int run_oracle(const std::string& path, std::uint64_t cap, bool as_json, bool probe) {
    StarSylvesterSystem sys = parse_system(read_file(path), probe);
    BruteForceVerdict v = brute_force_consistency(sys, cap);
    json report{{"command", "oracle"},
                {"verdict", v.consistent ? "consistent" : "inconsistent"},
                {"solutions", v.solutions.get_str()}};
    if (as_json) {
        emit(report, true);
    } else {
        std::cout << "verdict: " << (v.consistent ? "consistent" : "inconsistent") << '\n';
        std::cout << "solutions: " << v.solutions.get_str() << '\n';
    }
    return v.consistent ? 0 : 1;
}

int run_probe(std::size_t max_total_dim, std::uint64_t seed, std::size_t samples,
              const std::string& dump_dir, bool as_json, bool probe) {
    ProbeReport rep = probe_char2(max_total_dim, seed, samples, probe);
    std::size_t dumped = 0;
    for (std::size_t k = 0; k < rep.instances.size(); ++k) {
        const ProbeInstance& inst = rep.instances[k];
        if (inst.b_holds && !inst.a_holds && !dump_dir.empty()) {
            std::string name = dump_dir + "/probe_anomaly_" + std::to_string(k) + ".ssys";
            std::ofstream out(name, std::ios::binary);
            if (!out) throw Error("cannot write '" + name + "'");
            out << inst.system_text;
            ++dumped;
        }
    }
    if (as_json) {
        json instances = json::array();
        for (const ProbeInstance& inst : rep.instances)
            instances.push_back(json{{"m", inst.m},
                                     {"n", inst.n},
                                     {"ell", inst.ell},
                                     {"a_holds", inst.a_holds},
                                     {"b_holds", inst.b_holds}});
        emit(json{{"command", "probe-char2"},
                  {"samples", rep.instances.size()},
                  {"a_without_b", rep.count_a_without_b},
                  {"b_without_a", rep.count_b_without_a},
                  {"dumped", dumped},
                  {"instances", std::move(instances)}},
             true);
    } else {
        for (std::size_t k = 0; k < rep.instances.size(); ++k) {
            const ProbeInstance& inst = rep.instances[k];
            std::cout << "instance " << k << ": m " << inst.m << " n " << inst.n << " ell "
                      << inst.ell << " a_holds " << (inst.a_holds ? "true" : "false") << " b_holds "
                      << (inst.b_holds ? "true" : "false") << '\n';
        }
        std::cout << "summary: samples " << rep.instances.size() << " a_without_b "
                  << rep.count_a_without_b << " b_without_a " << rep.count_b_without_a << '\n';
    }
    // a_holds without b_holds would contradict the division-free direction of
    // the witness construction; treat it as a failure, never as data.
    return rep.count_a_without_b == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver and Roth-type congruence toolkit for systems of star-Sylvester equations"};
    app.require_subcommand(1);

    bool as_json = false;
    bool probe = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON reports");
    app.add_flag("--probe-char2-enable", probe, "allow GF(2) inputs (char-2 probe only)");

    std::string path, xfile, sfile, out_path, dump_dir;
    std::vector<std::string> field_tokens{"Q"};
    std::string star = "T";
    std::size_t m = 1, n = 1, ell = 1, samples = 20, max_total_dim = 3;
    std::uint64_t seed = 0, perturb_seed = 0, cap = 6561;
    std::int64_t entry_bound = 9;
    bool perturb = false;

    CLI::App* solve_cmd = app.add_subcommand("solve", "decide consistency, print the solution set");
    solve_cmd->add_option("path", path, ".ssys input")->required();

    CLI::App* witness_cmd = app.add_subcommand("witness", "build the congruence witness from a solution");
    witness_cmd->add_option("path", path, ".ssys input")->required();
    witness_cmd->add_option("--solution", xfile, "matrix file holding X")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify a congruence witness");
    verify_cmd->add_option("path", path, ".ssys input")->required();
    verify_cmd->add_option("--s", sfile, "matrix file holding S")->required();

    CLI::App* extract_cmd = app.add_subcommand("extract", "extract a solution from the pair-space solve");
    extract_cmd->add_option("path", path, ".ssys input")->required();

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "pair-space dimensions and claim checks");
    analyze_cmd->add_option("path", path, ".ssys input")->required();
    analyze_cmd->add_option("--s", sfile, "optional witness matrix file");

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a seeded consistent (or perturbed) system");
    gen_cmd->add_option("--field", field_tokens, "Q | QI | GF <p>")->expected(1, 2);
    gen_cmd->add_option("--star", star, "T | H");
    gen_cmd->add_option("--m", m, "rows of C_i");
    gen_cmd->add_option("--n", n, "rows of X");
    gen_cmd->add_option("--ell", ell, "number of equations");
    gen_cmd->add_option("--seed", seed, "generator seed");
    gen_cmd->add_option("--entry-bound", entry_bound, "numerator/denominator bound");
    CLI::Option* perturb_opt = gen_cmd->add_option("--perturb-seed", perturb_seed,
                                                   "also perturb C_1 with this seed");
    gen_cmd->add_option("--out", out_path, "write to file instead of stdout");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force consistency over GF(p)");
    oracle_cmd->add_option("path", path, ".ssys input")->required();
    oracle_cmd->add_option("--cap", cap, "enumeration cap for p^(n*m)");

    CLI::App* probe_cmd = app.add_subcommand("probe-char2", "exhaustive GF(2) probe of both conditions");
    probe_cmd->add_option("--max-total-dim", max_total_dim, "cap on m+n (default 3)");
    probe_cmd->add_option("--seed", seed, "sampling seed");
    probe_cmd->add_option("--samples", samples, "number of sampled instances");
    probe_cmd->add_option("--dump-dir", dump_dir, "directory for anomaly .ssys dumps");

    for (CLI::App* sc : {solve_cmd, witness_cmd, verify_cmd, extract_cmd, analyze_cmd, gen_cmd,
                         oracle_cmd, probe_cmd}) {
        sc->add_flag("--json", as_json, "emit machine-readable JSON reports");
        sc->add_flag("--probe-char2-enable", probe, "allow GF(2) inputs (char-2 probe only)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    perturb = perturb_opt->count() > 0;

    try {
        if (solve_cmd->parsed()) return run_solve(path, as_json, probe);
        if (witness_cmd->parsed()) return run_witness(path, xfile, as_json, probe);
        if (verify_cmd->parsed()) return run_verify(path, sfile, as_json, probe);
        if (extract_cmd->parsed()) return run_extract(path, as_json, probe);
        if (analyze_cmd->parsed()) return run_analyze(path, sfile, as_json, probe);
        if (gen_cmd->parsed())
            return run_gen(field_tokens, star, m, n, ell, seed, entry_bound, perturb_seed, perturb,
                           out_path, as_json, probe);
        if (oracle_cmd->parsed()) return run_oracle(path, cap, as_json, probe);
        if (probe_cmd->parsed())
            return run_probe(max_total_dim, seed, samples, dump_dir, as_json, probe);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
