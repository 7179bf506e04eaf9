// Command-line workbench for exact two-variable pseudo-differential
// operator calculus: ring arithmetic, dressing reconstruction, growth
// certificates, spectral-pair analysis, and a worked-example gallery.

#include "psdo/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace psdo;

namespace {

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    return json::parse(in); // parse errors carry the byte position
}

void save(const std::string& path, const json& j) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pseudo-differential operator workbench in two variables"};
    app.require_subcommand(1);

    std::string in1, in2, out, out_prefix;
    int window = -6;
    int prec = 10;
    long kexp = 2;
    std::string alpha_str = "1";
    std::string kind = "A";
    long anchor_k = 0, anchor_l = 0;
    bool anchor_given = false;
    bool inverse = false;
    std::size_t p_index = 0, q_index = 1;
    int cutoff = 3;
    int bounds = 4;
    std::string m_str = "1";
    std::string pp_path;
    std::vector<std::string> files;

    auto* mul = app.add_subcommand("mul", "product of two operator files");
    mul->add_option("a", in1)->required();
    mul->add_option("b", in2)->required();
    mul->add_option("-o,--out", out);

    auto* comm = app.add_subcommand("commutator", "commutator of two operator files");
    comm->add_option("a", in1)->required();
    comm->add_option("b", in2)->required();
    comm->add_option("-o,--out", out);

    auto* sato = app.add_subcommand("sato-reconstruct",
                                    "dressing operator of a canonical subspace");
    sato->add_option("--in", in1)->required();
    sato->add_option("--alpha", alpha_str);
    sato->add_option("--out", out);

    auto* root = app.add_subcommand("root", "k-th root of a monic operator");
    root->add_option("in", in1)->required();
    root->add_option("-k,--k", kexp)->required();
    root->add_option("--window", window);
    root->add_option("-o,--out", out);

    auto* norm = app.add_subcommand("normalize", "normalize a commuting pair");
    norm->add_option("p", in1)->required();
    norm->add_option("q", in2)->required();
    norm->add_option("-o,--out-prefix", out_prefix)->required();

    auto* dr = app.add_subcommand("dress", "dressing operator of an almost-normalized pair");
    dr->add_option("l1", in1)->required();
    dr->add_option("l2", in2)->required();
    dr->add_option("--window", window);
    dr->add_option("-o,--out", out);

    auto* schur = app.add_subcommand("schur", "spectral data of a commuting generator list");
    schur->add_option("gens", files)->required()->expected(-2);
    schur->add_option("--p", p_index);
    schur->add_option("--q", q_index);
    schur->add_option("--window", window);
    schur->add_option("--bounds", bounds);
    schur->add_option("-o,--out-prefix", out_prefix)->required();

    auto* psi = app.add_subcommand("psi1", "coordinate trick between z- and ut-series");
    psi->add_option("in", in1)->required();
    psi->add_flag("--inverse", inverse);
    psi->add_option("-o,--out", out);

    auto* invars = app.add_subcommand("invariants", "valuation invariants of a generator list");
    invars->add_option("gens", files)->required()->expected(-1);
    invars->add_option("--cutoff", cutoff);
    invars->add_option("-o,--out", out);

    std::vector<std::string> agens_files, wbasis_files;
    auto* vschur = app.add_subcommand("validate-schur", "validate a candidate spectral pair");
    vschur->add_option("--agens", agens_files)->required()->expected(-1);
    vschur->add_option("--wbasis", wbasis_files)->required()->expected(-1);
    vschur->add_option("--cutoff", cutoff);
    vschur->add_option("-o,--out", out);

    auto* ba = app.add_subcommand("ba", "apply an operator to the exponential kernel");
    ba->add_option("in", in1)->required();
    std::string eig_s;
    ba->add_option("--eigen-s", eig_s,
                   "conjugator file: verify the eigenvalue series of the input instead");
    ba->add_option("--window", window);
    ba->add_option("-o,--out", out);

    auto* cond = app.add_subcommand("check-condition", "growth-cone certificate");
    cond->add_option("in", in1)->required();
    cond->add_option("--alpha", alpha_str);
    cond->add_option("--kind", kind)->check(CLI::IsMember({"A", "strong", "super"}));
    auto* ak = cond->add_option("--anchor-k", anchor_k);
    cond->add_option("--anchor-l", anchor_l);
    cond->add_option("-o,--out", out);

    std::string which_example;
    auto* exa = app.add_subcommand("example", "worked example gallery");
    exa->add_option("name", which_example)
        ->required()
        ->check(CLI::IsMember({"cusp", "toric", "calogero-symbols"}));
    exa->add_option("--prec", prec);
    exa->add_option("--window", window);
    exa->add_option("--pp", pp_path, "potential series file for calogero-symbols");
    exa->add_option("--m", m_str, "coupling parameter for calogero-symbols");
    exa->add_option("-o,--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*mul) {
            save(out, to_json(eplus_mul(eplus_from_json(load(in1)), eplus_from_json(load(in2)))));
        } else if (*comm) {
            save(out, to_json(commutator(eplus_from_json(load(in1)), eplus_from_json(load(in2)))));
        } else if (*sato) {
            SubspaceW w = subspace_from_json(load(in1));
            Rat alpha = Rat::parse(alpha_str);
            auto [s, cert] = reconstruct_s_certified(w, alpha);
            json j = to_json(s);
            j["certificate"] = to_json(cert);
            save(out, j);
        } else if (*root) {
            save(out, to_json(kth_root(eplus_from_json(load(in1)), kexp, window)));
        } else if (*norm) {
            FullNormalizeResult r = normalize(eplus_from_json(load(in1)), eplus_from_json(load(in2)));
            save(out_prefix + ".s.json", to_json(EPlusOp::from_d1(r.s, 0)));
            save(out_prefix + ".p.json", to_json(r.p));
            save(out_prefix + ".q.json", to_json(r.q));
        } else if (*dr) {
            save(out, to_json(dress(eplus_from_json(load(in1)), eplus_from_json(load(in2)), window)));
        } else if (*schur) {
            std::vector<EPlusOp> gens;
            for (const auto& f : files) gens.push_back(eplus_from_json(load(f)));
            SchurOptions opts;
            opts.window_floor = window;
            opts.i_bound = opts.j_bound = bounds;
            SchurRingData data = schur_from_ring(gens, p_index, q_index, opts);
            save(out_prefix + ".s.json", to_json(data.s_total));
            json a = json::array();
            for (const auto& v : data.a_elements) a.push_back(to_json(v));
            save(out_prefix + ".a.json", a);
            save(out_prefix + ".w.json", to_json(data.w));
        } else if (*psi) {
            if (inverse)
                save(out, to_json(psi1_inv(utseries_from_json(load(in1)))));
            else
                save(out, to_json(psi1(zseries_from_json(load(in1)))));
        } else if (*invars) {
            std::vector<UTSeries> gens;
            for (const auto& f : files) gens.push_back(utseries_from_json(load(f)));
            InvariantsNA inv = invariants_NA(ring_closure(gens, cutoff));
            save(out, json{{"n_a", inv.n_a},
                           {"tilde_n_a", inv.tilde_n_a},
                           {"admissible", inv.admissible},
                           {"strongly_admissible", inv.strongly_admissible},
                           {"cutoff", cutoff},
                           {"note", "gcds of absolute t-orders; upper bounds at this cutoff"}});
        } else if (*vschur) {
            std::vector<UTSeries> ag, wb;
            for (const auto& f : agens_files) ag.push_back(utseries_from_json(load(f)));
            for (const auto& f : wbasis_files) wb.push_back(utseries_from_json(load(f)));
            SchurCutoffs cuts;
            cuts.word_cutoff = cutoff;
            save(out, to_json(validate_schur_pair(ag, wb, cuts)));
        } else if (*ba) {
            EPlusOp t = eplus_from_json(load(in1));
            if (!eig_s.empty()) {
                EPlusOp s = eplus_from_json(load(eig_s));
                save(out, to_json(eigenvalue_check(t, s, window)));
            } else {
                save(out, to_json(apply_to_exponential(t)));
            }
        } else if (*cond) {
            EPlusOp p = eplus_from_json(load(in1));
            Rat alpha = Rat::parse(alpha_str);
            anchor_given = ak->count() > 0;
            GrowthCert cert;
            if (!anchor_given && kind == "A") {
                cert = in_Pi_alpha(p, alpha);
            } else {
                if (!anchor_given) {
                    GammaDeg g = p.gamma_order();
                    anchor_k = g.d1;
                    anchor_l = g.d2;
                }
                if (kind == "A")
                    cert = check_A(p, alpha, anchor_k, anchor_l);
                else if (kind == "strong")
                    cert = check_strong(p, alpha, anchor_k, anchor_l);
                else
                    cert = check_super_strong(p, alpha, anchor_k, anchor_l);
            }
            save(out, to_json(cert));
        } else if (*exa) {
            if (which_example == "cusp") {
                CuspExample ex = example_burchnall_chaundy(prec, window);
                save(out, to_json(ex.report));
            } else if (which_example == "toric") {
                ToricExample ex = example_toric(prec, window);
                save(out, to_json(ex.report));
            } else {
                XSeries pp = pp_path.empty()
                                 ? XSeries::monomial(0, 0, Rat(1), prec) // placeholder potential
                                 : xseries_from_json(load(pp_path));
                CalogeroExample ex = example_calogero_symbols(pp, Rat::parse(m_str));
                save(out, to_json(ex.report));
            }
        }
    } catch (const io_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
