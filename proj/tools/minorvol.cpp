// Command-line front end: exact fractional-extremal computations, constructive
// decompositions, and batch verification suites.

#include "minorvol/decompose.hpp"
#include "minorvol/extremal.hpp"
#include "minorvol/graph.hpp"
#include "minorvol/verify.hpp"
#include "minorvol/volume.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace minorvol;

namespace {

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

WeightVector load_weights(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open weight file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return WeightVector::parse(buf.str());
}

Rational parse_rat_flag(const std::string& s) { return parse_rational(s); }

struct Output {
    std::string format = "json";  // json | tsv
    std::string out_path;

    void emit(const std::string& json_text, const std::string& tsv_text) const {
        const std::string& text = format == "tsv" ? tsv_text : json_text;
        if (out_path.empty()) {
            std::cout << text << "\n";
        } else {
            std::ofstream out(out_path);
            if (!out) throw PreconditionError("cannot open output file '" + out_path + "'");
            out << text << "\n";
        }
    }
};

// 12 significant digits for the human-readable column
std::string approx(const Rational& q) {
    std::ostringstream os;
    os << std::setprecision(12) << static_cast<double>(q);
    return os.str();
}

std::string report_tsv(const BoundReport& r) {
    std::ostringstream os;
    os << "quantity\tvalue\tapprox\tkind\tprovenance\n";
    os << r.quantity << "\t" << rational_str(r.value) << "\t" << approx(r.value) << "\t"
       << (r.kind == BoundKind::Exact ? "exact"
                                      : r.kind == BoundKind::Lower ? "lower" : "upper")
       << "\t" << r.provenance << "\n";
    return os.str();
}

nlohmann::ordered_json weights_json(const WeightVector& w) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [i, v] : w.entries()) obj[std::to_string(i)] = rational_str(v);
    return obj;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fractional extremal functions of graph minors"};
    app.require_subcommand(1);

    Output output;
    app.add_option("--format", output.format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--out", output.out_path, "write the report to a file");

    // --- vol ---------------------------------------------------------------
    auto* vol_cmd = app.add_subcommand("vol", "H-volume of a graph or weight vector");
    std::string vol_h, vol_g, vol_w;
    vol_cmd->add_option("pattern", vol_h, "graph H")->required();
    vol_cmd->add_option("host", vol_g, "host graph G");
    vol_cmd->add_option("--vector", vol_w, "weight vector file instead of a host");
    vol_cmd->add_option("--weights", vol_w, "vertex weights on the host");

    // --- cf-bound ----------------------------------------------------------
    auto* cfb_cmd = app.add_subcommand("cf-bound", "restricted support bound c_f^(n)");
    std::string cfb_h;
    int cfb_n = 3;
    cfb_cmd->add_option("graph", cfb_h)->required();
    cfb_cmd->add_option("--support", cfb_n, "support size n (2..6)");

    // --- ct ------------------------------------------------------------------
    auto* ct_cmd = app.add_subcommand("ct", "Turan-profile supremum c_T");
    std::string ct_h;
    int ct_cap = 20;
    ct_cmd->add_option("graph", ct_h)->required();
    ct_cmd->add_option("--cap", ct_cap, "exact-solve order cap");

    // --- closed-form ---------------------------------------------------------
    auto* cf_cmd = app.add_subcommand("closed-form", "exact c_f when a closed form applies");
    std::string cf_h;
    cf_cmd->add_option("graph", cf_h)->required();

    // --- gamma ----------------------------------------------------------------
    auto* gm_cmd = app.add_subcommand("gamma", "max density of H-minor-free complete multipartite graphs");
    std::string gm_h;
    int gm_max = 10;
    gm_cmd->add_option("graph", gm_h)->required();
    gm_cmd->add_option("--max-order", gm_max);

    // --- round ----------------------------------------------------------------
    auto* rd_cmd = app.add_subcommand("round", "volume-preserving integer rounding");
    std::string rd_h, rd_w;
    rd_cmd->add_option("graph", rd_h)->required();
    rd_cmd->add_option("weights", rd_w)->required();

    // --- match-decompose -------------------------------------------------------
    auto* md_cmd = app.add_subcommand("match-decompose",
                                      "matchable vector as a combination of edge vectors");
    std::string md_w;
    md_cmd->add_option("weights", md_w)->required();

    // --- decompose ---------------------------------------------------------------
    auto* dc_cmd = app.add_subcommand("decompose", "recursive C-bounded decomposition");
    std::string dc_g, dc_eps = "1/2", dc_beta = "1/2", dc_c = "1", dc_sep = "heuristic";
    dc_cmd->add_option("graph", dc_g)->required();
    dc_cmd->add_option("--epsilon", dc_eps);
    dc_cmd->add_option("--beta", dc_beta);
    dc_cmd->add_option("--c", dc_c);
    dc_cmd->add_option("--separator", dc_sep, "exact | heuristic | tree")
        ->check(CLI::IsMember({"exact", "heuristic", "tree"}));

    // --- hypercube ------------------------------------------------------------------
    auto* hc_cmd = app.add_subcommand("hypercube", "axis-split decomposition of the d-cube");
    int hc_d = 3;
    hc_cmd->add_option("d", hc_d)->required();

    // --- group -----------------------------------------------------------------------
    auto* gr_cmd = app.add_subcommand("group", "round components into copies of one graph");
    std::string gr_h, gr_eps = "1/2";
    gr_cmd->add_option("graph", gr_h)->required();
    gr_cmd->add_option("--epsilon", gr_eps);

    // --- reduce -----------------------------------------------------------------------
    auto* re_cmd = app.add_subcommand("reduce", "decompose and expand to ell J plus F");
    std::string re_h, re_eps = "1/2", re_beta = "1/2", re_c = "1", re_sep = "heuristic";
    re_cmd->add_option("graph", re_h)->required();
    re_cmd->add_option("--epsilon", re_eps);
    re_cmd->add_option("--beta", re_beta);
    re_cmd->add_option("--c", re_c);
    re_cmd->add_option("--separator", re_sep)
        ->check(CLI::IsMember({"exact", "heuristic", "tree"}));

    // --- bipartify -----------------------------------------------------------------------
    auto* bp_cmd = app.add_subcommand("bipartify", "degenerate bipartite expansion");
    std::string bp_h;
    int bp_d = 2;
    bp_cmd->add_option("graph", bp_h)->required();
    bp_cmd->add_option("--d", bp_d);

    // --- mader ------------------------------------------------------------------------------
    auto* ma_cmd = app.add_subcommand("mader", "minor-minimal density refinement");
    std::string ma_g;
    int ma_d = 2, ma_k = 1;
    ma_cmd->add_option("graph", ma_g)->required();
    ma_cmd->add_option("--d", ma_d);
    ma_cmd->add_option("--k", ma_k);

    // --- enumerate -------------------------------------------------------------------------
    auto* en_cmd = app.add_subcommand("enumerate", "graphs up to isomorphism");
    int en_max = 5, en_chi = 0;
    en_cmd->add_option("--max-vertices", en_max);
    en_cmd->add_option("--chi-cap", en_chi, "0 = no filter");

    // --- verify -----------------------------------------------------------------------------
    auto* vf_cmd = app.add_subcommand("verify", "batch verification suites");
    std::string vf_suite;
    SuiteOptions vf_opt;
    vf_cmd->add_option("suite", vf_suite, "duality | superadditivity | fourcolor | twothirds | sandwich | bipartite-vol | rounding | normbound | decompositions | mader")
        ->required();
    vf_cmd->add_option("--cases", vf_opt.cases);
    vf_cmd->add_option("--seed", vf_opt.seed);
    vf_cmd->add_option("--max-vertices", vf_opt.max_vertices);
    vf_cmd->add_option("--support", vf_opt.support);
    vf_cmd->add_option("--jobs", vf_opt.jobs);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (vol_cmd->parsed()) {
            Graph h = load_graph(vol_h);
            nlohmann::ordered_json j;
            VolumeResult r;
            if (!vol_g.empty() && vol_cmd->count("--weights")) {
                r = vol_weighted(h, load_graph(vol_g), load_weights(vol_w));
                j["quantity"] = "Vol_H(G,w)";
            } else if (!vol_g.empty()) {
                r = vol_graph(h, load_graph(vol_g));
                j["quantity"] = "Vol_H(G)";
            } else if (vol_cmd->count("--vector")) {
                r = vol_vector(h, load_weights(vol_w));
                j["quantity"] = "Vol_H(w)";
            } else {
                throw PreconditionError("vol needs a host graph or --vector");
            }
            j["value"] = rational_str(r.value);
            j["approx"] = approx(r.value);
            j["certificate"] = weights_json(r.cert.a);
            std::ostringstream tsv;
            tsv << "quantity\tvalue\tapprox\n"
                << j["quantity"].get<std::string>() << "\t" << rational_str(r.value)
                << "\t" << approx(r.value) << "\n";
            output.emit(j.dump(), tsv.str());
        } else if (cfb_cmd->parsed()) {
            SupportBound sb = cf_support_bound(load_graph(cfb_h), cfb_n);
            output.emit(to_json(sb.report), report_tsv(sb.report));
        } else if (ct_cmd->parsed()) {
            BoundReport r = c_T(load_graph(ct_h), ct_cap);
            output.emit(to_json(r), report_tsv(r));
        } else if (cf_cmd->parsed()) {
            auto r = cf_closed_form(load_graph(cf_h));
            if (!r) {
                nlohmann::ordered_json j;
                j["quantity"] = "c_f";
                j["value"] = nullptr;
                j["note"] = "no closed form applies (chi > 4 and c_T <= 2v/3)";
                output.emit(j.dump(), "quantity\tvalue\nc_f\tnone\n");
            } else {
                output.emit(to_json(*r), report_tsv(*r));
            }
        } else if (gm_cmd->parsed()) {
            BoundReport r = gamma_search(load_graph(gm_h), gm_max);
            output.emit(to_json(r), report_tsv(r));
        } else if (rd_cmd->parsed()) {
            Graph h = load_graph(rd_h);
            WeightVector w = load_weights(rd_w);
            WeightVector x = round_weights(h, w);
            nlohmann::ordered_json j;
            j["quantity"] = "rounded";
            j["input_density"] = rational_str(w.density());
            j["x"] = weights_json(x);
            j["x_total"] = rational_str(x.total());
            if (!x.empty()) j["x_density"] = rational_str(x.density());
            output.emit(j.dump(), x.to_text());
        } else if (md_cmd->parsed()) {
            EdgeDecomposition d = matchable_decompose(load_weights(md_w));
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            std::ostringstream tsv;
            tsv << "i\tj\tcoefficient\n";
            for (const auto& [i, jj, c] : d.terms) {
                arr.push_back({{"i", i}, {"j", jj}, {"coeff", rational_str(c)}});
                tsv << i << "\t" << jj << "\t" << rational_str(c) << "\n";
            }
            nlohmann::ordered_json j;
            j["terms"] = arr;
            output.emit(j.dump(), tsv.str());
        } else if (dc_cmd->parsed() || re_cmd->parsed()) {
            bool reduce = re_cmd->parsed();
            Graph g = load_graph(reduce ? re_h : dc_g);
            SeparatorParams params;
            params.beta = parse_rat_flag(reduce ? re_beta : dc_beta);
            params.c = parse_rat_flag(reduce ? re_c : dc_c);
            Rational eps = parse_rat_flag(reduce ? re_eps : dc_eps);
            std::string sep_kind = reduce ? re_sep : dc_sep;
            SeparatorProvider sep;
            if (sep_kind == "exact")
                sep = [](const Graph& s) { return balanced_separator(s, SeparatorMode::Exact); };
            else if (sep_kind == "tree")
                sep = [](const Graph& s) { return tree_separator(s); };
            else
                sep = [](const Graph& s) {
                    return balanced_separator(s, SeparatorMode::Heuristic);
                };
            Decomposition dec = eppstein_decompose(g, eps, params, sep);
            if (!reduce) {
                output.emit(to_json(dec, g), to_json(dec, g));
            } else {
                ReduceResult r = reduce_expand(g, dec, eps);
                nlohmann::ordered_json j;
                j["h_prime_order"] = r.h_prime.order();
                j["f_edges"] = r.f_edges.size();
                j["x_size"] = r.x_vertices.size();
                j["j_order"] = r.j.order();
                j["ell"] = r.ell;
                j["bag_excess"] = dec.excess(g);
                output.emit(j.dump(), j.dump());
            }
        } else if (hc_cmd->parsed()) {
            Decomposition dec = hypercube_decompose(hc_d);
            Graph q = hypercube(hc_d);
            output.emit(to_json(dec, q), to_json(dec, q));
        } else if (gr_cmd->parsed()) {
            Graph h = load_graph(gr_h);
            Grouping g = group_components(h, parse_rat_flag(gr_eps));
            nlohmann::ordered_json j;
            j["j_order"] = g.j.order();
            j["ell"] = g.ell;
            j["ell_j_order"] = static_cast<long>(g.ell) * g.j.order();
            j["host_order"] = h.order();
            output.emit(j.dump(), j.dump());
        } else if (bp_cmd->parsed()) {
            Graph h = load_graph(bp_h);
            Graph out = degenerate_bipartify(h, bp_d);
            nlohmann::ordered_json j;
            j["order"] = out.order();
            j["w_size"] = out.order() - h.order();
            j["graph"] = to_dimacs(out);
            output.emit(j.dump(), to_dimacs(out));
        } else if (ma_cmd->parsed()) {
            Graph g = load_graph(ma_g);
            Graph r = mader_refine(g, ma_d, ma_k);
            MaderCheck c = mader_validate(r, ma_d, ma_k);
            nlohmann::ordered_json j;
            j["order"] = r.order();
            j["edges"] = r.edge_count();
            j["density"] = rational_str(density(r));
            j["valid"] = c.all();
            j["graph"] = to_dimacs(r);
            output.emit(j.dump(), to_dimacs(r));
            if (!c.all()) return 1;
        } else if (en_cmd->parsed()) {
            std::optional<int> cap;
            if (en_chi > 0) cap = en_chi;
            auto graphs = enumerate_graphs(en_max, cap);
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            std::ostringstream tsv;
            for (const Graph& g : graphs) {
                arr.push_back(to_dimacs(g));
                tsv << to_dimacs(g);
            }
            nlohmann::ordered_json j;
            j["count"] = graphs.size();
            j["graphs"] = arr;
            output.emit(j.dump(), tsv.str());
        } else if (vf_cmd->parsed()) {
            SuiteResult r = run_suite(vf_suite, vf_opt);
            output.emit(to_json(r), to_tsv(r));
            if (!r.all_pass()) return 1;
        }
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
