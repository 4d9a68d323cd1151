#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "raaglab/bounds.hpp"
#include "raaglab/colored.hpp"
#include "raaglab/json_io.hpp"
#include "raaglab/unimodular.hpp"
#include "raaglab/wn.hpp"
#include "raaglab/word.hpp"
#include "../src/selftest/criteria.hpp"

using json = nlohmann::json;
using namespace raaglab;

namespace {

struct Report {
    std::string command;
    std::uint64_t seed = 0;
    bool pass = true;
    std::string witness;
    json data = json::object();
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    int emit() {
        auto t1 = std::chrono::steady_clock::now();
        json j;
        j["command"] = command;
        j["seed"] = seed;
        j["verdict"] = pass ? "pass" : "fail";
        j["witness"] = witness;
        j["data"] = data;
        j["timing_ms"] = static_cast<long long>(
            std::chrono::duration<double, std::milli>(t1 - t0).count());
        std::cout << j.dump(2) << std::endl;
        return pass ? 0 : 1;
    }
};

Raag free_raag(int rank) {
    std::vector<std::string> vs;
    for (int i = 0; i < rank; ++i) vs.push_back(std::string(1, char('x' + i)));
    return Raag(Graph(vs, {}));
}

json factor_json(const Graph& f) {
    json j;
    j["vertices"] = f.vertices();
    j["canonical_form"] = f.canonical_form();
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for right-angled Artin groups"};
    app.require_subcommand(1);

    // ---- decompose ----
    std::string g_path, g2_path, proj_path;
    auto* cmd_dec = app.add_subcommand("decompose", "maximal join decomposition");
    cmd_dec->add_option("graph", g_path, "graph JSON file")->required();

    auto* cmd_iso = app.add_subcommand("iso", "graph/RAAG isomorphism");
    cmd_iso->add_option("graph1", g_path)->required();
    cmd_iso->add_option("graph2", g2_path)->required();

    auto* cmd_cancel = app.add_subcommand("cancel", "cancel a direct factor");
    cmd_cancel->add_option("product", g_path, "graph of A x C")->required();
    cmd_cancel->add_option("factor", g2_path, "graph of C")->required();

    auto* cmd_gens = app.add_subcommand("autgens", "automorphism generators");
    cmd_gens->add_option("graph", g_path)->required();

    auto* cmd_struct = app.add_subcommand("autstruct", "Aut structure report");
    cmd_struct->add_option("graph", g_path)->required();

    // ---- complex ----
    auto* cmd_cx = app.add_subcommand("complex", "simplicial engine");
    cmd_cx->require_subcommand(1);
    int max_dim = 2, cm_n = 1;
    auto* cx_hom = cmd_cx->add_subcommand("homology");
    cx_hom->add_option("complex", g_path)->required();
    cx_hom->add_option("--max-dim", max_dim);
    auto* cx_cm = cmd_cx->add_subcommand("cm-check");
    cx_cm->add_option("complex", g_path)->required();
    cx_cm->add_option("--n", cm_n)->required();
    auto* cx_join = cmd_cx->add_subcommand("join-check");
    cx_join->add_option("total", g_path)->required();
    cx_join->add_option("base", g2_path)->required();
    cx_join->add_option("projection", proj_path, "JSON object vertex->vertex")
        ->required();

    // ---- in-sample ----
    auto* cmd_in = app.add_subcommand("in-sample", "bounded I_n(A,X) sample");
    int a_rank = 0, x_rank = 2, nn = 2, per_color = 2, twist_bound = 2,
        word_len = 3;
    std::uint64_t seed = 0;
    bool have_seed = false;
    cmd_in->add_option("--a-rank", a_rank, "free rank of A (0 = trivial)");
    cmd_in->add_option("--x-rank", x_rank, "free rank of X (>= 2)");
    cmd_in->add_option("--n", nn)->required();
    cmd_in->add_option("--per-color", per_color);
    cmd_in->add_option("--twist-bound", twist_bound);
    cmd_in->add_option("--word-len", word_len);
    cmd_in->add_option("--seed", seed)->required();

    // ---- unimodular ----
    auto* cmd_uni = app.add_subcommand("unimodular", "bounded unimodular complex");
    int uq = 1, u_max_dim = -1;
    cmd_uni->add_option("--n", nn)->required();
    cmd_uni->add_option("--q", uq)->required();
    cmd_uni->add_option("--max-dim", u_max_dim);
    cmd_uni->add_option("--homology-dim", max_dim);

    // ---- maazen ----
    auto* cmd_mz = app.add_subcommand("maazen", "retraction instance check");
    cmd_mz->add_option("--n", nn)->required();
    cmd_mz->add_option("--q", uq)->required();
    cmd_mz->add_option("--seed", seed)->required();

    // ---- intersect ----
    auto* cmd_int = app.add_subcommand("intersect",
                                       "complement intersection certificate");
    int pp = 0;
    cmd_int->add_option("--a-rank", a_rank, "free rank of A (0 = trivial)");
    cmd_int->add_option("--n", nn)->required();
    cmd_int->add_option("--p", pp)->required();
    cmd_int->add_option("--seed", seed)->required();
    cmd_int->add_option("--twist-bound", twist_bound);

    // ---- wn-check ----
    auto* cmd_wn = app.add_subcommand("wn-check", "semisimplicial identities");
    std::string wn_case = "z";
    cmd_wn->add_option("--case", wn_case, "colored | z");
    cmd_wn->add_option("--n", nn)->required();
    cmd_wn->add_option("--seed", seed)->required();
    cmd_wn->add_option("--a-rank", a_rank);

    // ---- bounds ----
    auto* cmd_b = app.add_subcommand("bounds", "stability ranges");
    long long bn = 0, bi = 0, bnmax = 30, bimax = 15;
    std::string coeff = "constant", variant = "aut";
    bool no_z = false, abelian_base = false, table_mode = false;
    cmd_b->add_option("--n", bn);
    cmd_b->add_option("--i", bi);
    cmd_b->add_option("--coeff", coeff,
                      "constant | split:r,N | general:r,N | abelian-h1");
    cmd_b->add_option("--variant", variant, "aut | aut-prime");
    cmd_b->add_flag("--no-z-factor", no_z);
    cmd_b->add_flag("--abelian-base", abelian_base);
    auto* b_table = cmd_b->add_subcommand("table", "grid + discrepancy report");
    b_table->add_option("--n-max", bnmax);
    b_table->add_option("--i-max", bimax);

    // ---- selftest ----
    auto* cmd_self = app.add_subcommand("selftest", "acceptance criteria");
    int self_id = 0;
    cmd_self->add_option("--id", self_id, "run a single criterion (1..13)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Report rep;
    if (cmd_in->count("--seed") || cmd_mz->count("--seed") ||
        cmd_int->count("--seed") || cmd_wn->count("--seed"))
        have_seed = true;
    rep.seed = have_seed ? seed : 0;

    try {
        if (*cmd_dec) {
            rep.command = "decompose";
            Raag r(load_graph(g_path));
            rep.data["d"] = r.free_abelian_rank();
            rep.data["factors"] = json::array();
            for (const auto& f : r.decomposition().factors)
                rep.data["factors"].push_back(factor_json(f));
        } else if (*cmd_iso) {
            rep.command = "iso";
            auto m = graph_isomorphic(load_graph(g_path), load_graph(g2_path));
            rep.pass = m.has_value();
            if (m) {
                rep.data["bijection"] = json::object();
                for (const auto& [a, b] : *m) rep.data["bijection"][a] = b;
            } else {
                rep.witness = "graphs are not isomorphic";
            }
        } else if (*cmd_cancel) {
            rep.command = "cancel";
            auto res = cancel(Raag(load_graph(g_path)),
                              Raag(load_graph(g2_path)));
            rep.pass = res.has_value();
            if (res) {
                rep.data["factors"] = json::array();
                for (const auto& f : res->decomposition().factors)
                    rep.data["factors"].push_back(factor_json(f));
            } else {
                rep.witness = "second argument is not a direct factor";
            }
        } else if (*cmd_gens) {
            rep.command = "autgens";
            Raag r(load_graph(g_path));
            rep.data["generators"] = json::array();
            for (const auto& g : enumerate_generators(r))
                rep.data["generators"].push_back(g.describe(r.graph()));
        } else if (*cmd_struct) {
            rep.command = "autstruct";
            Raag r(load_graph(g_path));
            AutStructure s = aut_structure(r);
            rep.data["d"] = s.d;
            rep.data["gamma_prime_size"] = s.gamma_prime_size;
            rep.data["central_transvection_rank"] = s.central_transvection_rank;
            rep.data["blocks"] = json::array();
            for (const auto& [f, m] : s.wreath_blocks)
                rep.data["blocks"].push_back({{"factor", f}, {"multiplicity", m}});
            std::map<std::string, int> counts{{"factor_internal", 0},
                                             {"central_transvection", 0},
                                             {"factor_permuting", 0},
                                             {"gl_part", 0}};
            for (const auto& [g, cls] : s.classified)
                switch (cls) {
                    case GenClass::FactorInternal: ++counts["factor_internal"]; break;
                    case GenClass::CentralTransvection:
                        ++counts["central_transvection"];
                        break;
                    case GenClass::FactorPermuting: ++counts["factor_permuting"]; break;
                    case GenClass::GlPart: ++counts["gl_part"]; break;
                }
            rep.data["generators"] = counts;
        } else if (*cx_hom) {
            rep.command = "complex homology";
            HomologyReport h = homology(load_complex(g_path), max_dim);
            rep.data["summary"] = h.summary();
            if (!h.empty_complex) {
                rep.data["betti"] = h.betti;
                rep.data["torsion"] = json::array();
                for (const auto& ts : h.torsion) {
                    json row = json::array();
                    for (const Int& t : ts) row.push_back(t.str());
                    rep.data["torsion"].push_back(row);
                }
            }
        } else if (*cx_cm) {
            rep.command = "complex cm-check";
            CmCertificate c = is_cohen_macaulay(load_complex(g_path), cm_n);
            rep.pass = c.pass;
            rep.witness = c.reason;
            rep.data["links_checked"] = c.links.size();
        } else if (*cx_join) {
            rep.command = "complex join-check";
            std::ifstream in(proj_path);
            if (!in) throw domain_error("cannot open " + proj_path);
            json pj;
            in >> pj;
            std::map<std::string, std::string> proj;
            for (auto it = pj.begin(); it != pj.end(); ++it)
                proj[it.key()] = it.value().get<std::string>();
            JoinVerdict v = verify_complete_join(load_complex(g_path),
                                                 load_complex(g2_path), proj);
            rep.pass = v.pass;
            rep.witness = v.witness;
            rep.data["failed_condition"] = v.failed_condition;
        } else if (*cmd_in) {
            rep.command = "in-sample";
            InSample s = build_In_sample(
                a_rank == 0 ? Raag::trivial() : free_raag(a_rank),
                free_raag(x_rank), nn, per_color, twist_bound, word_len, seed);
            JoinVerdict v = verify_complete_join(s.complex, s.delta,
                                                 s.projection);
            rep.pass = v.pass;
            rep.witness = v.witness;
            rep.data["vertices"] = s.complex.vertex_count();
            rep.data["faces"] = s.complex.face_count();
            rep.data["homology"] = homology(s.complex, nn - 1).summary();
        } else if (*cmd_uni) {
            rep.command = "unimodular";
            VectorComplex vc = build_unimodular_complex(nn, uq, u_max_dim);
            rep.data["vertices"] = vc.complex.faces_of_dim(0).size();
            rep.data["faces"] = vc.complex.face_count();
            HomologyReport h =
                homology(vc.complex, std::min(max_dim, std::max(nn - 1, 0)));
            rep.data["homology"] = h.summary();
            rep.pass = h.betti.empty() || h.betti[0] == 0;
            if (!rep.pass) rep.witness = "complex is not connected";
        } else if (*cmd_mz) {
            rep.command = "maazen";
            std::mt19937_64 rng(seed);
            std::vector<Int> v1(nn);
            for (;;) {
                for (int c = 0; c + 1 < nn; ++c)
                    v1[c] = static_cast<long long>(rng() % 7) - 3;
                v1[nn - 1] = (rng() % 2 ? uq + 1 : -(uq + 1));
                Int g = 0;
                for (const Int& x : v1) g = boost::multiprecision::gcd(g, x);
                if (g == 1) break;
            }
            IntMatrix m = reduce_to_standard(IntMatrix::from_rows({v1}));
            auto [u, h2] = hermite_with_transform(m);
            VectorComplex link;
            for (int i = 0; i + 1 < nn; ++i) {
                std::vector<Int> w(nn);
                for (int c = 0; c < nn; ++c) w[c] = u.at(c, i);
                link.vectors.push_back(std::move(w));
            }
            std::vector<std::string> labels;
            for (const auto& w : link.vectors) labels.push_back(vector_label(w));
            link.complex = SimplicialComplex(labels);
            std::vector<int> top;
            for (int i = 0; i + 1 < nn; ++i) top.push_back(i);
            if (!top.empty()) link.complex.add_face(std::move(top));
            RetractionResult rr = maazen_retraction(link, v1, uq);
            rep.pass = rr.pass;
            rep.witness = rr.witness;
            rep.data["v1"] = vector_label(v1);
            rep.data["images"] = json::array();
            for (const auto& w : rr.images)
                rep.data["images"].push_back(vector_label(w));
        } else if (*cmd_int) {
            rep.command = "intersect";
            Raag a = a_rank == 0 ? Raag::trivial() : free_raag(a_rank);
            auto vs = sample_SI_simplex(a, nn, pp, seed, twist_bound);
            IntersectionCertificate c = complement_intersection(vs, a, nn);
            SnVerdict sv{false, "skipped"};
            if (c.pass) sv = verify_Sn_equals_SIn(vs, a, nn);
            rep.pass = c.pass && sv.pass;
            rep.witness = c.pass ? sv.witness : c.witness;
            rep.data["m"] = c.rank_m;
            rep.data["lattice_basis"] = matrix_to_json(c.lattice.basis);
            rep.data["combined_twist"] = matrix_to_json(c.combined_twist);
        } else if (*cmd_wn) {
            rep.command = "wn-check";
            SemiSimplicialSet ss;
            if (wn_case == "colored") {
                InSample s = build_In_sample(
                    a_rank == 0 ? Raag::trivial() : free_raag(a_rank),
                    free_raag(2), nn, 2, 2, 3, seed);
                ss = build_Wn_sample_colored(s, nn - 1, 20, seed);
            } else if (wn_case == "z") {
                ss = build_Wn_sample_Z(
                    a_rank == 0 ? Raag::trivial() : free_raag(a_rank), nn,
                    nn - 1, 5, 2, seed);
            } else {
                throw domain_error("--case must be colored or z");
            }
            auto bad = ss.check_identities();
            rep.pass = !bad.has_value();
            if (bad) rep.witness = *bad;
            for (int p = 0; p <= ss.top_dim(); ++p)
                rep.data["simplices"].push_back(ss.size(p));
        } else if (*b_table) {
            rep.command = "bounds table";
            CrossCheckReport cr = cross_check(bnmax, bimax);
            rep.data["summary"] = cr.summary;
            rep.data["discrepancies"] = json::array();
            for (const auto& d : cr.discrepancies)
                rep.data["discrepancies"].push_back(
                    {{"theorem", d.theorem},
                     {"aspect", d.aspect},
                     {"n", d.n},
                     {"i", d.i},
                     {"table", d.table_value},
                     {"general", d.general_value}});
        } else if (*cmd_b) {
            rep.command = "bounds";
            BoundsQuery q;
            q.n = bn;
            q.i = bi;
            q.b_has_no_Z_factor = no_z;
            q.abelian_base = abelian_base;
            q.variant = variant == "aut-prime" ? GroupVariant::CommutatorSubgroup
                                               : GroupVariant::FullAut;
            if (variant != "aut" && variant != "aut-prime")
                throw domain_error("--variant must be aut or aut-prime");
            if (coeff == "constant") {
                q.coeff = CoeffKind::Constant;
            } else if (coeff == "abelian-h1") {
                q.coeff = CoeffKind::AbelianH1;
            } else if (coeff.rfind("split:", 0) == 0 ||
                       coeff.rfind("general:", 0) == 0) {
                q.coeff = coeff[0] == 's' ? CoeffKind::Split : CoeffKind::General;
                auto rest = coeff.substr(coeff.find(':') + 1);
                auto comma = rest.find(',');
                if (comma == std::string::npos)
                    throw domain_error("--coeff needs the form kind:r,N");
                q.r = std::stoll(rest.substr(0, comma));
                q.N = std::stoll(rest.substr(comma + 1));
            } else {
                throw domain_error("unknown --coeff " + coeff);
            }
            RangeVerdict v = stability_range(q);
            rep.data["surjective"] = v.surjective;
            rep.data["injective"] = v.injective;
            rep.data["isomorphism"] = v.isomorphism;
            rep.data["threshold_ok"] = v.threshold_ok;
            rep.data["applied_rule"] = v.applied_rule;
        } else if (*cmd_self) {
            rep.command = "selftest";
            std::vector<selftest::CriterionResult> rs;
            if (self_id > 0)
                rs.push_back(selftest::run_criterion(self_id));
            else
                rs = selftest::run_all_criteria();
            rep.data["criteria"] = json::array();
            for (const auto& r : rs) {
                std::cerr << r.line() << "\n";
                rep.data["criteria"].push_back({{"id", r.id},
                                               {"name", r.name},
                                               {"pass", r.pass},
                                               {"detail", r.detail},
                                               {"ms", r.ms}});
                if (!r.pass) {
                    rep.pass = false;
                    if (rep.witness.empty()) rep.witness = r.line();
                }
            }
        }
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rep.emit();
}
