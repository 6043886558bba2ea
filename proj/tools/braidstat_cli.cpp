// Command-line workbench: racks, cocycles, braided spaces, coinvariants,
// braid homology, symmetric-group statistics, Hurwitz orbits, and exact
// arithmetic statistics over F_q[t].
//
// Exit codes: 0 success, 2 validation error, 3 size/work cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "braidstat/acceptance.hpp"
#include "braidstat/builtin.hpp"
#include "braidstat/ffstats.hpp"
#include "braidstat/homology.hpp"
#include "braidstat/hurwitz.hpp"
#include "braidstat/symstats.hpp"

using namespace braidstat;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        out << text;
        if (text.empty() || text.back() != '\n') out << "\n";
    }
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

Rack load_rack(const std::string& name, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw validation_error("BadFile", "cannot open " + file);
        nlohmann::json j;
        in >> j;
        return Rack::from_json(j);
    }
    return builtin_rack(name);
}

FiniteGroup load_group(const std::string& name, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw validation_error("BadFile", "cannot open " + file);
        nlohmann::json j;
        in >> j;
        return FiniteGroup::from_json(j);
    }
    if (name == "s3") return FiniteGroup::symmetric(3);
    if (name == "s4") return FiniteGroup::symmetric(4);
    if (name.rfind("z:", 0) == 0) return FiniteGroup::cyclic(std::stoi(name.substr(2)));
    if (name.rfind("d:", 0) == 0) return FiniteGroup::dihedral(std::stoi(name.substr(2)));
    throw validation_error("UnknownBuiltin", "unknown group name: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for racks, braided vector spaces, braid homology, and "
                 "arithmetic statistics over F_q[t]"};
    app.set_config("--config", "", "TOML/INI configuration merged under explicit flags");
    app.require_subcommand(1);

    std::string out_path;
    int threads = 1;
    bool timings = false;
    app.add_option("--out", out_path, "write results to a file instead of stdout");
    app.add_option("--threads", threads, "worker count (outputs are independent of it)");
    app.add_flag("--timings", timings, "include elapsed milliseconds in CSV output");

    // ---- rack ----
    auto* rack_cmd = app.add_subcommand("rack", "validate and analyze racks");
    std::string rack_name = "joyce", rack_file, probe_csv, closure_csv, quotient_csv, iso_name;
    rack_cmd->add_option("--name", rack_name, "builtin rack name");
    rack_cmd->add_option("--file", rack_file, "rack JSON file");
    rack_cmd->add_option("--probe", probe_csv, "subset to test for generation, e.g. 0,2");
    rack_cmd->add_option("--closure", closure_csv, "subset whose subrack closure is reported");
    rack_cmd->add_option("--quotient", quotient_csv, "ideal to quotient by");
    rack_cmd->add_option("--isomorphic-to", iso_name, "builtin rack to compare with");

    // ---- cocycle ----
    auto* coc_cmd = app.add_subcommand("cocycle", "validate 2-cocycles");
    std::string coc_rack = "joyce", coc_rack_file, coc_spec = "const:-1";
    coc_cmd->add_option("--rack", coc_rack, "builtin rack name");
    coc_cmd->add_option("--rack-file", coc_rack_file, "rack JSON file");
    coc_cmd->add_option("--spec", coc_spec, "cocycle spec (const:..., wedge, pm)");

    // ---- bvs ----
    auto* bvs_cmd = app.add_subcommand("bvs", "braided vector spaces and braid actions");
    std::string bvs_spec = "kappa_wedge", act_word, act_tuple;
    bvs_cmd->add_option("--space", bvs_spec, "space spec");
    bvs_cmd->add_option("--act", act_word, "braid word, e.g. \"s1 s2^-1\"");
    bvs_cmd->add_option("--tuple", act_tuple, "basis tuple the word acts on, e.g. 0,1,2");

    // ---- coinv ----
    auto* coinv_cmd = app.add_subcommand("coinv", "coinvariant algebra computations");
    std::string ci_rack, ci_rack_file, ci_cocycle = "const:1", ci_space, ci_engine = "both";
    int ci_n = 3;
    int ci_grade = -1;
    int ci_degbound = 0;
    std::string ci_controlled, ci_multideg, ci_dump;
    coinv_cmd->add_option("--rack", ci_rack, "builtin rack name");
    coinv_cmd->add_option("--rack-file", ci_rack_file, "rack JSON file");
    coinv_cmd->add_option("--cocycle", ci_cocycle, "cocycle spec");
    coinv_cmd->add_option("--space", ci_space, "braided space spec (linear engine only)");
    coinv_cmd->add_option("--n", ci_n, "tensor degree (computes 1..n)");
    coinv_cmd->add_option("--engine", ci_engine, "orbit | linear | both");
    coinv_cmd->add_option("--grade", ci_grade, "restrict the linear engine to one grade");
    coinv_cmd->add_option("--multidegree", ci_multideg, "orbit multidegree, e.g. 2,1");
    coinv_cmd->add_option("--deg-bound", ci_degbound, "report deg C(V) up to this bound");
    coinv_cmd->add_option("--one-controlled", ci_controlled, "m:N window certification");
    coinv_cmd->add_option("--dump-orbits", ci_dump, "write orbit representatives JSON here");

    // ---- homology ----
    auto* hom_cmd = app.add_subcommand("homology", "braid group homology");
    std::string hom_space = "kappa_zeta:3", hom_engine = "resolution";
    int hom_n = 3, hom_imax = 1, hom_grade = -1;
    long hom_d = -1;
    hom_cmd->add_option("--space", hom_space, "space spec");
    hom_cmd->add_option("--n", hom_n, "strand count");
    hom_cmd->add_option("--imax", hom_imax, "top homological degree");
    hom_cmd->add_option("--engine", hom_engine, "fox | resolution");
    hom_cmd->add_option("--grade", hom_grade, "graded slice");
    hom_cmd->add_option("--d", hom_d, "degree of the coinvariant algebra, if known");

    auto* pred_cmd = app.add_subcommand("predict", "closed-form bounds and thresholds");
    long pd = 1, pdegv = 1, pm_ = 5, pq = 3, prack = 1, pg = 0, pf = 0, pj = 0, pdim = 1, pn = 5;
    pred_cmd->add_option("--d", pd, "degree of the coinvariant algebra");
    pred_cmd->add_option("--degv", pdegv, "top grade of the space");
    pred_cmd->add_option("--m", pm_, "grading direction degree");
    pred_cmd->add_option("--n", pn, "strand count");
    pred_cmd->add_option("--q", pq, "field size");
    pred_cmd->add_option("--rack-size", prack, "rack size");
    pred_cmd->add_option("--g", pg, "surface genus");
    pred_cmd->add_option("--f", pf, "puncture count");
    pred_cmd->add_option("--j", pj, "homological degree");
    pred_cmd->add_option("--dim", pdim, "module dimension");

    // ---- symstats ----
    auto* sym_cmd = app.add_subcommand("symstats", "symmetric group statistics");
    std::string sym_ct, sym_decompose;
    int sym_k = -1, sym_irr = 0, sym_n = 4;
    long sym_conv_q = 0;
    sym_cmd->add_option("--cycle-type", sym_ct, "cycle type, e.g. 3,1");
    sym_cmd->add_option("--k", sym_k, "top exterior power for the trace table");
    sym_cmd->add_option("--irr-check", sym_irr, "verify the irreducibility indicator up to n");
    sym_cmd->add_option("--decompose", sym_decompose, "space spec to decompose");
    sym_cmd->add_option("--n", sym_n, "tensor degree");
    sym_cmd->add_option("--conv-check", sym_conv_q, "q for the convolution identity check");

    // ---- hurwitz ----
    auto* hur_cmd = app.add_subcommand("hurwitz", "Nielsen tuples and braid orbits");
    std::string hur_group = "s3", hur_group_file, hur_set = "involutions", hur_range;
    int hur_n = 4;
    long hur_q = 0;
    bool hur_no_product = false, hur_no_gen = false, hur_orbits = false;
    hur_cmd->add_option("--group", hur_group, "s3 | s4 | z:N | d:N");
    hur_cmd->add_option("--group-file", hur_group_file, "group JSON (table or permutations)");
    hur_cmd->add_option("--set", hur_set, "involutions | nonidentity | ids:1,2,...");
    hur_cmd->add_option("--n", hur_n, "tuple length");
    hur_cmd->add_option("--range", hur_range, "n range a:b for the component table");
    hur_cmd->add_option("--qpower", hur_q, "count orbits fixed by entrywise q-th powers");
    hur_cmd->add_flag("--no-product-one", hur_no_product, "drop the product-one constraint");
    hur_cmd->add_flag("--no-generating", hur_no_gen, "drop the generating constraint");
    hur_cmd->add_flag("--orbits", hur_orbits, "dump the orbit list as JSON");

    // ---- ffstats ----
    auto* ff_cmd = app.add_subcommand("ffstats", "exact statistics over F_q[t]");
    std::string ff_kind = "mobius";
    long ff_q = 3, ff_order = 2;
    std::string ff_range = "2:6";
    ff_cmd->add_option("--kind", ff_kind, "mobius | chidisc | irr | legendre");
    ff_cmd->add_option("--q", ff_q, "field size (prime)");
    ff_cmd->add_option("--n", ff_range, "degree range a:b");
    ff_cmd->add_option("--order", ff_order, "character order for chidisc");

    // ---- accept ----
    auto* acc_cmd = app.add_subcommand("accept", "run the acceptance suite");
    std::string acc_suite = "all";
    acc_cmd->add_option("--suite", acc_suite, "all or a comma-separated list of criteria ids");

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);

        if (rack_cmd->parsed()) {
            Rack r = load_rack(rack_name, rack_file);
            nlohmann::json j = {{"rack", r.to_json()}};
            if (!probe_csv.empty()) {
                std::vector<int> probe = parse_ints(probe_csv);
                j["report"] = rack_predicates(r, &probe).to_json();
            } else {
                j["report"] = rack_predicates(r).to_json();
            }
            if (!closure_csv.empty()) j["closure"] = subrack_closure(r, parse_ints(closure_csv));
            if (!quotient_csv.empty()) {
                std::vector<int> proj;
                Rack q = quotient_rack(r, parse_ints(quotient_csv), &proj);
                j["quotient"] = {{"rack", q.to_json()}, {"projection", proj}};
            }
            if (!iso_name.empty()) j["isomorphic"] = racks_isomorphic(r, builtin_rack(iso_name));
            emit(j.dump(2), out_path);
        } else if (coc_cmd->parsed()) {
            Rack r = load_rack(coc_rack, coc_rack_file);
            Cocycle2 c = builtin_cocycle(r, coc_spec);
            emit(c.to_json().dump(2), out_path);
        } else if (bvs_cmd->parsed()) {
            BraidedSpace v = builtin_space(bvs_spec);
            if (!act_word.empty()) {
                std::vector<int> tuple = parse_ints(act_tuple);
                BraidWord w = BraidWord::parse((int)tuple.size(), act_word);
                TensorVec start;
                start[tuple_to_index(tuple, v.dim)] = v.field->one();
                TensorVec img = braid_act(v, w, start);
                nlohmann::json terms = nlohmann::json::array();
                for (auto& [k, s] : img)
                    terms.push_back({{"tuple", index_to_tuple(k, v.dim, (int)tuple.size())},
                                     {"coeff", v.field->scalar_to_json(s)}});
                emit(nlohmann::json{{"word", w.to_string()}, {"image", terms}}.dump(2), out_path);
            } else {
                emit(v.to_json().dump(2), out_path);
            }
        } else if (coinv_cmd->parsed()) {
            std::ostringstream csv;
            csv << "degree,dim,engine,elapsed_ms\n";
            auto stamp = [&](long ms) { return timings ? std::to_string(ms) : std::string("0"); };
            if (!ci_space.empty()) {
                BraidedSpace v = builtin_space(ci_space);
                for (int n = 1; n <= ci_n; ++n) {
                    auto t0 = std::chrono::steady_clock::now();
                    std::optional<int> grade;
                    if (ci_grade >= 0) grade = ci_grade;
                    long d = coinv_dim_linear(v, n, grade).dim;
                    auto t1 = std::chrono::steady_clock::now();
                    csv << n << "," << d << ",linear,"
                        << stamp(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                                     .count())
                        << "\n";
                }
                if (ci_degbound > 0) {
                    DegResult dr = deg_coinv_linear(v, ci_degbound);
                    csv << "# deg: "
                        << (dr.kind == DegResult::Kind::ExceedsBound ? "exceeds_bound"
                                                                     : std::to_string(dr.degree))
                        << "\n";
                }
                emit(csv.str(), out_path);
            } else {
                Rack r = load_rack(ci_rack.empty() ? "joyce" : ci_rack, ci_rack_file);
                Cocycle2 c = builtin_cocycle(r, ci_cocycle);
                if (!ci_controlled.empty()) {
                    auto colon = ci_controlled.find(':');
                    int m = std::stoi(ci_controlled.substr(0, colon));
                    int N = std::stoi(ci_controlled.substr(colon + 1));
                    emit(one_controlled_check(r, c, m, N).to_json().dump(2), out_path);
                    return 0;
                }
                OrbitEngine eng(r, c);
                BraidedSpace v = rack_space(r, c);
                for (int n = 1; n <= ci_n; ++n) {
                    if (ci_engine == "orbit" || ci_engine == "both") {
                        auto t0 = std::chrono::steady_clock::now();
                        long d;
                        if (!ci_multideg.empty()) {
                            std::vector<int> target = parse_ints(ci_multideg);
                            std::vector<int> color(r.size);
                            for (int x = 0; x < r.size; ++x) color[x] = x % (int)target.size();
                            d = eng.dim_multidegree(n, color, target);
                        } else {
                            d = eng.dim(n);
                        }
                        auto t1 = std::chrono::steady_clock::now();
                        csv << n << "," << d << ",orbit,"
                            << stamp(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                                         .count())
                            << "\n";
                    }
                    if (ci_engine == "linear" || ci_engine == "both") {
                        auto t0 = std::chrono::steady_clock::now();
                        long d = coinv_dim_linear(v, n).dim;
                        auto t1 = std::chrono::steady_clock::now();
                        csv << n << "," << d << ",linear,"
                            << stamp(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                                         .count())
                            << "\n";
                    }
                }
                if (ci_degbound > 0) {
                    DegResult dr = deg_coinv_rack(eng, ci_degbound);
                    csv << "# deg: "
                        << (dr.kind == DegResult::Kind::ExceedsBound ? "exceeds_bound"
                                                                     : std::to_string(dr.degree))
                        << (dr.kind == DegResult::Kind::Exact ? " (certified)" : "") << "\n";
                }
                if (!ci_dump.empty()) {
                    const auto& lv = eng.level(ci_n);
                    nlohmann::json orbits = nlohmann::json::array();
                    for (long o = 0; o < (long)lv.orbit_rep.size(); ++o) {
                        nlohmann::json row = {{"rep", index_to_tuple(lv.orbit_rep[o], r.size, ci_n)},
                                              {"alive", (bool)lv.orbit_alive[o]}};
                        if (!lv.orbit_alive[o])
                            row["kill_witness"] = index_to_tuple(lv.kill_witness[o], r.size, ci_n);
                        orbits.push_back(row);
                    }
                    std::ofstream dump(ci_dump);
                    dump << orbits.dump(2) << "\n";
                }
                emit(csv.str(), out_path);
            }
        } else if (hom_cmd->parsed()) {
            BraidedSpace v = builtin_space(hom_space);
            std::optional<long> d;
            if (hom_d >= 0) d = hom_d;
            if (hom_grade >= 0) {
                auto [h0, h1] = fox_h01(v, hom_n, hom_grade);
                emit(nlohmann::json{
                         {"n", hom_n}, {"grade", hom_grade}, {"engine", "fox"}, {"dims", {h0, h1}}}
                         .dump(2),
                     out_path);
            } else {
                HomologyReport rep = homology_report(v, hom_n, hom_imax, hom_engine, d);
                emit(rep.to_json().dump(2), out_path);
            }
        } else if (pred_cmd->parsed()) {
            CharSumBound b = char_sum_bound(pn, pd, prack, pq);
            nlohmann::json j = {
                {"vanishing_below", vanishing_threshold(pd, pdegv, pm_).to_string()},
                {"char_sum_prefactor", b.prefactor.to_string()},
                {"char_sum_q_exponent", b.q_exponent.to_string()},
                {"power_saving", b.power_saving},
                {"q_threshold", b.q_threshold.to_string()},
                {"braid_betti_bound", braid_betti_bound(pn, pj, pdim).to_string()},
                {"surface_betti_bound", surface_betti_bound(pg, pf, pn, pj, pdim).to_string()}};
            emit(j.dump(2), out_path);
        } else if (sym_cmd->parsed()) {
            if (sym_irr > 0) {
                bool ok = true;
                for (int n = 1; n <= sym_irr; ++n) ok = ok && irr_identity_check(n);
                emit(nlohmann::json{{"irr_identity_upto", sym_irr}, {"holds", ok}}.dump(2),
                     out_path);
            } else if (!sym_decompose.empty()) {
                auto mult = sn_decompose(builtin_space(sym_decompose), sym_n);
                emit(decomposition_to_json(mult).dump(2), out_path);
            } else if (sym_conv_q > 0) {
                bool ok = trace_convolution_check(sym_conv_q, sym_n);
                emit(nlohmann::json{{"q", sym_conv_q}, {"n", sym_n}, {"holds", ok}}.dump(2),
                     out_path);
            } else {
                std::ostringstream csv;
                csv << "n,cycle_type,k,trace\n";
                Partition ct;
                int total = 0;
                for (int part : parse_ints(sym_ct)) {
                    ct.push_back(part);
                    total += part;
                }
                if (ct.empty())
                    throw validation_error("BadRequest", "supply --cycle-type for the trace table");
                for (int k = 0; k <= (sym_k >= 0 ? sym_k : total); ++k) {
                    csv << total << ",";
                    for (size_t i = 0; i < ct.size(); ++i) csv << (i ? "+" : "") << ct[i];
                    csv << "," << k << "," << wedge_trace(ct, k, true) << "\n";
                }
                emit(csv.str(), out_path);
            }
        } else if (hur_cmd->parsed()) {
            FiniteGroup G = load_group(hur_group, hur_group_file);
            std::vector<int> R;
            if (hur_set == "involutions") {
                for (int x = 0; x < G.size; ++x)
                    if (x != G.id && G.mul[x][x] == G.id) R.push_back(x);
            } else if (hur_set == "nonidentity") {
                for (int x = 0; x < G.size; ++x)
                    if (x != G.id) R.push_back(x);
            } else if (hur_set.rfind("ids:", 0) == 0) {
                R = parse_ints(hur_set.substr(4));
            } else {
                throw validation_error("BadRequest", "unknown set spec: " + hur_set);
            }
            if (!hur_range.empty()) {
                auto colon = hur_range.find(':');
                int lo = std::stoi(hur_range.substr(0, colon));
                int hi = std::stoi(hur_range.substr(colon + 1));
                long q = hur_q > 0 ? hur_q : 3;
                auto rows = component_table(G, R, lo, hi, q);
                std::ostringstream csv;
                csv << "n,tuples,orbits,fixed_orbits,estimate\n";
                for (auto& row : rows)
                    csv << row.n << "," << row.tuples << "," << row.orbits << "," << row.fixed
                        << "," << row.estimate.to_string() << "\n";
                csv << "# periodicity: " << (component_periodicity(rows, G.size) ? "true" : "false")
                    << "\n";
                emit(csv.str(), out_path);
            } else {
                NielsenClass nc{G, R, hur_n, !hur_no_product, !hur_no_gen, {}};
                OrbitSet orbits = braid_orbits(nc);
                if (hur_orbits) {
                    emit(orbits.to_json(nc).dump(2), out_path);
                } else {
                    std::ostringstream csv;
                    csv << "n,tuples,orbits,fixed_orbits,estimate\n";
                    long fixed = 0;
                    if (hur_q > 0 && !orbits.orbits.empty())
                        fixed = qpower_fixed_orbits(nc, orbits, hur_q);
                    csv << hur_n << "," << orbits.total_tuples << "," << orbits.orbits.size() << ","
                        << fixed << ","
                        << (hur_q > 0 ? point_estimate(hur_q, hur_n, fixed).to_string() : "0")
                        << "\n";
                    emit(csv.str(), out_path);
                }
            }
        } else if (ff_cmd->parsed()) {
            ExperimentSpec spec;
            spec.kind = ff_kind;
            spec.q = ff_q;
            auto colon = ff_range.find(':');
            spec.n_lo = std::stoi(ff_range.substr(0, colon));
            spec.n_hi = std::stoi(ff_range.substr(colon + 1));
            spec.char_order = ff_order;
            spec.threads = threads;
            emit(stat_rows_to_csv(run_experiment(spec)), out_path);
        } else if (acc_cmd->parsed()) {
            std::vector<int> ids;
            if (acc_suite != "all") ids = parse_ints(acc_suite);
            auto results = run_acceptance(ids, threads);
            int failures = 0;
            std::ostringstream text;
            for (auto& r : results) {
                text << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name;
                if (!r.detail.empty()) text << " -- " << r.detail;
                text << "\n";
                if (!r.pass) failures++;
            }
            text << "acceptance: " << results.size() << " criteria, " << failures << " failed\n";
            emit(text.str(), out_path);
            return failures == 0 ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        nlohmann::json err = {{"error", e.code()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return e.error_class() == Error::Class::Cap ? 3 : 2;
    } catch (const std::exception& e) {
        nlohmann::json err = {{"error", "Internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
}
