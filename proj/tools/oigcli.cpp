#include "oigcli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oig/enumerate.hpp"
#include "oig/io.hpp"

namespace oig {

namespace {

json load_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw error("cannot read '" + path + "'");
    return json::parse(in);
}

void write_out(const std::string& text, const std::string& output, std::ostream& fallback) {
    if (output.empty() || output == "-") {
        fallback << text;
        if (!text.empty() && text.back() != '\n') fallback << '\n';
        return;
    }
    std::ofstream f(output);
    if (!f) throw error("cannot write '" + output + "'");
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string dump(const json& j) { return j.dump(2); }

mask_t mask_from_labels(const set_system& sys, const std::string& csv) {
    mask_t m = 0;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) m |= bit(sys.ground().index(item));
    return m;
}

int flat_by_xi(const flat_lattice& lat, const std::vector<std::string>& labels) {
    mask_t m = lat.system().ground().mask_of(labels);
    for (int f = 0; f < lat.size(); ++f)
        if (lat.xi(f) == m) return f;
    throw error("no flat has the given xi");
}

struct command_io {
    std::string input;
    std::string format;
    std::string output;
};

void add_io(CLI::App* cmd, command_io& io) {
    cmd->add_option("input", io.input, "input file (- for stdin)")->required();
    cmd->add_option("--format", io.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    cmd->add_option("--output", io.output, "output file (default stdout)");
}

oriented_system load_bundle(const json& j) {
    auto [sys, covs] = bundle_from_json(j);
    return oriented_system::validate(sys, covs);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"interval greedoids, covector algebra and oriented interval greedoids"};
    app.require_subcommand(1);

    command_io io;
    std::string cls = "interval_greedoid";
    bool exhaustive = false;
    std::string by_csv, to_csv, base_str, chain_str;

    auto* c_check = app.add_subcommand("check", "validate set-system axioms");
    add_io(c_check, io);
    c_check->add_option("--class", cls, "axiom class")
        ->check(CLI::IsMember(
            {"accessible", "greedoid", "interval_greedoid", "matroid", "antimatroid"}));
    c_check->add_flag("--exhaustive", exhaustive, "list every violation");

    auto* c_flats = app.add_subcommand("flats", "lattice of flats");
    add_io(c_flats, io);

    auto* c_cov = app.add_subcommand("covectors", "all covectors of an interval greedoid");
    add_io(c_cov, io);

    auto* c_orient = app.add_subcommand("orient", "validate an oriented bundle");
    add_io(c_orient, io);
    c_orient->add_flag("--exhaustive", exhaustive, "list every witness");

    auto* c_points = app.add_subcommand("from-points", "antimatroid and its orientation from points");
    add_io(c_points, io);

    auto* c_vec = app.add_subcommand("from-vectors", "oriented matroid from a vector configuration");
    add_io(c_vec, io);

    auto* c_arr = app.add_subcommand("from-arrangement", "complexified arrangement orientation");
    add_io(c_arr, io);

    auto* c_contract = app.add_subcommand("contract", "contract a system or bundle");
    add_io(c_contract, io);
    c_contract->add_option("--by", by_csv, "feasible set, comma-separated labels");

    auto* c_restrict = app.add_subcommand("restrict", "restrict a system or bundle");
    add_io(c_restrict, io);
    c_restrict->add_option("--to", to_csv, "element subset, comma-separated labels");

    auto* c_topes = app.add_subcommand("topes", "tope graph and tope poset");
    add_io(c_topes, io);
    c_topes->add_option("--base", base_str, "base tope sign string");

    auto* c_rco = app.add_subcommand("rco", "build and verify a recursive coatom ordering");
    add_io(c_rco, io);
    c_rco->add_option("--base", base_str, "base tope sign string");

    auto* c_sphere = app.add_subcommand("sphere", "order complex and homology evidence");
    add_io(c_sphere, io);

    auto* c_flags = app.add_subcommand("flags", "flag counts against the Möbius formula");
    add_io(c_flags, io);
    c_flags->add_option("--chain", chain_str, "descending chain as a JSON list of xi label lists");

    try {
        std::vector<const char*> argv;
        argv.push_back("oigtool");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (io.format.empty()) {
        bool text_default = c_check->parsed() || c_orient->parsed();
        io.format = text_default ? "text" : "json";
    }

    try {
        if (c_check->parsed()) {
            set_system sys = set_system_from_json(load_json(io.input));
            axiom_report rep = check_axioms(sys, axiom_class_from_string(cls), exhaustive);
            if (io.format == "json") {
                write_out(dump(report_json(rep, sys)), io.output, out);
            } else {
                std::string text = rep.passed ? "passed" : "failed";
                mask_t loops = sys.ground().full() & ~sys.union_of_members();
                if (loops)
                    text += "\nnote: elements in no feasible set: " +
                            json(sys.ground().labels_of(loops)).dump();
                for (const auto& v : rep.violations) {
                    text += "\n" + to_string(v.axiom);
                    if (v.x) text += " X=" + json(sys.ground().labels_of(*v.x)).dump();
                    if (v.y) text += " Y=" + json(sys.ground().labels_of(*v.y)).dump();
                    if (v.z) text += " Z=" + json(sys.ground().labels_of(*v.z)).dump();
                    if (v.element) text += " e=" + sys.ground().label(*v.element);
                }
                write_out(text, io.output, out);
            }
            return rep.passed ? 0 : 1;
        }

        if (c_flats->parsed()) {
            set_system sys = set_system_from_json(load_json(io.input));
            flat_lattice lat = flat_lattice::build(sys);
            if (io.format == "dot")
                write_out(lattice_dot(lat), io.output, out);
            else if (io.format == "text")
                write_out("flats: " + std::to_string(lat.size()) +
                              ", rank: " + std::to_string(lat.rank()),
                          io.output, out);
            else
                write_out(dump(lattice_json(lat)), io.output, out);
            return 0;
        }

        if (c_cov->parsed()) {
            set_system sys = set_system_from_json(load_json(io.input));
            flat_lattice lat = flat_lattice::build(sys);
            std::vector<covector> cs = all_covectors(lat);
            if (io.format == "text") {
                std::string text;
                for (const covector& c : cs) text += to_string(c.v, sys.size()) + "\n";
                write_out(text, io.output, out);
            } else {
                json j = json::array();
                for (const covector& c : cs) j.push_back(to_string(c.v, sys.size()));
                write_out(dump(j), io.output, out);
            }
            return 0;
        }

        if (c_orient->parsed()) {
            auto [sys, covs] = bundle_from_json(load_json(io.input));
            oriented_system o = oriented_system::validate(sys, covs, exhaustive);
            if (io.format == "json")
                write_out(dump(report_json(o.report(), o.lattice())), io.output, out);
            else {
                std::string text = o.passed() ? "passed" : "failed";
                const auto& r = o.report();
                for (const auto& s : r.non_covectors) text += "\nnot a covector: " + s;
                for (int f : r.og1_missing_flats)
                    text += "\nOG1: no covector with support xi=" +
                            json(o.system().ground().labels_of(o.lattice().xi(f))).dump();
                for (const auto& s : r.og2_missing_negations) text += "\nOG2: missing negation of " + s;
                for (const auto& t : r.og3_missing_products)
                    text += "\nOG3: " + t[0] + " o " + t[1] + " = " + t[2] + " is missing";
                for (const auto& w : r.og4_failures)
                    text += "\nOG4: no witness for (" + w.a + ", " + w.b + ") at " +
                            o.system().ground().label(w.x);
                write_out(text, io.output, out);
            }
            return o.passed() ? 0 : 1;
        }

        if (c_points->parsed()) {
            point_configuration pts = points_from_json(load_json(io.input));
            convex_geometry geo = convex_geometry::build(pts);
            oriented_system o = oig_from_antimatroid(geo.antimatroid());
            if (io.format == "text")
                write_out("antimatroid members: " + std::to_string(geo.antimatroid().feasible().size()) +
                              ", covectors: " + std::to_string(o.size()),
                          io.output, out);
            else
                write_out(dump(bundle_json(o)), io.output, out);
            return 0;
        }

        if (c_vec->parsed()) {
            auto [vectors, labels] = vectors_from_json(load_json(io.input));
            oriented_system o = om_from_vectors(vectors, labels);
            if (io.format == "text")
                write_out("covectors: " + std::to_string(o.size()) +
                              ", topes: " + std::to_string(o.topes().size()),
                          io.output, out);
            else
                write_out(dump(bundle_json(o)), io.output, out);
            return 0;
        }

        if (c_arr->parsed()) {
            rational_arrangement arr = arrangement_from_json(load_json(io.input));
            oriented_system o = complexified_oig(arr);
            if (io.format == "text")
                write_out("ground: " + std::to_string(o.n()) +
                              ", covectors: " + std::to_string(o.size()),
                          io.output, out);
            else
                write_out(dump(bundle_json(o)), io.output, out);
            return 0;
        }

        if (c_contract->parsed() || c_restrict->parsed()) {
            json j = load_json(io.input);
            bool is_bundle = j.contains("covectors");
            if (c_contract->parsed()) {
                if (is_bundle) {
                    oriented_system o = load_bundle(j);
                    if (!o.passed()) {
                        err << "input bundle fails validation\n";
                        return 1;
                    }
                    oriented_system c = contract_oig(o, mask_from_labels(o.system(), by_csv));
                    write_out(dump(bundle_json(c)), io.output, out);
                } else {
                    set_system sys = set_system_from_json(j);
                    set_system c = contract(sys, mask_from_labels(sys, by_csv));
                    write_out(dump(to_json(c)), io.output, out);
                }
            } else {
                if (is_bundle) {
                    oriented_system o = load_bundle(j);
                    if (!o.passed()) {
                        err << "input bundle fails validation\n";
                        return 1;
                    }
                    restriction_result r = restrict_oig(o, mask_from_labels(o.system(), to_csv));
                    json outj = bundle_json(r.restricted);
                    outj["hypothesis_holds"] = r.hypothesis_holds;
                    outj["report"] = report_json(r.restricted.report(), r.restricted.lattice());
                    write_out(dump(outj), io.output, out);
                } else {
                    set_system sys = set_system_from_json(j);
                    set_system r = restrict_to(sys, mask_from_labels(sys, to_csv));
                    write_out(dump(to_json(r)), io.output, out);
                }
            }
            return 0;
        }

        if (c_topes->parsed() || c_rco->parsed() || c_sphere->parsed() || c_flags->parsed()) {
            oriented_system o = load_bundle(load_json(io.input));
            if (!o.passed()) {
                err << "input bundle fails validation\n";
                return 1;
            }

            if (c_topes->parsed()) {
                tope_graph_t g = tope_graph(o);
                int base = base_str.empty() ? g.topes.front()
                                            : o.find(sign_vec_from_string(base_str));
                if (base < 0) throw error("--base is not a covector of the bundle");
                tope_poset_t tp = tope_poset(o, base);
                if (io.format == "dot")
                    write_out(tope_graph_dot(o, g), io.output, out);
                else {
                    json j2;
                    json ts = json::array();
                    for (int t : g.topes) ts.push_back(o.str(t));
                    j2["topes"] = ts;
                    json es = json::array();
                    for (auto [a, b] : g.edges) es.push_back(json::array({a, b}));
                    j2["edges"] = es;
                    j2["base"] = o.str(tp.topes[static_cast<std::size_t>(tp.base)]);
                    json cov = json::array();
                    for (auto [lo, hi] : tp.poset.cover_pairs())
                        cov.push_back(json::array({tp.poset.name(lo), tp.poset.name(hi)}));
                    j2["poset_covers"] = cov;
                    if (io.format == "text")
                        write_out("topes: " + std::to_string(g.topes.size()) +
                                      ", edges: " + std::to_string(g.edges.size()),
                                  io.output, out);
                    else
                        write_out(dump(j2), io.output, out);
                }
                return 0;
            }

            if (c_rco->parsed()) {
                int base = base_str.empty() ? o.topes().front()
                                            : o.find(sign_vec_from_string(base_str));
                if (base < 0 ||
                    std::find(o.topes().begin(), o.topes().end(), base) == o.topes().end())
                    throw error("--base is not a tope of the bundle");
                rco_node root = recursive_coatom_ordering(o, base, default_tope_extension(o, base));
                finite_poset p = augment(o);
                rco_check chk = verify_rco(p, root);
                if (io.format == "text")
                    write_out(chk.ok ? "verified" : "failed: " + chk.violation, io.output, out);
                else {
                    json j2 = rco_json(p, root);
                    j2["verified"] = chk.ok;
                    write_out(dump(j2), io.output, out);
                }
                return chk.ok ? 0 : 1;
            }

            if (c_sphere->parsed()) {
                finite_poset p = augment(o);
                std::string violation;
                bool thin = is_thin(p, &violation);
                simplicial_complex c = order_complex(p);
                homology_report h = homology_evidence(c);
                bool sphere = thin && h.matches_sphere(o.rank() - 1);
                json j2;
                j2["thin"] = thin;
                if (!thin) j2["thin_violation"] = violation;
                j2["cells_by_rank"] = cells_by_rank(o);
                j2["order_complex"] = complex_json(c);
                j2["homology"] = homology_json(h);
                j2["sphere_dimension"] = o.rank() - 1;
                j2["sphere_evidence"] = sphere;
                if (io.format == "text") {
                    std::string text = "thin: " + std::string(thin ? "yes" : "no");
                    text += "\ncells by rank:";
                    for (int c2 : cells_by_rank(o)) text += " " + std::to_string(c2);
                    text += "\neuler: " + std::to_string(h.euler);
                    text += "\nreduced betti:";
                    for (long long b : h.betti) text += " " + std::to_string(b);
                    text += "\nsphere evidence: " + std::string(sphere ? "yes" : "no");
                    write_out(text, io.output, out);
                } else {
                    write_out(dump(j2), io.output, out);
                }
                return sphere ? 0 : 1;
            }

            // flags
            std::vector<std::vector<int>> chains;
            if (!chain_str.empty()) {
                json cj = json::parse(chain_str);
                std::vector<int> chain;
                for (const json& xi : cj)
                    chain.push_back(flat_by_xi(o.lattice(), xi.get<std::vector<std::string>>()));
                chains.push_back(chain);
            } else {
                chains = descending_flat_chains(o.lattice());
            }
            bool all_ok = true;
            json rows = json::array();
            std::string text;
            for (const auto& chain : chains) {
                flag_count_result r = flag_count(o, chain);
                all_ok = all_ok && r.observed == r.predicted;
                json row;
                json cj = json::array();
                for (int f : chain)
                    cj.push_back(json(o.system().ground().labels_of(o.lattice().xi(f))));
                row["chain_xi"] = cj;
                row["observed"] = r.observed;
                row["predicted"] = r.predicted;
                rows.push_back(row);
                text += cj.dump() + " observed=" + std::to_string(r.observed) +
                        " predicted=" + std::to_string(r.predicted) + "\n";
            }
            if (io.format == "text")
                write_out(text, io.output, out);
            else
                write_out(dump(rows), io.output, out);
            return all_ok ? 0 : 1;
        }

        err << "error: no subcommand\n";
        return 2;
    } catch (const cap_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace oig
