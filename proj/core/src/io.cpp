#include "oig/io.hpp"

#include <algorithm>

namespace oig {

namespace {

json labels_json(const ground_set& g, mask_t m) {
    json out = json::array();
    for (const std::string& l : g.labels_of(m)) out.push_back(l);
    return out;
}

json rational_json(const rational& x) {
    long long num = numerator(x).convert_to<long long>();
    long long den = denominator(x).convert_to<long long>();
    return json::array({num, den});
}

rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return rational(j.get<long long>());
    if (!j.is_array() || j.size() != 2)
        throw error("expected a rational as [numerator, denominator]");
    rational den(j[1].get<long long>());
    if (den == 0) throw error("rational with zero denominator");
    return rational(j[0].get<long long>()) / den;
}

qvec qvec_from_json(const json& j) {
    qvec v;
    for (const json& x : j) v.push_back(rational_from_json(x));
    return v;
}

json qvec_json(const qvec& v) {
    json out = json::array();
    for (const rational& x : v) out.push_back(rational_json(x));
    return out;
}

}  // namespace

json to_json(const set_system& sys) {
    json j;
    j["ground"] = sys.ground().labels();
    json fam = json::array();
    for (mask_t m : sys.feasible()) fam.push_back(labels_json(sys.ground(), m));
    j["feasible"] = fam;
    return j;
}

set_system set_system_from_json(const json& j) {
    if (!j.contains("ground") || !j.contains("feasible"))
        throw error("set-system JSON needs 'ground' and 'feasible'");
    std::vector<std::string> labels = j.at("ground").get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> members;
    for (const json& m : j.at("feasible")) members.push_back(m.get<std::vector<std::string>>());
    return build_set_system(std::move(labels), members);
}

json bundle_json(const set_system& sys, const std::vector<std::string>& covs) {
    json j;
    j["system"] = to_json(sys);
    std::vector<std::string> sorted = covs;
    std::sort(sorted.begin(), sorted.end());
    j["covectors"] = sorted;
    return j;
}

json bundle_json(const oriented_system& o) { return bundle_json(o.system(), o.strings()); }

std::pair<set_system, std::vector<std::string>> bundle_from_json(const json& j) {
    if (!j.contains("system") || !j.contains("covectors"))
        throw error("bundle JSON needs 'system' and 'covectors'");
    return {set_system_from_json(j.at("system")),
            j.at("covectors").get<std::vector<std::string>>()};
}

json report_json(const axiom_report& rep, const set_system& sys) {
    json j;
    j["class"] = to_string(rep.class_checked);
    j["passed"] = rep.passed;
    j["loops"] = labels_json(sys.ground(), sys.ground().full() & ~sys.union_of_members());
    json vs = json::array();
    for (const axiom_violation& v : rep.violations) {
        json e;
        e["axiom"] = to_string(v.axiom);
        if (v.x) e["X"] = labels_json(sys.ground(), *v.x);
        if (v.y) e["Y"] = labels_json(sys.ground(), *v.y);
        if (v.z) e["Z"] = labels_json(sys.ground(), *v.z);
        if (v.element) e["e"] = sys.ground().label(*v.element);
        vs.push_back(e);
    }
    j["violations"] = vs;
    return j;
}

json report_json(const orientation_report& rep, const flat_lattice& lat) {
    json j;
    j["passed"] = rep.passed;
    j["non_covectors"] = rep.non_covectors;
    json og1 = json::array();
    for (int f : rep.og1_missing_flats) og1.push_back(labels_json(lat.system().ground(), lat.xi(f)));
    j["og1_missing_flats_xi"] = og1;
    j["og2_missing_negations"] = rep.og2_missing_negations;
    json og3 = json::array();
    for (const auto& t : rep.og3_missing_products) og3.push_back(json::array({t[0], t[1], t[2]}));
    j["og3_missing_products"] = og3;
    json og4 = json::array();
    for (const auto& w : rep.og4_failures) {
        json e;
        e["a"] = w.a;
        e["b"] = w.b;
        e["x"] = lat.system().ground().label(w.x);
        og4.push_back(e);
    }
    j["og4_failures"] = og4;
    return j;
}

json lattice_json(const flat_lattice& lat) {
    json j;
    j["loops"] = labels_json(lat.system().ground(),
                             lat.system().ground().full() & ~lat.system().union_of_members());
    j["rank"] = lat.rank();
    j["top"] = lat.top();
    j["bottom"] = lat.bottom();
    json flats = json::array();
    for (int f = 0; f < lat.size(); ++f) {
        json e;
        e["id"] = f;
        e["corank"] = lat.corank(f);
        e["xi"] = labels_json(lat.system().ground(), lat.xi(f));
        e["gamma"] = labels_json(lat.system().ground(), lat.gamma(f));
        json mem = json::array();
        for (mask_t m : lat.at(f).members) mem.push_back(labels_json(lat.system().ground(), m));
        e["members"] = mem;
        flats.push_back(e);
    }
    j["flats"] = flats;
    json covers = json::array();
    for (auto [lo, hi] : lat.cover_pairs()) covers.push_back(json::array({lo, hi}));
    j["covers"] = covers;
    return j;
}

namespace {

std::string set_label(const ground_set& g, mask_t m) {
    if (!m) return "{}";
    std::string s = "{";
    bool first = true;
    for (const std::string& l : g.labels_of(m)) {
        if (!first) s += ",";
        s += l;
        first = false;
    }
    return s + "}";
}

}  // namespace

std::string lattice_dot(const flat_lattice& lat) {
    std::string out = "graph flats {\n  rankdir=BT;\n";
    for (int f = 0; f < lat.size(); ++f)
        out += "  n" + std::to_string(f) + " [label=\"" +
               set_label(lat.system().ground(), lat.xi(f)) + "\"];\n";
    auto covers = lat.cover_pairs();
    std::sort(covers.begin(), covers.end());
    for (auto [lo, hi] : covers)
        out += "  n" + std::to_string(lo) + " -- n" + std::to_string(hi) + ";\n";
    return out + "}\n";
}

json covector_json(const oriented_system& o, int i) {
    json j;
    j["signs"] = o.str(i);
    j["support_xi"] = labels_json(o.system().ground(), o.lattice().xi(o.at(i).support));
    return j;
}

json to_json(const rational_arrangement& arr) {
    json j;
    j["d"] = arr.dimension();
    json forms = json::array();
    for (const qvec& f : arr.forms()) forms.push_back(qvec_json(f));
    j["forms"] = forms;
    return j;
}

rational_arrangement arrangement_from_json(const json& j) {
    if (!j.contains("d") || !j.contains("forms"))
        throw error("arrangement JSON needs 'd' and 'forms'");
    std::vector<qvec> forms;
    for (const json& f : j.at("forms")) forms.push_back(qvec_from_json(f));
    return rational_arrangement(j.at("d").get<int>(), std::move(forms));
}

json to_json(const point_configuration& pts) {
    json j;
    j["d"] = pts.d;
    json ps = json::array();
    for (const qvec& p : pts.points) ps.push_back(qvec_json(p));
    j["points"] = ps;
    j["labels"] = pts.labels;
    return j;
}

point_configuration points_from_json(const json& j) {
    if (!j.contains("d") || !j.contains("points"))
        throw error("point-set JSON needs 'd' and 'points'");
    point_configuration pts;
    pts.d = j.at("d").get<int>();
    for (const json& p : j.at("points")) pts.points.push_back(qvec_from_json(p));
    if (j.contains("labels"))
        pts.labels = j.at("labels").get<std::vector<std::string>>();
    else
        for (std::size_t i = 0; i < pts.points.size(); ++i)
            pts.labels.push_back("p" + std::to_string(i));
    return pts;
}

std::pair<std::vector<qvec>, std::vector<std::string>> vectors_from_json(const json& j) {
    if (!j.contains("vectors")) throw error("vector JSON needs 'vectors'");
    std::vector<qvec> vs;
    for (const json& v : j.at("vectors")) vs.push_back(qvec_from_json(v));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return {std::move(vs), std::move(labels)};
}

std::string poset_dot(const finite_poset& p, const std::string& name) {
    std::string out = "graph " + name + " {\n  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + p.name(i) + "\"];\n";
    auto covers = p.cover_pairs();
    std::sort(covers.begin(), covers.end());
    for (auto [lo, hi] : covers)
        out += "  n" + std::to_string(lo) + " -- n" + std::to_string(hi) + ";\n";
    return out + "}\n";
}

std::string tope_graph_dot(const oriented_system& o, const tope_graph_t& g) {
    std::string out = "graph topes {\n";
    for (std::size_t k = 0; k < g.topes.size(); ++k)
        out += "  n" + std::to_string(k) + " [label=\"" + o.str(g.topes[k]) + "\"];\n";
    for (auto [a, b] : g.edges)
        out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
    return out + "}\n";
}

json complex_json(const simplicial_complex& c) {
    json j;
    j["vertices"] = c.vertices;
    json facets = json::array();
    for (int d = 0; d <= c.dimension(); ++d)
        for (const auto& f : c.faces_by_dim[static_cast<std::size_t>(d)]) {
            bool maximal = true;
            if (d + 1 <= c.dimension())
                for (const auto& g : c.faces_by_dim[static_cast<std::size_t>(d + 1)])
                    if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                        maximal = false;
                        break;
                    }
            if (maximal) facets.push_back(f);
        }
    j["facets"] = facets;
    return j;
}

json homology_json(const homology_report& rep) {
    json j;
    j["euler"] = rep.euler;
    j["face_counts"] = rep.face_counts;
    j["reduced_betti"] = rep.betti;
    json tor = json::array();
    for (const auto& t : rep.torsion) {
        json row = json::array();
        for (const bigint& v : t) row.push_back(v.str());
        tor.push_back(row);
    }
    j["torsion"] = tor;
    return j;
}

json rco_json(const finite_poset& p, const rco_node& node) {
    json j;
    j["top"] = p.name(node.top);
    json cs = json::array();
    for (std::size_t i = 0; i < node.coatoms.size(); ++i)
        cs.push_back(rco_json(p, node.children[i]));
    j["coatoms"] = cs;
    return j;
}

}  // namespace oig
