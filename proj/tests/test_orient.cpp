#include <doctest.h>

#include <algorithm>

#include "oig/orient.hpp"
#include "support.hpp"

using namespace oig;

TEST_CASE("validate_oig on the colinear antimatroid") {
    set_system sys = testing::colinear_system();
    oriented_system o = testing::colinear_oig();
    CHECK(o.passed());
    CHECK(o.size() == 19);

    // a single bottom is not surjective on supports
    oriented_system only_bottom = oriented_system::validate(sys, {"000"});
    CHECK_FALSE(only_bottom.passed());
    CHECK_FALSE(only_bottom.report().og1_ok());

    // dropping a negation pair breaks the orientation
    std::vector<std::string> covs = o.strings();
    std::erase(covs, "0++");
    std::erase(covs, "0--");
    CHECK_FALSE(oriented_system::validate(sys, covs).passed());

    // non-covector members are reported, not thrown
    std::vector<std::string> with_bad = o.strings();
    with_bad.push_back("111");
    oriented_system bad = oriented_system::validate(sys, with_bad);
    CHECK_FALSE(bad.passed());
    CHECK(bad.report().non_covectors == std::vector<std::string>{"111"});
}

TEST_CASE("oig_from_antimatroid") {
    CHECK(testing::colinear_oig().size() == 19);

    set_system one = build_set_system({"e"}, {{}, {"e"}});
    CHECK(oig_from_antimatroid(one).size() == 3);

    set_system two = build_set_system({"x", "y"}, {{}, {"x"}, {"y"}, {"x", "y"}});
    CHECK(oig_from_antimatroid(two).size() == 9);

    // a matroid that is not an antimatroid is rejected
    set_system vm = build_set_system(
        {"x", "y", "z"}, {{}, {"x"}, {"y"}, {"z"}, {"x", "y"}, {"x", "z"}, {"y", "z"}});
    CHECK_THROWS_AS(oig_from_antimatroid(vm), error);
}

TEST_CASE("contract_oig") {
    oriented_system o = testing::colinear_oig();
    const set_system& sys = o.system();

    oriented_system by_all = contract_oig(o, sys.ground().full());
    CHECK(by_all.size() == 1);
    CHECK(by_all.n() == 0);

    oriented_system by_none = contract_oig(o, 0);
    CHECK(by_none.strings() == o.strings());

    oriented_system by_x = contract_oig(o, sys.ground().mask_of({"x"}));
    CHECK(by_x.passed());
    CHECK(by_x.n() == 2);
    CHECK(by_x.size() == 9);
    CHECK(by_x.system().feasible().size() == 4);

    CHECK_THROWS_AS(contract_oig(o, sys.ground().mask_of({"y"})), error);
}

TEST_CASE("restrict_oig") {
    oriented_system o = testing::colinear_oig();
    const set_system& sys = o.system();

    restriction_result r = restrict_oig(o, sys.ground().mask_of({"x", "y"}));
    CHECK_FALSE(r.hypothesis_holds);
    CHECK(r.restricted.strings() ==
          std::vector<std::string>{"+1", "-1", "0+", "0-", "00"});
    // this particular restriction happens to satisfy all four axioms
    CHECK(r.restricted.report().og1_ok());
    CHECK(r.restricted.report().og2_ok());
    CHECK(r.restricted.report().og3_ok());

    restriction_result full = restrict_oig(o, sys.ground().full());
    CHECK(full.hypothesis_holds);
    CHECK(full.restricted.strings() == o.strings());

    CHECK_THROWS_AS(restrict_oig(o, mask_t{1} << 10), error);
}

TEST_CASE("restrict_to_xi") {
    oriented_system o = testing::colinear_oig();
    const set_system& sys = o.system();

    // xi([emptyset]) is empty: the restriction is the one-covector system
    oriented_system r0 = restrict_to_xi(o, 0);
    CHECK(r0.n() == 0);
    CHECK(r0.size() == 1);

    oriented_system rx = restrict_to_xi(o, sys.ground().mask_of({"x"}));
    CHECK(rx.passed());
    CHECK(rx.n() == 1);
    CHECK(rx.size() == 3);

    // |L restricted to xi(X)| = |{beta >= alpha}| for every feasible X
    for (mask_t x : sys.feasible()) {
        oriented_system r = restrict_to_xi(o, x);
        int fx = o.lattice().flat_of(x);
        int a0 = -1;
        for (int i = 0; i < o.size(); ++i)
            if (o.at(i).support == fx) {
                a0 = i;
                break;
            }
        int above = 0;
        for (int i = 0; i < o.size(); ++i)
            if (o.leq(a0, i)) ++above;
        CHECK(r.size() == above);
    }
}

TEST_CASE("underlying oriented matroid") {
    oriented_system o = testing::colinear_oig();
    oriented_system uom = underlying_oriented_matroid(o);
    CHECK(uom.passed());
    CHECK(uom.n() == 2);
    CHECK(uom.size() == 9);  // rank-2 OM on two elements
    CHECK(uom.strings() == std::vector<std::string>{"++", "+-", "+0", "-+", "--", "-0", "0+",
                                                    "0-", "00"});

    // an oriented matroid restricts to itself
    oriented_system om = testing::three_vector_om();
    oriented_system om2 = underlying_oriented_matroid(om);
    CHECK(om2.strings() == om.strings());

    // the rank-1 complexified system restricts to a 3-covector matroid
    oriented_system cx = testing::rank1_complexified();
    oriented_system ucx = underlying_oriented_matroid(cx);
    CHECK(ucx.n() == 1);
    CHECK(ucx.size() == 3);
}

TEST_CASE("bottom") {
    oriented_system o = testing::colinear_oig();
    CHECK(to_string(oig_bottom(o).v, 3) == "000");
    oriented_system cx = testing::rank1_complexified();
    CHECK(to_string(oig_bottom(cx).v, 2) == "00");
    oriented_system om = testing::three_vector_om();
    CHECK(to_string(oig_bottom(om).v, 3) == "000");
}

TEST_CASE("drop_witness") {
    oriented_system o = testing::colinear_oig();
    auto cov = [&](const std::string& s) { return o.at(o.find(sign_vec_from_string(s))); };

    covector d = drop_witness(o, cov("-+0"), cov("+1+"));
    CHECK(to_string(d.v, 3) == "0++");  // "0-+" is the other valid witness

    // bottom is below everything, so the precondition fails
    CHECK_THROWS_AS(drop_witness(o, cov("000"), cov("+1+")), error);

    oriented_system cx = testing::rank1_complexified();
    auto cc = [&](const std::string& s) { return cx.at(cx.find(sign_vec_from_string(s))); };
    // both subtopes sit below both topes here, so the only incomparable pairs
    // with comparable supports are the opposite topes
    covector d2 = drop_witness(cx, cc("1+"), cc("1-"));
    CHECK(to_string(d2.v, 2) == "+0");

    // witness existence across all valid pairs in the corpus
    for (const oriented_system& s :
         {testing::colinear_oig(), testing::three_vector_om(), testing::rank1_complexified()}) {
        for (int i = 0; i < s.size(); ++i)
            for (int j = 0; j < s.size(); ++j) {
                if (!s.lattice().leq(s.at(i).support, s.at(j).support)) continue;
                if (sign_leq_all(s.at(i).v, s.at(j).v)) continue;
                CHECK_NOTHROW(drop_witness(s, s.at(i), s.at(j)));
            }
    }
}

TEST_CASE("commutation outside the separation set") {
    for (const oriented_system& o :
         {testing::colinear_oig(), testing::three_vector_om(), testing::rank1_complexified()}) {
        const flat_lattice& L = o.lattice();
        for (int i = 0; i < o.size(); ++i)
            for (int j = 0; j < o.size(); ++j) {
                covector ab = circ(L, o.at(i), o.at(j));
                covector ba = circ(L, o.at(j), o.at(i));
                mask_t sep = separation(o.at(i).v, o.at(j).v);
                for (int e = 0; e < o.n(); ++e)
                    if (ab.v.get(e) != ba.v.get(e)) CHECK(contains(sep, e));
            }
    }
}

TEST_CASE("support is a cover-preserving surjection and the poset is graded") {
    for (const oriented_system& o :
         {testing::colinear_oig(), testing::three_vector_om(), testing::rank1_complexified()}) {
        const flat_lattice& L = o.lattice();
        std::vector<char> seen(static_cast<std::size_t>(L.size()), 0);
        for (int i = 0; i < o.size(); ++i) seen[static_cast<std::size_t>(o.at(i).support)] = 1;
        for (char s : seen) CHECK(s == 1);
        auto below = o.lower_cover_lists();
        // cover lists derived from the support grading agree with the honest
        // cover relation
        for (int j = 0; j < o.size(); ++j)
            for (int i = 0; i < o.size(); ++i) {
                bool listed = std::find(below[static_cast<std::size_t>(j)].begin(),
                                        below[static_cast<std::size_t>(j)].end(),
                                        i) != below[static_cast<std::size_t>(j)].end();
                bool strict = o.leq(i, j) && !(o.at(i).v == o.at(j).v);
                bool has_mid = false;
                for (int k = 0; k < o.size() && !has_mid; ++k)
                    if (k != i && k != j && o.leq(i, k) && o.leq(k, j) &&
                        !(o.at(k).v == o.at(i).v) && !(o.at(k).v == o.at(j).v))
                        has_mid = true;
                CHECK(listed == (strict && !has_mid));
                if (listed)
                    CHECK(L.leq(o.at(i).support, o.at(j).support));
            }
    }
}

TEST_CASE("rank-1 systems have exactly three covectors") {
    set_system one = build_set_system({"e"}, {{}, {"e"}});
    oriented_system o = oig_from_antimatroid(one);
    CHECK(o.rank() == 1);
    CHECK(o.size() == 3);
    int b = o.bottom_index();
    int others = 0;
    for (int i = 0; i < o.size(); ++i)
        if (i != b) {
            ++others;
            CHECK(o.rank_of(i) == 1);
        }
    CHECK(others == 2);
}

TEST_CASE("og4 witnesses on request") {
    oriented_system o = testing::colinear_oig();
    auto cov = [&](const std::string& s) { return o.at(o.find(sign_vec_from_string(s))); };
    // opposite topes separate everywhere on Gamma(emptyset)
    covector a = cov("+1+"), b = cov("-1-");
    for (int x : elements_of(separation(a.v, b.v))) {
        std::vector<covector> ws = og4_witnesses(o, a, b, x);
        CHECK(!ws.empty());
        for (const covector& g : ws) CHECK(g.v.get(x) == sign_symbol::zero);
    }
    CHECK_THROWS_AS(og4_witnesses(o, a, a, 0), error);  // empty separation set

    // validation succeeds exactly when every instance has a witness
    for (int i = 0; i < o.size(); ++i)
        for (int j = 0; j < o.size(); ++j) {
            covector ab = circ(o.lattice(), o.at(i), o.at(j));
            for (int x : elements_of(separation(o.at(i).v, o.at(j).v) & ~ab.v.ones()))
                CHECK(!og4_witnesses(o, o.at(i), o.at(j), x).empty());
        }
}

TEST_CASE("uniqueness deletions on a second antimatroid") {
    set_system square = build_set_system({"x", "y"}, {{}, {"x"}, {"y"}, {"x", "y"}});
    oriented_system o = oig_from_antimatroid(square);
    std::vector<std::string> all = o.strings();
    for (const std::string& s : all) {
        std::string neg = to_string(negate(sign_vec_from_string(s)), 2);
        if (neg <= s) continue;
        std::vector<std::string> rest;
        for (const std::string& t : all)
            if (t != s && t != neg) rest.push_back(t);
        CHECK_FALSE(oriented_system::validate(square, rest).passed());
    }
}

TEST_CASE("rank-2 classification") {
    // a single coatom forces the special five-element poset
    set_system chain = build_set_system({"x", "y"}, {{}, {"y"}, {"x", "y"}});
    rank2_report five = classify_rank2(oig_from_antimatroid(chain));
    CHECK(five.kind == rank2_case::single_coatom_five);
    CHECK(five.shape_ok);
    CHECK(classify_rank2(testing::rank1_complexified()).shape_ok);

    // two coatoms give a rank-2 oriented matroid
    set_system square = build_set_system({"x", "y"}, {{}, {"x"}, {"y"}, {"x", "y"}});
    rank2_report om2 = classify_rank2(oig_from_antimatroid(square));
    CHECK(om2.kind == rank2_case::om_rank2);
    CHECK(om2.shape_ok);

    CHECK_THROWS_AS(classify_rank2(testing::colinear_oig()), error);  // rank 3
}

TEST_CASE("loops are admitted and reported") {
    // c sits in no feasible set; operations still work
    set_system sys = build_set_system({"a", "b", "c"}, {{}, {"a"}, {"a", "b"}});
    CHECK(check_axioms(sys, axiom_class::interval_greedoid).passed);
    CHECK(sys.union_of_members() == sys.ground().mask_of({"a", "b"}));
    oriented_system o = oig_from_antimatroid(sys);
    CHECK(o.passed());
    // loop positions carry the value one in every covector
    for (int i = 0; i < o.size(); ++i)
        CHECK(o.at(i).v.get(2) == sign_symbol::one);
}

TEST_CASE("oriented matroid validator") {
    oriented_system om = testing::three_vector_om();
    std::vector<sign_vec> vs;
    for (int i = 0; i < om.size(); ++i) vs.push_back(om.at(i).v);
    om_report rep = validate_om(3, vs);
    CHECK(rep.passed);
    CHECK(om_underlying_matches(rep, om.lattice()));

    // dropping the zero vector breaks (OM1)
    std::vector<sign_vec> no_zero;
    for (const sign_vec& v : vs)
        if (!(v == sign_vec{})) no_zero.push_back(v);
    CHECK_FALSE(validate_om(3, no_zero).passed);

    // sign vectors with a one are rejected
    CHECK_THROWS_AS(validate_om(2, {sign_vec_from_string("1+")}), error);
}
