#include <doctest.h>

#include <algorithm>

#include "oig/counting.hpp"
#include "support.hpp"

using namespace oig;

TEST_CASE("flag counts on the colinear orientation") {
    oriented_system o = testing::colinear_oig();
    const flat_lattice& L = o.lattice();
    auto flat_with_xi = [&](mask_t xi) {
        for (int f = 0; f < L.size(); ++f)
            if (L.xi(f) == xi) return f;
        return -1;
    };

    // ([emptyset], 0-hat): the tope count
    flag_count_result r = flag_count(o, {L.top(), L.bottom()});
    CHECK(r.observed == 4);
    CHECK(r.predicted == 4);

    // (0-hat) alone
    r = flag_count(o, {L.bottom()});
    CHECK(r.observed == 1);
    CHECK(r.predicted == 1);

    // ([emptyset], [{x}], 0-hat)
    int fx = flat_with_xi(o.system().ground().mask_of({"x"}));
    r = flag_count(o, {L.top(), fx, L.bottom()});
    CHECK(r.observed == 8);
    CHECK(r.predicted == 8);

    CHECK_THROWS_AS(flag_count(o, {L.top()}), error);
    CHECK_THROWS_AS(flag_count(o, {L.bottom(), L.top()}), error);
}

TEST_CASE("flag counts agree on every chain of the corpus") {
    for (const oriented_system& o :
         {testing::colinear_oig(), testing::three_vector_om(), testing::rank1_complexified()}) {
        for (const auto& chain : descending_flat_chains(o.lattice())) {
            flag_count_result r = flag_count(o, chain);
            CHECK(r.observed == r.predicted);
        }
    }
}

TEST_CASE("tope counts from the Möbius sums") {
    oriented_system colinear = testing::colinear_oig();
    long long sum = 0;
    const flat_lattice& L = colinear.lattice();
    for (int f = 0; f < L.size(); ++f) sum += std::abs(mobius_flats(L, f, L.top()));
    CHECK(sum == 4);

    oriented_system om = testing::three_vector_om();
    long long sum6 = 0;
    for (int f = 0; f < om.lattice().size(); ++f)
        sum6 += std::abs(mobius_flats(om.lattice(), f, om.lattice().top()));
    CHECK(sum6 == 6);
}

TEST_CASE("underlying flat embedding") {
    oriented_system o = testing::colinear_oig();
    embedding_report rep = underlying_flat_embedding_checks(o);
    CHECK(rep.ok);
    const flat_lattice& L = o.lattice();
    auto xi_of = [&](int f) { return L.xi(f); };
    std::vector<mask_t> image_xi;
    for (int f : rep.image) image_xi.push_back(xi_of(f));
    std::sort(image_xi.begin(), image_xi.end());
    const ground_set& g = o.system().ground();
    std::vector<mask_t> expect = {0, g.mask_of({"x"}), g.mask_of({"z"}), g.mask_of({"x", "z"})};
    std::sort(expect.begin(), expect.end());
    CHECK(image_xi == expect);
    CHECK(rep.tope_count_full == 4);
    CHECK(rep.tope_count_restricted == 4);

    // mu vanishes off the image
    for (int f = 0; f < L.size(); ++f)
        if (!std::binary_search(rep.image.begin(), rep.image.end(), f))
            CHECK(mobius_flats(L, f, L.top()) == 0);

    // for a loopless matroid every flat is a meet of coatoms
    oriented_system om = testing::three_vector_om();
    embedding_report rep2 = underlying_flat_embedding_checks(om);
    CHECK(rep2.ok);
    CHECK(static_cast<int>(rep2.image.size()) == om.lattice().size());
}
