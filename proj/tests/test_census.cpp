#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "frobalg/census.hpp"
#include "frobalg/cli.hpp"
#include "frobalg/parse.hpp"
#include "helpers.hpp"

using namespace frobalg;
using namespace frobalg::testing;

namespace {

std::uint32_t mask_of(std::initializer_list<int> vars) {
    std::uint32_t m = 0;
    for (int v : vars) m |= 1u << (v - 1);
    return m;
}

// Independent orbit count for pure height two: families of edges encoded as
// an upper-triangle adjacency bitmask, canonicalized by maximizing the
// bitmask over all vertex permutations.
long long spanning_graph_orbits(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    auto edge_index = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (edges[k] == std::pair<int, int>{a, b}) return k;
        return edges.size();
    };
    std::set<std::uint64_t> canon;
    for (std::uint64_t g = 1; g < (1ull << edges.size()); ++g) {
        std::uint32_t covered = 0;
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (g & (1ull << k)) covered |= (1u << edges[k].first) | (1u << edges[k].second);
        if (covered != (1u << n) - 1) continue;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t best = 0;
        do {
            std::uint64_t image = 0;
            for (std::size_t k = 0; k < edges.size(); ++k)
                if (g & (1ull << k))
                    image |= 1ull << edge_index(perm[edges[k].first], perm[edges[k].second]);
            best = std::max(best, image);
        } while (std::next_permutation(perm.begin(), perm.end()));
        canon.insert(best);
    }
    return static_cast<long long>(canon.size());
}

int run_cli(const std::string& line, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::vector<std::string> args;
    std::istringstream words(line);
    std::string w;
    bool in_quote = false;
    std::string current;
    for (char c : line) {
        if (c == '\'') {
            in_quote = !in_quote;
            continue;
        }
        if (c == ' ' && !in_quote) {
            if (!current.empty()) args.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) args.push_back(current);
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("enumeration counts") {
    CHECK(enumerate_ideals(3, 3, true, true).size() == 1);
    CHECK(enumerate_ideals(4, 2, true, true).size() == 7);
    CHECK(enumerate_ideals(3, 2, true, true).size() == 2);
    CHECK(enumerate_ideals(5, 4, true, true).size() == 4);

    // orbit counts of covering pure-height-two families are spanning-graph
    // orbit counts; checked against an independent canonicalization
    for (int n = 3; n <= 5; ++n)
        CHECK(static_cast<long long>(enumerate_ideals(n, 2, true, true).size()) ==
              spanning_graph_orbits(n));

    // non-covering enumeration only adds families missing a variable
    CHECK(enumerate_ideals(3, 2, true, false).size() == 3);  // plus the lone edge
}

TEST_CASE("mixed-height enumeration") {
    auto ideals = enumerate_ideals(3, 1, false, true);
    // antichains on three variables with a height-one member, covering
    for (const CanonicalIdeal& ci : ideals) {
        HeightProfile hp = height_profile(Decomposition{ci.n, ci.components});
        CHECK(hp.height == 1);
        CHECK(hp.covering);
    }
    // exactly two orbits: three singletons, or a singleton plus the
    // complementary pair
    CHECK(ideals.size() == 2);
}

TEST_CASE("canonical forms") {
    CanonicalIdeal a = canonical_form(
        Decomposition{4, {mask_of({1, 2}), mask_of({3, 4})}});
    CanonicalIdeal b = canonical_form(
        Decomposition{4, {mask_of({1, 4}), mask_of({2, 3})}});
    CHECK(a == b);

    CanonicalIdeal single = canonical_form(Decomposition{3, {mask_of({1})}});
    CHECK(single.components == std::vector<std::uint32_t>{1});

    // all relabelings of the four-component example share one form
    Decomposition D = primary_decomposition(
        parse_ideal("x1*x2*x4, x1*x3, x2*x3, x3*x4", 4));
    CanonicalIdeal reference = canonical_form(D);
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::uint32_t> comps;
        for (std::uint32_t c : D.components) {
            std::uint32_t image = 0;
            for (int i = 0; i < 4; ++i)
                if (c & (1u << i)) image |= 1u << perm[i];
            comps.push_back(image);
        }
        CHECK(canonical_form(Decomposition{4, comps}) == reference);
    } while (std::next_permutation(perm.begin(), perm.end()));

    CHECK_THROWS_AS(canonical_form(Decomposition{2, {1, 3}}), PreconditionError);
}

TEST_CASE("canonicalization is idempotent on random antichains") {
    for (int iter = 0; iter < 100; ++iter) {
        int n = rand_int(2, 6);
        MonomialIdeal I = random_squarefree_ideal(n, 4);
        if (I.is_zero()) continue;
        Decomposition D = primary_decomposition(I);
        CanonicalIdeal c = canonical_form(D);
        CHECK(canonical_form(Decomposition{n, c.components}) == c);
        CHECK(is_canonical(n, c.components));

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng());
        std::vector<std::uint32_t> comps;
        for (std::uint32_t m : D.components) {
            std::uint32_t image = 0;
            for (int i = 0; i < n; ++i)
                if (m & (1u << i)) image |= 1u << perm[i];
            comps.push_back(image);
        }
        CHECK(canonical_form(Decomposition{n, comps}) == c);
    }
}

TEST_CASE("census tables for three and four variables") {
    auto rows3 = census(3, 2);
    REQUIRE(rows3.size() == 3);
    CHECK((rows3[0].pg == 1 && rows3[0].gor == 1 && rows3[0].ig == 0));
    CHECK((rows3[1].pg == 2 && rows3[1].gor == 1 && rows3[1].ig == 0));
    CHECK((rows3[2].pg == 1 && rows3[2].gor == 1 && rows3[2].ig == 0));

    auto rows4 = census(4, 2);
    REQUIRE(rows4.size() == 4);
    CHECK((rows4[0].pg == 1 && rows4[0].gor == 1 && rows4[0].ig == 0));
    CHECK((rows4[1].pg == 4 && rows4[1].gor == 2 && rows4[1].ig == 3));
    CHECK((rows4[2].pg == 3 && rows4[2].gor == 1 && rows4[2].ig == 0));
    CHECK((rows4[3].pg == 1 && rows4[3].gor == 1 && rows4[3].ig == 0));

    // totals agree with the enumeration, and a parallel run agrees
    for (int h = 1; h <= 4; ++h)
        CHECK(rows4[h - 1].pg + rows4[h - 1].ig ==
              static_cast<long long>(enumerate_ideals(4, h, true, true).size()));
    auto rows4p = census(4, 2, 4);
    for (int h = 0; h < 4; ++h) {
        CHECK(rows4p[h].pg == rows4[h].pg);
        CHECK(rows4p[h].gor == rows4[h].gor);
        CHECK(rows4p[h].ig == rows4[h].ig);
    }
}

TEST_CASE("duality does not preserve the generation type") {
    MonomialIdeal I = parse_ideal("x1*x3, x1*x4, x2*x3, x2*x4", 4);
    MonomialIdeal dual = alexander_dual(I);
    CHECK(ideal_equal(dual, parse_ideal("x1*x2, x3*x4", 4)));
    CHECK_FALSE(classify(I, 2).finitely_generated);
    CHECK(classify(dual, 2).finitely_generated);

    // both sit in the four-variable height-two census population
    auto pop = enumerate_ideals(4, 2, true, true);
    CHECK(std::count(pop.begin(), pop.end(), canonical_form(primary_decomposition(I))) == 1);
    CHECK(std::count(pop.begin(), pop.end(), canonical_form(primary_decomposition(dual))) == 1);
}

TEST_CASE("feasibility guards") {
    CHECK_THROWS_AS(canonical_form(Decomposition{11, {1}}), PreconditionError);
    CHECK_THROWS_AS(enumerate_ideals(7, 3, true, true), PreconditionError);
    CHECK_THROWS_AS(enumerate_ideals(7, 1, false, true), PreconditionError);
    CHECK_THROWS_AS(enumerate_ideals(8, 1, true, true), PreconditionError);
    // the feasible n = 7 heights still run
    CHECK(enumerate_ideals(7, 6, true, true).size() > 0);
}

TEST_CASE("family builders") {
    CHECK(ideal_equal(build_Ikn(1, 4), parse_ideal("x1*x2*x3*x4", 4)));
    CHECK(ideal_equal(build_Ikn(4, 4), parse_ideal("x1, x2, x3, x4", 4)));
    CHECK(ideal_equal(build_Ikn(2, 3), parse_ideal("x1*x2, x1*x3, x2*x3", 3)));

    CHECK_THROWS_AS(build_Ikn(5, 4), PreconditionError);
    CHECK_THROWS_AS(build_family_4_2(4, 4, {}), PreconditionError);
    CHECK_THROWS_AS(build_family_4_2(5, 2, {2}), PreconditionError);
}

TEST_CASE("cli classify json") {
    std::string out;
    int code = run_cli("classify --ideal 'x1*x2, x1*x3' -p 2", &out);
    CHECK(code == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["n"] == 3);
    CHECK(doc["p"] == 2);
    CHECK(doc["case"] == "II");
    CHECK(doc["finitely_generated"] == false);
    CHECK(doc["mu"] == 2);
    CHECK(doc["height"] == 1);
    CHECK(doc["pure"] == false);
    CHECK(doc["gorenstein"] == false);
    CHECK(doc["cohen_macaulay"] == false);
    CHECK(doc["generators"].size() == 2);
    CHECK(doc["decomposition"].size() == 2);
    CHECK(doc["colon_symbolic"].size() == 3);
}

TEST_CASE("cli census formats") {
    std::string out;
    CHECK(run_cli("census -n 4 -p 2 --format csv", &out) == 0);
    CHECK(out ==
          "n,height,pg,gor,ig\n4,1,1,1,0\n4,2,4,2,3\n4,3,3,1,0\n4,4,1,1,0\n");

    CHECK(run_cli("census -n 3 -p 3 --format json", &out) == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["rows"].size() == 3);
    CHECK(doc["rows"][1]["pg"] == 2);

    CHECK(run_cli("census -n 3 -p 2 --format text", &out) == 0);
    CHECK(out.find("p.g.") != std::string::npos);
}

TEST_CASE("cli error paths") {
    std::string out, err;
    CHECK(run_cli("classify --ideal 'x1*, x2' -p 2", &out, &err) == 2);
    CHECK(err.find("parse error") != std::string::npos);

    CHECK(run_cli("classify --ideal 'x1^2*x2' -p 2", &out, &err) == 3);
    CHECK(run_cli("classify --ideal 'x1*x2' -p 4", &out, &err) == 3);
    CHECK(run_cli("classify --ideal 'x1*x9' -n 3 -p 2", &out, &err) == 2);
    CHECK(run_cli("katzman --ideal 'x1*x2*x3' -p 2", &out, &err) == 3);
    CHECK(run_cli("frobnicate", &out, &err) == 2);
    CHECK(run_cli("classify --format yaml --ideal 'x1'", &out, &err) == 2);
}

TEST_CASE("cli colon and decompose") {
    std::string out;
    CHECK(run_cli("colon --ideal 'x1*x2, x1*x3' --q 2", &out) == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["generators"].size() == 3);
    CHECK(doc["q"] == 2);
    std::vector<std::string> inst = doc["instantiated"];
    std::vector<std::string> expected = {"x1*x2^2", "x1*x2*x3", "x1*x3^2"};
    CHECK(inst == expected);

    CHECK(run_cli("decompose --ideal 'x1*x2, x1*x3'", &out) == 0);
    auto dec = nlohmann::json::parse(out);
    CHECK(dec["components"].size() == 2);
    CHECK(dec["height"] == 1);
    CHECK(dec["covering"] == true);
}

TEST_CASE("cli analysis commands") {
    std::string out;
    CHECK(run_cli("katzman --ideal 'x1*x2, x1*x3' -p 2 --emax 3", &out) == 0);
    auto doc = nlohmann::json::parse(out);
    REQUIRE(doc["levels"].size() == 3);
    CHECK(doc["levels"][0]["witness"] == "x1*x2^2");
    CHECK(doc["levels"][0]["L_is_zero"] == true);
    CHECK(doc["levels"][1]["witness"] == "x1^3*x2^4");

    CHECK(run_cli("gauge-check --ideal 'x1*x2, x1*x3' -p 3 -e 1", &out) == 0);
    auto gauge_doc = nlohmann::json::parse(out);
    CHECK(gauge_doc["ok"] == true);
    CHECK(gauge_doc["violations"] == 0);

    CHECK(run_cli("diffops --ideal 'x1*x2, x2*x3' -p 2 -e 1", &out) == 0);
    auto diff_doc = nlohmann::json::parse(out);
    CHECK(diff_doc["phi_images"].size() == 3);
    for (const auto& img : diff_doc["phi_images"]) CHECK(img["in_DR"] == true);
    CHECK(diff_doc["non_image_witness"]["bounded_check_passed"] == true);
}
