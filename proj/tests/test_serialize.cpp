#include <doctest.h>

#include "glnq/error.hpp"
#include "glnq/serialize.hpp"
#include "support.hpp"

using namespace glnq;

TEST_CASE("display") {
    CHECK(display(CyclotomicSum::root_of_unity(3, 1) + CyclotomicSum::root_of_unity(3, 2)) == "-1");
    CHECK(display(CyclotomicSum(6, 4)) == "4");
    CHECK(display(CyclotomicSum::root_of_unity(7, 1) + CyclotomicSum::root_of_unity(7, 2) + CyclotomicSum::root_of_unity(7, 4)) ==
          "z7^1 + z7^2 + z7^4");
}

TEST_CASE("partitions and class indices") {
    CHECK(to_json(Partition{3, 2, 2}).dump() == "[3,2,2]");
    CHECK(to_json(Partition{}).dump() == "[]");
    CHECK(partition_from_json(json::parse("[1,3]")) == Partition{3, 1});
    const Fq F = testing::field(2);
    ClassIndex c{{{PolyQ({1, 1, 1}), {1}}, {PolyQ({1, 1}), {1}}}};
    c.normalize();
    const json j = to_json(F, c);
    CHECK(j.dump() == R"([{"partition":[1],"poly":[1,1],"text":"z+1"},{"partition":[1],"poly":[1,1,1],"text":"z^2+z+1"}])");
    CHECK(class_index_from_json(j) == c);
    CHECK(class_index_from_json(json::parse(j.dump())) == c);
}

TEST_CASE("cyclotomic sums round trip") {
    for (int i = 0; i < 50; ++i) {
        CyclotomicSum x(63);
        for (int t = 0; t < 5; ++t) x.add_term(static_cast<u64>(testing::uniform(0, 62)), testing::uniform(-4, 4));
        const json j = to_json(x);
        const CyclotomicSum y = cyclotomic_from_json(json::parse(j.dump()));
        CHECK(y == x);
        CHECK(y.terms() == x.terms());
        CHECK(j.at("modulus") == 63);
        CHECK(j.at("approx").size() == 2);
    }
}

TEST_CASE("count results round trip") {
    CountResult r;
    r.n = 3;
    r.k = 2;
    r.mu = {2, 1};
    r.q = Int("123456789012345678901234567890");
    r.value = Int("98765432109876543210987654321098765432");
    r.method = Method::closed_re_main;
    r.box = true;
    const json j = to_json(r);
    CHECK(j.at("value").is_string());
    CHECK(j.at("q").is_string());
    const CountResult s = count_from_json(json::parse(j.dump()));
    CHECK(s.n == r.n);
    CHECK(s.k == r.k);
    CHECK(s.mu == r.mu);
    CHECK(s.q == r.q);
    CHECK(s.value == r.value);
    CHECK(s.method == r.method);
    CHECK(s.box == r.box);
    CHECK_THROWS_AS(count_from_json(json::parse(R"({"n":1,"k":1,"mu":[1],"q":"2","value":"0","method":"magic","box":false})")), Error);
}

TEST_CASE("fit reports round trip") {
    const FitResult fit = quasipoly_fit(2, 2, 1);
    const FitResult back = fit_from_json(json::parse(to_json(fit).dump()));
    CHECK(back.coefficients == fit.coefficients);
    CHECK(back.verdict == fit.verdict);
    CHECK(back.samples == fit.samples);
    CHECK_FALSE(back.witness.has_value());
    FitResult bad = fit;
    bad.verdict = Verdict::NonPolynomial;
    bad.witness = Int(97);
    const json j = to_json(bad);
    CHECK(j.at("verdict") == "NonPolynomial");
    CHECK(j.at("witness") == "97");
    CHECK(fit_from_json(j).witness == Int(97));
    CHECK(j.at("coefficients").at(0).is_string());
}

TEST_CASE("character table exports") {
    const FieldCtx ctx(2, 2);
    GreenEngine engine(ctx);
    const CharacterTable t = character_table(engine, 2);
    const json j = to_json(ctx.base(), t);
    CHECK(j.at("classes").size() == 3);
    CHECK(j.at("characters").size() == 3);
    for (const auto& row : j.at("characters"))
        for (std::size_t c = 0; c < 3; ++c) CHECK(row.at("values").at(c).contains("terms"));
    const std::string csv = to_csv(ctx.base(), t);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.rfind("class,", 0) == 0);
    CHECK(to_pretty(ctx.base(), t).find("size") != std::string::npos);
}
