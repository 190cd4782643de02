#include "support.hpp"

#include "json_io.hpp"

#include "loopcalc/error.hpp"

#include <cstdio>
#include <fstream>

using namespace loopcalc;
using loopcalc::io::json;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    }
    catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Usage;
}

} // namespace

TEST_SUITE("json_io")
{
    TEST_CASE("integers: small as numbers, large as strings")
    {
        CHECK(io::big(BigInt(42)) == json(42));
        CHECK(io::big(BigInt(-7)) == json(-7));
        const BigInt huge = BigInt(1) << 70;
        CHECK(io::big(huge) == json("1180591620717411303424"));
        CHECK(io::big_from(json("1180591620717411303424"), "x") == huge);
        CHECK(io::big_from(json(-3), "x") == -3);
        CHECK(kind_of([] { (void)io::big_from(json("12a"), "x"); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)io::big_from(json(1.5), "x"); }) == ErrorKind::Parse);
    }

    TEST_CASE("factor list shape")
    {
        FactorList f;
        f.cap = 30;
        f.circles = 1;
        f.spheres = {{3, 1}};
        f.loop_spheres = {{5, 2}, {7, 1}};
        const json expected = json::parse(
            R"({"circles":1,"spheres":{"3":1},"loop_spheres":{"5":2,"7":1},"cap":30,"truncated":false})");
        CHECK(io::to_json(f) == expected);
        CHECK(io::render_factors(f) == "S^1 × S^3 × (ΩS^5)^2 × ΩS^7");
        CHECK(io::render_factors(FactorList{}) == "*");
    }

    TEST_CASE("rank table and series shape")
    {
        RankTable t;
        t.subject = RankSubject::BaseSpace;
        t.cap = 20;
        t.ranks = {{2, 1}, {5, 1}};
        CHECK(io::to_json(t) == json::parse(R"({"subject":"base","cap":20,"ranks":{"2":1,"5":1},"truncated":false})"));
        CHECK(io::to_json(series_of(3, {1, 2, 3, 4})) == json::parse("[1,2,3,4]"));
    }

    TEST_CASE("every spec type round-trips")
    {
        const std::vector<const char*> texts{
            R"({"type":"four_manifold","k":2})",
            R"({"type":"four_manifold","k":2,"intersection_form":[[0,1],[1,0]]})",
            R"({"type":"wall","n":5,"k":3})",
            R"({"type":"pd_complex","m":2,"n":6,"J":{"2":1,"3":2,"4":1}})",
            R"({"type":"connected_sum","m":3,"n":7,"punctured_skeleton":{"3":1,"4":1}})",
            R"({"type":"bundle","base":{"type":"four_manifold","k":3},"group_spheres":[3,5]})",
            R"({"type":"config_space","base":{"type":"connected_sum","m":3,"n":7,"punctured_skeleton":{}},"points":2})",
        };
        for (const char* text : texts) {
            CAPTURE(text);
            const json j = json::parse(text);
            const ManifoldSpec spec = io::spec_from_json(j);
            CHECK(io::to_json(spec) == j);
        }
    }

    TEST_CASE("malformed specs")
    {
        auto parse = [](const char* text) { return kind_of([&] { (void)io::spec_from_json(json::parse(text)); }); };
        CHECK(parse(R"({"type":"wall","n":5})") == ErrorKind::Parse);
        CHECK(parse(R"({"type":"wall","n":5,"k":3,"extra":1})") == ErrorKind::Parse);
        CHECK(parse(R"({"type":"torus"})") == ErrorKind::Parse);
        CHECK(parse(R"({"k":2})") == ErrorKind::Parse);
        CHECK(parse(R"({"type":"four_manifold","k":"two"})") == ErrorKind::Parse);
        CHECK(parse(R"({"type":"pd_complex","m":2,"n":6,"J":{"x":1}})") == ErrorKind::Parse);
        CHECK(parse(R"({"type":"pd_complex","m":3,"n":5,"J":{}})") == ErrorKind::Validation);
        CHECK(parse(R"({"type":"four_manifold","k":2,"intersection_form":[[2,1],[1,2]]})") == ErrorKind::Validation);
        CHECK(parse(R"({"type":"wall","n":4,"k":3})") == ErrorKind::ExcludedCase);
        CHECK(parse(R"({"type":"bundle","base":{"type":"wall","n":5,"k":3},"group_spheres":[3]})") ==
              ErrorKind::Validation);
        CHECK(kind_of([] { (void)io::read_input("{not json"); }) == ErrorKind::Parse);
        CHECK(kind_of([] { (void)io::read_input("@/nonexistent/spec.json"); }) == ErrorKind::Usage);
    }

    TEST_CASE("input from a file")
    {
        const std::string path = "json_io_test_input.json";
        {
            std::ofstream out(path);
            out << R"({"type":"four_manifold","k":1})";
        }
        const json j = io::read_input("@" + path);
        std::remove(path.c_str());
        CHECK(j == json::parse(R"({"type":"four_manifold","k":1})"));
    }
}
