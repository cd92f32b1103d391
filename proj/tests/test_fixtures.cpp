#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support.hpp"

using namespace eulercc;
using namespace eulercc::testing;

TEST_CASE("builtin fixtures are valid and uniquely named", "[fixtures]")
{
    std::set<std::string> names;
    for (const auto& fx : builtin_fixtures()) {
        INFO(fx.name);
        CHECK(names.insert(fx.name).second);
        CHECK(validate(*fx.complex).empty());
        for (const auto& key : {"one", "cell", "dual_one", "random"})
            CHECK_NOTHROW(fx.function(key));
        CHECK_FALSE(fx.morse_inputs.empty());
        CHECK_FALSE(fx.theorem_cases.empty());
    }
    CHECK(names.size() == 9);
    CHECK_THROWS_AS(builtin_fixture("nope"), InputError);
    CHECK_THROWS_AS(builtin_fixture("circle").function("nope"), InputError);
}

TEST_CASE("expected values match the Euler integral and the homology oracle", "[fixtures][oracle]")
{
    for (const auto& fx : builtin_fixtures())
        for (const auto& e : fx.expected) {
            INFO(fx.name << ": " << e.operation << " of " << e.function);
            REQUIRE(e.operation == "euler_integral");
            CHECK(euler_integral(fx.function(e.function)) == e.value);
            if (e.function == "one")
                CHECK(betti_chi(*fx.complex, fx.complex->all()) == e.value);
        }
}

TEST_CASE("theorem cases refer to existing inputs", "[fixtures]")
{
    for (const auto& fx : builtin_fixtures())
        for (const auto& tc : fx.theorem_cases) {
            CHECK_NOTHROW(fx.function(tc.function));
            CHECK_NOTHROW(fx.morse_input(tc.morse_input));
        }
}

TEST_CASE("random fixtures are deterministic, valid and within budget", "[fixtures][random]")
{
    for (std::uint64_t seed = 0; seed < 12; ++seed)
        for (std::size_t d = 1; d <= 3; ++d) {
            const auto a = random_fixture(seed, d, 40);
            const auto b = random_fixture(seed, d, 40);
            INFO(a.name);
            CHECK(a.complex->size() <= 40);
            CHECK(a.complex->ambient_dim() == d);
            CHECK(validate(*a.complex).empty());
            CHECK(complex_to_json(*a.complex).dump() == complex_to_json(*b.complex).dump());
            CHECK(a.function("random").values() == b.function("random").values());
            for (auto x : a.function("random").values())
                CHECK((x >= -3 && x <= 3));
        }
    CHECK(random_fixture(3, 2, 1).complex->size() == 1);
    CHECK_THROWS_AS(random_fixture(0, 4, 10), InputError);
    CHECK_THROWS_AS(random_fixture(0, 2, 0), InputError);
}

TEST_CASE("fixtures survive a JSON round trip", "[fixtures][json]")
{
    for (const auto& fx : corpus(3)) {
        INFO(fx.name);
        const auto kj = complex_to_json(*fx.complex);
        const auto k = shared(complex_from_json(parse_json_text(kj.dump(), "complex")));
        CHECK(complex_to_json(*k).dump() == kj.dump());
        for (const auto& [name, a] : fx.functions) {
            const auto back = function_from_json(parse_json_text(function_to_json(a).dump(), name), k);
            CHECK(back.values() == a.values());
            CHECK(euler_integral(back) == euler_integral(a));
        }
        for (const auto& [name, f] : fx.morse_inputs) {
            const auto back = affine_from_json(affine_to_json(f));
            CHECK(back.linear == f.linear);
            CHECK(back.constant == f.constant);
        }
        const auto dump = fixture_to_json(fx).dump();
        CHECK(dump == fixture_to_json(fx).dump());
    }
}

TEST_CASE("sample data matches the builtin fixtures", "[fixtures][data]")
{
    for (const auto& fx : builtin_fixtures()) {
        const std::string dir = std::string(EULERCC_DATA_DIR) + "/" + fx.name;
        INFO(dir);
        const auto k = shared(complex_from_json(read_json_file(dir + "/complex.json")));
        CHECK(complex_to_json(*k).dump() == complex_to_json(*fx.complex).dump());
        for (const auto& [name, a] : fx.functions)
            CHECK(function_from_json(read_json_file(dir + "/" + name + ".json"), k).values() == a.values());
    }
}
