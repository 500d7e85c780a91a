#include <doctest.h>

#include <filesystem>

#include "mlakit/document.hpp"
#include "mlakit/errors.hpp"
#include "mlakit/fixtures.hpp"
#include "mlakit/library.hpp"
#include "mlakit/validation.hpp"

using namespace mlakit;
using nlohmann::json;

TEST_SUITE("document") {
  TEST_CASE("round trip") {
    const FiniteMLA v4 = fixtures::v4_star_a();
    const json doc = to_json(v4);
    CHECK(load_mla(doc) == v4);
    CHECK(canonical_text(doc) == canonical_text(to_json(load_mla(doc))));
    CHECK(canonical_text(v4).find(' ') == std::string::npos);
    CHECK(digest(v4).size() == 64);
    CHECK(digest(v4) != digest(fixtures::example_a()));
  }

  TEST_CASE("sha256") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS_AS((void)parse_algebra_document(json::array()), ParseError);
    CHECK_THROWS_AS((void)parse_algebra_document(json{{"order", 2}}), ParseError);
    CHECK_THROWS_AS((void)parse_algebra_document(json{{"order", 2}, {"mul", {{0, 1}}}}), ParseError);
    CHECK_THROWS_AS((void)parse_algebra_document(json{{"order", 2}, {"mul", {{0, 1}, {1, 5}}}}), ParseError);
    CHECK_THROWS_AS((void)load_mla(json{{"order", 2}, {"mul", {{0, 1}, {1, 0}}}}), ParseError);
    CHECK_THROWS_AS((void)read_algebra_document("/nonexistent/file.json"), ParseError);
  }

  TEST_CASE("axiom failures surface as typed errors") {
    const json bad_group{{"order", 2}, {"mul", {{0, 1}, {1, 1}}}, {"star", {{0, 0}, {0, 0}}}};
    CHECK_THROWS_AS((void)load_mla(bad_group), GroupAxiomError);
    json v4 = to_json(fixtures::v4_star_a());
    v4["star"][1][1] = 2;
    CHECK_THROWS_AS((void)load_mla(v4), MLAAxiomError);
  }

  TEST_CASE("validation cap") {
    const FiniteMLA big = FiniteMLA::trivial(cyclic_group(70));
    CHECK_THROWS_AS((void)load_mla(to_json(big)), OrderCapExceeded);
    Limits wide;
    wide.validation_cap = 80;
    CHECK(load_mla(to_json(big), wide).order() == 70);
  }

  TEST_CASE("partial star documents") {
    const json doc{{"order", 4},
                   {"mul", to_json(elementary_abelian_group(2))["mul"]},
                   {"generators", {1, 2}},
                   {"partial_star", {{1, 2, 1}}}};
    const AlgebraDocument d = parse_algebra_document(doc);
    CHECK_FALSE(d.star.has_value());
    REQUIRE(d.partial_star.size() == 1);
    CHECK(d.partial_star[0] == StarAssignment{1, 2, 1});
    CHECK(d.generators == std::vector<Elem>{1, 2});
  }

  TEST_CASE("morphism documents") {
    const FiniteMLA v4 = fixtures::v4_star_a();
    const json m = morphism_to_json(identity_morphism(v4), v4, v4);
    CHECK(m["map"] == json({0, 1, 2, 3}));
    CHECK(m["source"] == digest(v4));
  }

  TEST_CASE("shipped data files load") {
    const auto dir = std::filesystem::path(MLAKIT_DATA_DIR);
    CHECK(load_mla_file(dir / "v4_star_a.json") == fixtures::v4_star_a());
    CHECK(load_mla_file(dir / "example_a.json") == fixtures::example_a());
    CHECK(load_mla_file(dir / "q8_improper.json") == fixtures::q8_improper());
    CHECK(load_mla_file(dir / "z4_trivial.json") == fixtures::z4_trivial());
  }
}
