#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "monorm/matrix_io.hpp"
#include "test_util.hpp"

using namespace monorm;

TEST_CASE("CSV parsing") {
    std::istringstream in("1,2.5,0\n0,1e-3,4\n");
    const NonNegMatrix A = load_matrix_csv(in);
    CHECK(A.rows() == 2);
    CHECK(A.cols() == 3);
    CHECK(A(0, 1) == 2.5);
    CHECK(A(1, 1) == 1e-3);
}

TEST_CASE("CSV rejects malformed input") {
    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(load_matrix_csv(ragged), ParseError);
    std::istringstream junk("1,x\n");
    CHECK_THROWS_AS(load_matrix_csv(junk), ParseError);
    std::istringstream neg("1,-2\n");
    CHECK_THROWS_AS(load_matrix_csv(neg), ParseError);
    std::istringstream empty("");
    CHECK_THROWS_AS(load_matrix_csv(empty), ParseError);
}

TEST_CASE("JSON parsing") {
    std::istringstream in(
        R"({"rows":2,"cols":2,"entries":[[1,0],[0.5,0]],"col_support":1})");
    const NonNegMatrix A = load_matrix_json(in);
    CHECK(A.rows() == 2);
    CHECK(A(1, 0) == 0.5);
    CHECK(A.col_support() == 1);
}

TEST_CASE("JSON rejects malformed input") {
    std::istringstream notjson("nope");
    CHECK_THROWS_AS(load_matrix_json(notjson), ParseError);
    std::istringstream missing(R"({"rows":2,"cols":2})");
    CHECK_THROWS_AS(load_matrix_json(missing), ParseError);
    std::istringstream wrongcount(R"({"rows":2,"cols":2,"entries":[[1,0]]})");
    CHECK_THROWS_AS(load_matrix_json(wrongcount), ParseError);
    std::istringstream badsupport(
        R"({"rows":1,"cols":2,"entries":[[1,1]],"col_support":1})");
    CHECK_THROWS_AS(load_matrix_json(badsupport), ParseError);
}

TEST_CASE("round trips preserve entries exactly") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        const NonNegMatrix A = testutil::random_matrix(rng, 3, 4);

        std::stringstream csv;
        save_matrix_csv(A, csv);
        const NonNegMatrix B = load_matrix_csv(csv);
        CHECK(A.entries() == B.entries());

        std::stringstream json;
        save_matrix_json(A, json);
        const NonNegMatrix C = load_matrix_json(json);
        CHECK(A.entries() == C.entries());
    }
}

TEST_CASE("load_matrix dispatches on extension and content") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "monorm_io_test";
    fs::create_directories(dir);

    const NonNegMatrix A(2, 2, {1, 0, 0.5, 0.25});
    {
        std::ofstream out(dir / "a.json");
        save_matrix_json(A, out);
    }
    {
        std::ofstream out(dir / "a.csv");
        save_matrix_csv(A, out);
    }
    {
        std::ofstream out(dir / "mystery");
        save_matrix_json(A, out);
    }
    CHECK(load_matrix(dir / "a.json").entries() == A.entries());
    CHECK(load_matrix(dir / "a.csv").entries() == A.entries());
    CHECK(load_matrix(dir / "mystery").entries() == A.entries());
    CHECK_THROWS_AS(load_matrix(dir / "missing.csv"), ParseError);
    fs::remove_all(dir);
}
