#include <doctest.h>

#include <fstream>
#include <sstream>

#include "nilfactor/cli.hpp"
#include "nilfactor/io.hpp"

using namespace nilfactor;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("matrix file parse and print round-trip") {
    std::istringstream in("QQ\n3\n0 0 0\n1 0 0\n0 1 0\n");
    const Matrix m = read_matrix(in);
    CHECK(m == Matrix::jordan_block(Field::rationals(), 3));
    std::ostringstream out;
    write_matrix(out, m);
    CHECK(out.str() == "QQ\n3\n0 0 0\n1 0 0\n0 1 0\n");

    std::istringstream in2("GF(5)\n2\n7 -1\n1/2 0\n");
    const Matrix m2 = read_matrix(in2);
    CHECK(m2.at(0, 0).res() == 2);
    CHECK(m2.at(0, 1).res() == 4);
    CHECK(m2.at(1, 0).res() == 3);  // 1/2 = 1 * inv(2) = 3 mod 5

    std::istringstream bad("QQ\n2\n1 2 3\n");
    CHECK_THROWS_AS(read_matrix(bad), ParseError);
}

TEST_CASE("json matrix round-trip") {
    std::istringstream in("QQ\n2\n1/2 0\n-3 4\n");
    const Matrix m = read_matrix(in);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("factor command exit codes") {
    std::ostringstream out, err;
    const std::string ok =
        write_temp("nf_ok.mat", "QQ\n3\n0 0 0\n0 0 0\n0 1 0\n");
    CHECK(cli::run_factor(ok, false, true, 1, out, err) == 0);
    CHECK(out.str().find("product check: OK") != std::string::npos);

    std::ostringstream out2, err2;
    const std::string inv = write_temp("nf_inv.mat", "QQ\n2\n1 0\n0 1\n");
    CHECK(cli::run_factor(inv, false, true, 1, out2, err2) == 2);
    CHECK(err2.str().find("invertible") != std::string::npos);

    std::ostringstream out3, err3;
    const std::string exc = write_temp("nf_exc.mat", "QQ\n2\n0 0\n1 0\n");
    CHECK(cli::run_factor(exc, false, true, 1, out3, err3) == 3);

    std::ostringstream out4, err4;
    CHECK(cli::run_factor("/nonexistent/path.mat", false, true, 1, out4, err4) == 1);

    std::ostringstream out5, err5;
    const std::string bad = write_temp("nf_bad.mat", "QQ\n2\n1 2\n");
    CHECK(cli::run_factor(bad, false, true, 1, out5, err5) == 1);
}

TEST_CASE("factor command json output verifies") {
    std::ostringstream out, err;
    const std::string ok =
        write_temp("nf_json.mat", "GF(7)\n3\n1 2 0\n0 4 0\n3 3 0\n");
    REQUIRE(cli::run_factor(ok, true, true, 1, out, err) == 0);
    const auto j = nlohmann::json::parse(out.str());
    const Matrix a = matrix_from_json(j.at("input"));
    const Matrix n1 = matrix_from_json(j.at("n1"));
    const Matrix n2 = matrix_from_json(j.at("n2"));
    CHECK(n1 * n2 == a);
    CHECK(j.at("certificate").at("product_ok").get<bool>());
}

TEST_CASE("check suites pass and report per-identity lines") {
    std::ostringstream out, err;
    CHECK(cli::run_check("lemma1", 7, "", 9, false, out, err) == 0);
    CHECK(out.str().find("ok   pair_product_k7_QQ") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(cli::run_check("lemma2", 6, "", 9, false, out2, err2) == 0);

    std::ostringstream out3, err3;
    CHECK(cli::run_check("sourour", 6, "GF(5),QQ", 9, true, out3, err3) == 0);
    const auto j = nlohmann::json::parse(out3.str());
    CHECK(j.at("pass").get<bool>());

    std::ostringstream out4, err4;
    CHECK(cli::run_check("nonsense", 6, "", 9, false, out4, err4) == 1);
}

TEST_CASE("forensics command") {
    std::ostringstream out, err;
    CHECK(cli::run_forensics(std::nullopt, false, out, err) == 0);
    CHECK(out.str().find("wu_counterexample_k7: confirmed") != std::string::npos);
    CHECK(out.str().find("sourour_projection_flaw: confirmed") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(cli::run_forensics(9, true, out2, err2) == 0);
    const auto j = nlohmann::json::parse(out2.str());
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("reports").size() == 3);
}
