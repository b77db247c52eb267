#include <doctest.h>

#include "nilfactor/forensics.hpp"
#include "nilfactor/io.hpp"

using namespace nilfactor;

TEST_CASE("the k = 7 arrangement is not nilpotent") {
    const auto r = check_wu_counterexample(7);
    CHECK(r.verdict == Verdict::Confirmed);
    REQUIRE(r.witnesses.size() == 1);
    CHECK_FALSE(r.witnesses[0].second.is_nilpotent());

    const auto rp = check_wu_counterexample(7, Field::prime(5));
    CHECK(rp.verdict == Verdict::Confirmed);
}

TEST_CASE("other odd k are recorded as computed") {
    // Oracle: independent powering of the arrangement, rebuilt here.
    for (std::size_t k : {1, 5, 9, 11}) {
        const Field f = Field::rationals();
        Matrix m(f, k + 2, k + 2);
        m.set_block(0, k, Matrix::jordan_block(f, 2));
        m.set_block(2, 0, Matrix::jordan_block(f, k));
        const bool nilpotent = m.power(k + 2).is_zero();

        const auto r = check_wu_counterexample(k);
        bool reported = false;
        for (const auto& [key, value] : r.data)
            if (key == "nilpotent") {
                CHECK(value == (nilpotent ? "true" : "false"));
                reported = true;
            }
        CHECK(reported);
        CHECK(r.verdict == (nilpotent ? Verdict::Refuted : Verdict::Confirmed));
    }
    CHECK_THROWS_AS(check_wu_counterexample(4), InvalidK);
}

TEST_CASE("projection flaw is reproduced and repaired") {
    const auto r = check_sourour_projection_flaw();
    CHECK(r.verdict == Verdict::Confirmed);
    auto get = [&](const std::string& key) {
        for (const auto& [k, v] : r.data)
            if (k == key) return v;
        return std::string("?");
    };
    CHECK(get("rank_a") == "2");
    CHECK(get("flawed_rank_pa") == "1");
    CHECK(get("flawed_rank_ap") == "1");
    CHECK(get("flawed_rank_pap") == "0");
    CHECK(get("repaired_rank_pa") == "1");
    CHECK(get("repaired_rank_ap") == "1");
    CHECK(get("repaired_rank_pap") == "1");
}

TEST_CASE("report serialization round-trips") {
    const auto r = check_sourour_projection_flaw();
    const auto j = report_to_json(r);
    const auto back = report_from_json(j);
    CHECK(back.check_name == r.check_name);
    CHECK(back.claim == r.claim);
    CHECK(back.verdict == r.verdict);
    REQUIRE(back.witnesses.size() == r.witnesses.size());
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        CHECK(back.witnesses[i].first == r.witnesses[i].first);
        CHECK(back.witnesses[i].second == r.witnesses[i].second);
    }
}
