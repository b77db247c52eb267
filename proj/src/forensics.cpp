#include "nilfactor/forensics.hpp"

#include "nilfactor/sourour.hpp"

namespace nilfactor {

ForensicReport check_wu_counterexample(std::size_t k, const Field& f) {
    if (k % 2 == 0 || k == 0) throw InvalidK("check is defined for odd k");
    const std::size_t n = k + 2;
    Matrix m(f, n, n);
    m.set_block(0, k, Matrix::jordan_block(f, 2));
    m.set_block(2, 0, Matrix::jordan_block(f, k));
    const bool nilpotent = m.is_nilpotent();

    ForensicReport r;
    r.check_name = "wu_counterexample_k" + std::to_string(k);
    r.claim = "the swapped block arrangement [[0, J_2],[J_" + std::to_string(k) +
              ", 0]] is not nilpotent";
    r.verdict = nilpotent ? Verdict::Refuted : Verdict::Confirmed;
    r.witnesses.emplace_back("arrangement", m);
    r.data.emplace_back("k", std::to_string(k));
    r.data.emplace_back("field", f.str());
    r.data.emplace_back("nilpotent", nilpotent ? "true" : "false");
    return r;
}

ForensicReport check_sourour_projection_flaw() {
    const Field f = Field::rationals();
    const Matrix a = Matrix::jordan_block(f, 3);

    // Defective recipe: x0 = e1 (a valid seed: A e1 = e2, A^2 e1 = e3 != 0),
    // but the complement of span{x1} is chosen to contain x0 itself:
    // range(P) = span{e1, e3}, null(P) = span{e2}.
    const Matrix s = Matrix::from_ints(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    Matrix d(f, 3, 3);
    d.set(1, 1, Scalar::one(f));
    d.set(2, 2, Scalar::one(f));
    const Matrix p_flawed = s * d * s.inverse();

    const std::size_t flawed_pa = (p_flawed * a).rank();
    const std::size_t flawed_ap = (a * p_flawed).rank();
    const std::size_t flawed_pap = (p_flawed * a * p_flawed).rank();
    const bool flaw_reproduced = flawed_pap < flawed_ap && flawed_ap == flawed_pa;

    // Repaired construction on the same matrix.
    const Vector x0 = choose_x0(a);
    const BorderingBasis basis = build_bordering_basis(a, x0);
    const Matrix p_good = bordering_projection(basis);
    const std::size_t good_pa = (p_good * a).rank();
    const std::size_t good_ap = (a * p_good).rank();
    const std::size_t good_pap = (p_good * a * p_good).rank();
    const std::size_t want = a.rank() - 1;
    const bool repaired_ok = good_pa == want && good_ap == want && good_pap == want;

    ForensicReport r;
    r.check_name = "sourour_projection_flaw";
    r.claim =
        "letting the seed vector into range(P) collapses rank(PAP) below "
        "rank(AP) = rank(PA); keeping it out restores all three to rank(A) - 1";
    r.verdict = flaw_reproduced && repaired_ok ? Verdict::Confirmed : Verdict::Refuted;
    r.witnesses.emplace_back("matrix", a);
    r.witnesses.emplace_back("flawed_projection", p_flawed);
    r.witnesses.emplace_back("repaired_projection", p_good);
    r.data.emplace_back("rank_a", std::to_string(a.rank()));
    r.data.emplace_back("flawed_rank_pa", std::to_string(flawed_pa));
    r.data.emplace_back("flawed_rank_ap", std::to_string(flawed_ap));
    r.data.emplace_back("flawed_rank_pap", std::to_string(flawed_pap));
    r.data.emplace_back("repaired_rank_pa", std::to_string(good_pa));
    r.data.emplace_back("repaired_rank_ap", std::to_string(good_ap));
    r.data.emplace_back("repaired_rank_pap", std::to_string(good_pap));
    return r;
}

}  // namespace nilfactor
