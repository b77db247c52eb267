#include "nilfactor/io.hpp"

#include <fstream>
#include <sstream>

namespace nilfactor {

Matrix read_matrix(std::istream& in) {
    std::string field_text;
    if (!(in >> field_text)) throw ParseError("missing field spec line");
    const Field f = Field::parse(field_text);
    long long n = -1;
    if (!(in >> n) || n < 0) throw ParseError("missing or negative matrix order");
    Matrix m(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string tok;
            if (!(in >> tok)) throw ParseError("matrix has fewer than n*n entries");
            m.set(i, j, Scalar::parse(f, tok));
        }
    return m;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.field().str() << '\n' << m.rows() << '\n' << m.str();
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return {{"field", m.field().str()}, {"n", m.rows()}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
    const Field f = Field::parse(j.at("field").get<std::string>());
    const std::size_t n = j.at("n").get<std::size_t>();
    Matrix m(f, n, n);
    const auto& rows = j.at("rows");
    if (rows.size() != n) throw ParseError("row count mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ParseError("column count mismatch");
        for (std::size_t jj = 0; jj < n; ++jj)
            m.set(i, jj, Scalar::parse(f, rows[i][jj].get<std::string>()));
    }
    return m;
}

nlohmann::json certificate_to_json(const Certificate& c) {
    return {{"product_ok", c.product_ok},
            {"nilpotency_index_1", c.nilpotency_index_1},
            {"nilpotency_index_2", c.nilpotency_index_2},
            {"rank_a", c.rank_a},
            {"rank_n1", c.rank_n1},
            {"rank_n2", c.rank_n2},
            {"route", route_name(c.route)}};
}

nlohmann::json factorization_to_json(const Matrix& a, const Factorization& f) {
    return {{"input", matrix_to_json(a)},
            {"n1", matrix_to_json(f.n1)},
            {"n2", matrix_to_json(f.n2)},
            {"certificate", certificate_to_json(f.certificate)}};
}

nlohmann::json report_to_json(const ForensicReport& r) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& [name, m] : r.witnesses)
        witnesses.push_back({{"name", name}, {"matrix", matrix_to_json(m)}});
    nlohmann::json data = nlohmann::json::object();
    for (const auto& [key, value] : r.data) data[key] = value;
    return {{"check_name", r.check_name},
            {"claim", r.claim},
            {"verdict", r.verdict == Verdict::Confirmed ? "confirmed" : "refuted"},
            {"witnesses", std::move(witnesses)},
            {"data", std::move(data)}};
}

ForensicReport report_from_json(const nlohmann::json& j) {
    ForensicReport r;
    r.check_name = j.at("check_name").get<std::string>();
    r.claim = j.at("claim").get<std::string>();
    r.verdict =
        j.at("verdict").get<std::string>() == "confirmed" ? Verdict::Confirmed : Verdict::Refuted;
    for (const auto& w : j.at("witnesses"))
        r.witnesses.emplace_back(w.at("name").get<std::string>(),
                                 matrix_from_json(w.at("matrix")));
    for (const auto& [key, value] : j.at("data").items())
        r.data.emplace_back(key, value.get<std::string>());
    return r;
}

}  // namespace nilfactor
