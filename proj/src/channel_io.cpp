#include "qchan/channel_io.hpp"

#include <string>

#include "json.hpp"

namespace qchan {

namespace {

using json = nlohmann::ordered_json;

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& rows, int expect_rows, int expect_cols,
                        const std::string& where) {
    if (!rows.is_array()) throw ParseError(where + ": expected a list of rows");
    if (expect_rows >= 0 && static_cast<int>(rows.size()) != expect_rows)
        throw ParseError(where + ": expected " + std::to_string(expect_rows) + " rows, got " +
                         std::to_string(rows.size()));
    if (rows.empty()) throw ParseError(where + ": empty matrix");
    int ncols = expect_cols >= 0 ? expect_cols : static_cast<int>(rows[0].size());
    Matrix m(static_cast<Eigen::Index>(rows.size()), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const json& row = rows[r];
        if (!row.is_array() || static_cast<int>(row.size()) != ncols)
            throw ParseError(where + ": row " + std::to_string(r) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(ncols));
        for (int c = 0; c < ncols; ++c) {
            const json& e = row[c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ParseError(where + ": entry (" + std::to_string(r) + "," +
                                 std::to_string(c) + ") is not a [re, im] pair");
            m(static_cast<Eigen::Index>(r), c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

int get_positive_int(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        throw ParseError(std::string("missing or non-integer field '") + key + "'");
    int v = doc[key].get<int>();
    if (v <= 0) throw ParseError(std::string("field '") + key + "' must be positive");
    return v;
}

}  // namespace

std::string serialize_channel(const KrausChannel& ch) {
    json doc;
    doc["name"] = ch.name();
    doc["dim_in"] = ch.dim_in();
    doc["dim_out"] = ch.dim_out();
    json kraus = json::array();
    for (const Matrix& k : ch.kraus()) kraus.push_back(matrix_to_json(k));
    doc["kraus"] = std::move(kraus);
    return doc.dump(2) + "\n";
}

ParsedChannel parse_channel(const std::string& text, double cptp_tol, bool force) {
    json doc = parse_document(text);
    std::string name = doc.contains("name") && doc["name"].is_string()
                           ? doc["name"].get<std::string>()
                           : "";
    int dim_in = get_positive_int(doc, "dim_in");
    int dim_out = get_positive_int(doc, "dim_out");
    if (!doc.contains("kraus") || !doc["kraus"].is_array() || doc["kraus"].empty())
        throw ParseError("missing or empty 'kraus' list");
    std::vector<Matrix> kraus;
    kraus.reserve(doc["kraus"].size());
    for (std::size_t i = 0; i < doc["kraus"].size(); ++i)
        kraus.push_back(matrix_from_json(doc["kraus"][i], dim_out, dim_in,
                                         "kraus[" + std::to_string(i) + "]"));
    KrausChannel ch(std::move(kraus), std::move(name));
    CptpVerdict v = validate_cptp(ch, cptp_tol);
    if (!v.valid && !force)
        throw ValidationError("channel '" + ch.name() + "' violates trace preservation: defect " +
                              std::to_string(v.defect) + " > tolerance " +
                              std::to_string(cptp_tol));
    return ParsedChannel{std::move(ch), v.defect, !v.valid};
}

std::string serialize_state(const DensityOperator& rho, const std::string& name) {
    json doc;
    if (!name.empty()) doc["name"] = name;
    doc["dim"] = rho.dim();
    doc["matrix"] = matrix_to_json(rho.matrix());
    return doc.dump(2) + "\n";
}

DensityOperator parse_state(const std::string& text) {
    json doc = parse_document(text);
    int dim = get_positive_int(doc, "dim");
    if (!doc.contains("matrix")) throw ParseError("missing 'matrix' field");
    Matrix m = matrix_from_json(doc["matrix"], dim, dim, "matrix");
    return DensityOperator::from_matrix(std::move(m));
}

}  // namespace qchan
