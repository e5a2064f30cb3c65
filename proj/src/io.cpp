#include "sytdesc/io.hpp"

#include "sytdesc/error.hpp"

#include <sstream>

namespace sytdesc {

Json to_json(const Partition& shape) {
    Json j = Json::array();
    for (int p : shape.parts())
        j.push_back(p);
    return j;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array())
        fail(ErrorKind::ParseError, "partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            fail(ErrorKind::ParseError, "partition parts must be integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

Json to_json(const Tableau& t) {
    Json j = Json::array();
    for (const auto& row : t.rows())
        j.push_back(row);
    return j;
}

Tableau tableau_from_json(const Json& j) {
    if (!j.is_array())
        fail(ErrorKind::ParseError, "tableau must be an array of rows");
    std::vector<std::vector<int>> rows;
    std::vector<int> lengths;
    for (const auto& row : j) {
        if (!row.is_array())
            fail(ErrorKind::ParseError, "tableau rows must be arrays");
        rows.emplace_back();
        for (const auto& v : row) {
            if (!v.is_number_integer())
                fail(ErrorKind::ParseError, "tableau entries must be integers");
            rows.back().push_back(v.get<int>());
        }
        lengths.push_back(static_cast<int>(rows.back().size()));
    }
    Partition shape = [&] {
        try {
            return Partition(lengths);
        } catch (const Error&) {
            fail(ErrorKind::ShapeMismatch, "row lengths do not form a partition");
        }
    }();
    return Tableau::validate(shape, std::move(rows));
}

std::string to_text(const Tableau& t) {
    std::string out;
    for (const auto& row : t.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                out += ' ';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

Tableau tableau_from_text(std::string_view text) {
    Json rows = Json::array();
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream fields(line);
        Json row = Json::array();
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size())
                fail(ErrorKind::ParseError, "bad tableau entry '" + token + "'");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    return tableau_from_json(rows);
}

void put_rational(Json& j, const std::string& key, const Rational& value) {
    j[key] = to_string(value);
    j[key + "_approx"] = approx(value);
}

void put_rational(Json& j, const std::string& key, const std::optional<Rational>& value,
                  std::optional<std::string> missing) {
    if (value) {
        put_rational(j, key, *value);
        return;
    }
    if (missing)
        j[key] = *missing;
    else
        j[key] = nullptr;
    j[key + "_approx"] = nullptr;
}

} // namespace sytdesc
