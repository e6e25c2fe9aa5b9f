#include "herbrand/module_io.hpp"

#include <sstream>

#include "herbrand/error.hpp"
#include "json.hpp"

namespace herbrand {

namespace {

Int json_to_int(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Int(static_cast<unsigned long>(v.get<std::uint64_t>()));
        return Int(static_cast<long>(v.get<std::int64_t>()));
    }
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw Error(ErrorCode::ParseError,
                        where + ": '" + v.get<std::string>() + "' is not a decimal integer");
        }
    }
    throw Error(ErrorCode::ParseError, where + ": expected an integer or a decimal string");
}

std::vector<IntVec> json_to_rows(const nlohmann::json& v, std::size_t expected_cols,
                                 const std::string& name) {
    if (!v.is_array())
        throw Error(ErrorCode::ParseError, name + " must be an array of rows");
    std::vector<IntVec> rows;
    rows.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& row = v[i];
        if (!row.is_array() || row.size() != expected_cols)
            throw Error(ErrorCode::ParseError,
                        name + " row " + std::to_string(i) + " must have length " +
                            std::to_string(expected_cols));
        IntVec out(expected_cols);
        for (std::size_t j = 0; j < expected_cols; ++j)
            out[j] = json_to_int(row[j], name + "[" + std::to_string(i) + "][" +
                                             std::to_string(j) + "]");
        rows.push_back(std::move(out));
    }
    return rows;
}

}  // namespace

ModuleFile parse_module_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "module file must be a JSON object");
    for (const char* field : {"n", "generators", "relations", "sigma"})
        if (!j.contains(field))
            throw Error(ErrorCode::ParseError, std::string("missing field '") + field + "'");

    ModuleFile f;
    Int n = json_to_int(j["n"], "n");
    if (n < 1 || n > 1000000)
        throw Error(ErrorCode::ParseError, "n must lie in [1, 10^6]");
    f.n = n.get_ui();
    Int k = json_to_int(j["generators"], "generators");
    if (k < 0 || k > 10000)
        throw Error(ErrorCode::ParseError, "generators must lie in [0, 10^4]");
    f.generators = static_cast<std::size_t>(k.get_ui());
    f.relations = json_to_rows(j["relations"], f.generators, "relations");
    f.sigma = json_to_rows(j["sigma"], f.generators, "sigma");
    if (f.sigma.size() != f.generators)
        throw Error(ErrorCode::ParseError, "sigma must have exactly " +
                                               std::to_string(f.generators) + " rows");
    return f;
}

CyclicModule to_module(const ModuleFile& f) {
    PresentedGroup base = PresentedGroup::from_relation_rows(f.generators, f.relations);
    CyclicModule m(f.n, std::move(base), IntMatrix::from_rows(f.generators, f.sigma));
    ValidationReport rep = check_module(m);
    if (!rep.valid)
        throw Error(ErrorCode::ValidationError, rep.message);
    return m;
}

CyclicModule parse_module_file(const std::string& text) {
    return to_module(parse_module_text(text));
}

std::string module_to_json(const CyclicModule& m) {
    nlohmann::ordered_json j;
    j["n"] = m.n;
    j["generators"] = m.num_generators();
    auto rows_to_json = [](const IntMatrix& rows) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t j2 = 0; j2 < rows.cols(); ++j2)
                row.push_back(rows.at(i, j2).get_str());
            arr.push_back(std::move(row));
        }
        return arr;
    };
    j["relations"] = rows_to_json(m.relations().basis());
    j["sigma"] = rows_to_json(m.sigma);
    return j.dump();
}

GSet parse_gset_text(const std::string& text) {
    // Strip comments, then tokenize.
    std::string cleaned;
    cleaned.reserve(text.size());
    bool in_comment = false;
    for (char c : text) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        cleaned.push_back(in_comment ? ' ' : c);
    }
    std::istringstream is(cleaned);
    long n = 0, r = 0;
    if (!(is >> n) || n < 1)
        throw Error(ErrorCode::ParseError, "expected group order n >= 1");
    if (!(is >> r) || r < 0)
        throw Error(ErrorCode::ParseError, "expected point count r >= 0");
    std::vector<std::size_t> pi(static_cast<std::size_t>(r));
    for (long i = 0; i < r; ++i) {
        long v;
        if (!(is >> v) || v < 0 || v >= r)
            throw Error(ErrorCode::ParseError,
                        "image entry " + std::to_string(i) + " missing or out of range");
        pi[static_cast<std::size_t>(i)] = static_cast<std::size_t>(v);
    }
    std::string extra;
    if (is >> extra)
        throw Error(ErrorCode::ParseError, "trailing token '" + extra + "'");
    GSet x(static_cast<unsigned long>(n), std::move(pi));
    validate_gset(x);
    return x;
}

std::string gset_to_text(const GSet& x) {
    std::ostringstream os;
    os << x.n << " " << x.points;
    for (auto v : x.pi) os << " " << v;
    return os.str();
}

}  // namespace herbrand
