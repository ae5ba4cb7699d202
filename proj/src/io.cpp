#include "noetherres/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nres {

using nlohmann::json;

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::uint32_t> parse_nat_row(const std::string& line, const std::string& what) {
    std::istringstream is(line);
    std::vector<std::uint32_t> row;
    long long v;
    while (is >> v) {
        if (v < 0) throw ParseError(what + " must be naturals: '" + line + "'");
        row.push_back(static_cast<std::uint32_t>(v));
    }
    if (!is.eof()) throw ParseError("bad " + what + " line: '" + line + "'");
    return row;
}

ParsedInput parse_matrix_json(const std::string& text) {
    json j = json::parse(text);
    MatrixInput m;
    if (j.contains("char")) m.characteristic = j["char"].get<std::uint32_t>();
    for (const auto& row : j.at("matrix"))
        m.matrix.push_back(row.get<std::vector<std::uint32_t>>());
    ParsedInput out;
    out.matrix = std::move(m);
    return out;
}

} // namespace

ParsedInput parse_input_text(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw ParseError("empty input");
    if (t[0] == '{') {
        try {
            return parse_matrix_json(t);
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad JSON input: ") + e.what());
        }
    }

    std::istringstream is(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(is, line)) {
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        lines.push_back(s);
    }
    if (lines.empty()) throw ParseError("empty input");

    if (lines[0].rfind("n:", 0) == 0) {
        GeneratorInput g;
        std::size_t at = 0;
        auto header = [&](const char* key) -> std::string {
            if (at >= lines.size() || lines[at].rfind(key, 0) != 0)
                throw ParseError(std::string("expected '") + key + "' header line");
            return strip(lines[at++].substr(2));
        };
        g.n = std::stoul(header("n:"));
        std::vector<std::uint32_t> w = parse_nat_row(header("w:"), "weights");
        if (w.size() != g.n) throw ParseError("weight count does not match n");
        g.weights = WeightVector(w);
        g.d = std::stoul(header("d:"));
        for (; at < lines.size(); ++at) g.polynomials.push_back(lines[at]);
        if (g.polynomials.empty()) throw ParseError("no generators given");
        ParsedInput out;
        out.generators = std::move(g);
        return out;
    }

    // plain matrix: `d n` then d rows of n naturals
    std::vector<std::uint32_t> head = parse_nat_row(lines[0], "header");
    if (head.size() != 2) throw ParseError("matrix header must be 'd n'");
    std::size_t d = head[0], n = head[1];
    if (lines.size() != d + 1) throw ParseError("expected " + std::to_string(d) + " matrix rows");
    MatrixInput m;
    for (std::size_t r = 0; r < d; ++r) {
        auto row = parse_nat_row(lines[r + 1], "matrix row");
        if (row.size() != n) throw ParseError("matrix row has wrong length");
        m.matrix.push_back(std::move(row));
    }
    ParsedInput out;
    out.matrix = std::move(m);
    return out;
}

ParsedInput parse_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_input_text(ss.str());
}

std::vector<Polynomial> parse_generators(const GeneratorInput& g, const FieldSpec& F,
                                         const MonomialOrder& ord) {
    VarNames names = VarNames::xs(g.n);
    std::vector<Polynomial> out;
    out.reserve(g.polynomials.size());
    for (const auto& s : g.polynomials) out.push_back(parse_polynomial(s, names, F, ord));
    return out;
}

std::string resolution_to_json(const GradedFreeResolution& res) {
    VarNames names = VarNames::xs(res.nvars);
    json j;
    j["minimal"] = res.minimal;
    j["nvars"] = res.nvars;
    j["dim"] = res.dim;
    j["characteristic"] = res.field.characteristic();
    j["weights"] = res.weights.values();
    j["steps"] = json::array();
    for (const auto& s : res.steps) {
        json st;
        st["shifts"] = s.shifts;
        json labels = json::array();
        for (const auto& m : s.labels) labels.push_back(monomial_str(m, names));
        st["labels"] = std::move(labels);
        if (!s.multidegrees.empty()) st["multidegrees"] = s.multidegrees;
        j["steps"].push_back(std::move(st));
    }
    j["differentials"] = json::array();
    for (const auto& m : res.diffs) {
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c)
                row.push_back(polynomial_str(m.at(r, c), names));
            rows.push_back(std::move(row));
        }
        j["differentials"].push_back(std::move(rows));
    }
    return j.dump(2);
}

GradedFreeResolution resolution_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad resolution JSON: ") + e.what());
    }
    GradedFreeResolution res;
    res.minimal = j.at("minimal").get<bool>();
    res.nvars = j.at("nvars").get<std::size_t>();
    res.dim = j.at("dim").get<std::size_t>();
    res.field = FieldSpec(j.at("characteristic").get<std::uint32_t>());
    res.weights = WeightVector(j.at("weights").get<std::vector<std::uint32_t>>());
    VarNames names = VarNames::xs(res.nvars);
    MonomialOrder ord = MonomialOrder::weighted_degrevlex(res.weights);
    for (const auto& st : j.at("steps")) {
        ResolutionStep step;
        step.shifts = st.at("shifts").get<std::vector<std::uint64_t>>();
        for (const auto& ls : st.at("labels")) {
            Polynomial p = parse_polynomial(ls.get<std::string>(), names, res.field, ord);
            step.labels.push_back(p.leading_monomial());
        }
        if (st.contains("multidegrees"))
            step.multidegrees = st.at("multidegrees").get<std::vector<std::vector<std::uint64_t>>>();
        res.steps.push_back(std::move(step));
    }
    for (const auto& dm : j.at("differentials")) {
        std::size_t rows = dm.size();
        std::size_t cols = rows ? dm[0].size() : 0;
        PolyMatrix m(rows, cols, res.nvars, res.field);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                std::string s = dm[r][c].get<std::string>();
                if (s != "0") m.at(r, c) = parse_polynomial(s, names, res.field, ord);
            }
        res.diffs.push_back(std::move(m));
    }
    return res;
}

std::string betti_to_json(const BettiTable& t) {
    // shift multisets per homological step, reconstructed from the table
    json steps = json::array();
    for (std::size_t i = 0; i < t.columns; ++i) {
        std::vector<std::uint64_t> shifts;
        for (const auto& [key, cnt] : t.entries) {
            if (key.second != i) continue;
            for (std::uint64_t k = 0; k < cnt; ++k)
                shifts.push_back(static_cast<std::uint64_t>(key.first + static_cast<std::int64_t>(i)) *
                                 t.scale);
        }
        steps.push_back(json{{"shifts", shifts}});
    }
    json j;
    j["steps"] = std::move(steps);
    j["minimal"] = t.minimal;
    j["scale"] = t.scale;
    return j.dump(2);
}

std::string exceptional_sets_to_json(const ExceptionalSets& E) {
    auto arr = [](const std::vector<Degree3>& v) {
        json a = json::array();
        for (const auto& s : v) a.push_back(std::vector<std::uint64_t>{s[0], s[1], s[2]});
        return a;
    };
    json j;
    j["AP"] = arr(E.AP);
    j["E31"] = arr(E.E31);
    j["E20"] = arr(E.E20);
    j["E30"] = arr(E.E30);
    j["E33"] = arr(E.E33);
    return j.dump(2);
}

} // namespace nres
