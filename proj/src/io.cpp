#include "catermin/io.hpp"

#include <fstream>
#include <sstream>

namespace catermin {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& tok : split(text, ',')) {
        if (tok.empty()) throw ParseError("empty entry in list '" + text + "'");
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw ParseError("bad integer '" + tok + "'");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + tok + "'");
        }
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_rational(tok));
    return out;
}

Tree parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::pair<int, int>> edges;
    int maxv = 0;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v)) throw ParseError("edge line needs two vertices: '" + line + "'");
        edges.emplace_back(u, v);
        maxv = std::max({maxv, u, v});
    }
    if (edges.empty()) return Tree(1, {});
    return Tree(maxv + 1, std::move(edges));
}

Tree read_edge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string format_int_list(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

nlohmann::json poly_to_json(const MatchingPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
    return arr;
}

nlohmann::json energy_to_json(const EnergyValue& e) {
    return {{"value", e.value},
            {"method", to_string(e.method)},
            {"error_bound", e.error_bound}};
}

} // namespace catermin
