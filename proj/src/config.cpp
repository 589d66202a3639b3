#include "cartelfringe/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cfm {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, z = s.size();
    while (a < z && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (z > a && std::isspace(static_cast<unsigned char>(s[z - 1]))) --z;
    return s.substr(a, z - a);
}

}  // namespace

MarketParams parse_config(std::istream& in) {
    MarketParams p;
    const std::map<std::string, double MarketParams::*> fields = {
        {"alpha", &MarketParams::alpha}, {"beta", &MarketParams::beta},
        {"b", &MarketParams::b},         {"k_c", &MarketParams::k_c},
        {"k_f", &MarketParams::k_f},     {"r", &MarketParams::r},
        {"s0_c", &MarketParams::s0_c},   {"s0_f", &MarketParams::s0_f},
        {"m_f", &MarketParams::m_f},     {"m_c", &MarketParams::m_c},
    };
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected `key = value`, got \"" + stripped + "\"", line_no);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        const auto it = fields.find(key);
        if (it == fields.end())
            throw ConfigError("unknown key \"" + key + "\"", line_no);
        if (!seen.insert(key).second)
            throw ConfigError("duplicate key \"" + key + "\"", line_no);
        size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(value, &consumed);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse value \"" + value + "\" for key " + key, line_no);
        }
        if (consumed != value.size())
            throw ConfigError("trailing characters in value \"" + value + "\"", line_no);
        p.*(it->second) = v;
    }
    return p;
}

MarketParams load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path, 0);
    return parse_config(in);
}

}  // namespace cfm
