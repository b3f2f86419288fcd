#include "config.hpp"

#include "expr.hpp"

#include <fstream>
#include <sstream>

namespace qc::cli {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int to_int(const std::string& key, const std::string& v, int line) {
    try {
        std::size_t used = 0;
        int x = std::stoi(v, &used);
        if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    throw ConfigError("line " + std::to_string(line) + ": " + key + " must be an integer");
}

}  // namespace

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

Config parse_config(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string l = trim(raw);
        if (l.empty() || l[0] == '#') continue;
        auto eq = l.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line) + ": expected key=value");
        std::string key = trim(l.substr(0, eq)), val = trim(l.substr(eq + 1));
        if (key == "pair") cfg.pair = val;
        else if (key == "n" || key == "rank") cfg.n = to_int(key, val, line);
        else if (key == "r") cfg.r = to_int(key, val, line);
        else if (key == "N") cfg.N = to_int(key, val, line);
        else if (key == "c") cfg.c = split_list(val);
        else if (key == "s") cfg.s = split_list(val);
        else throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
    if (cfg.N != 1) throw ConfigError("only N = 1 is supported (all implemented root data have integral K exponents)");
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

CoidealParams session_params(const Uq& uq, const Involution& inv, const Config& cfg) {
    bool aiii_split = inv.label == "AIII" && inv.pi_theta.empty();
    CoidealParams p = aiii_split ? default_params(inv) : integral_params(uq, inv);
    auto fill = [&](const std::vector<std::string>& src, std::vector<QRat>& dst, const char* name) {
        if (src.empty()) return;
        if (static_cast<int>(src.size()) != uq.rank())
            throw ConfigError(std::string(name) + " needs " + std::to_string(uq.rank()) + " entries");
        for (std::size_t i = 0; i < src.size(); ++i) dst[i] = evaluate_scalar(*parse_expr(src[i]));
    };
    fill(cfg.c, p.c, "c");
    fill(cfg.s, p.s, "s");
    validate_params(p);
    return p;
}

}  // namespace qc::cli
