#pragma once

#include "qcartan/coideal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qc::cli {

// Flat key=value session file. Blank lines and lines starting with '#' are
// ignored. Keys: pair, n (alias rank), r, c, s, N. c and s are comma
// separated scalar expressions, one per simple root.
struct Config {
    std::string pair;
    int n = 0;
    int r = 0;
    std::vector<std::string> c, s;
    int N = 1;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Config parse_config(const std::string& text);
Config load_config(const std::string& path);

// Splits on top-level commas (commas inside brackets are kept).
std::vector<std::string> split_list(const std::string& s);

// Coideal parameters for the session: c and s from the config when given,
// otherwise default_params for AIII with pi_theta empty and integral_params
// elsewhere. Validated before returning.
CoidealParams session_params(const Uq& uq, const Involution& inv, const Config& cfg);

}  // namespace qc::cli
