#include "pmc/spec_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "pmc/error.hpp"

namespace pmc {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        long x = std::stol(v, &pos);
        if (pos != v.size() || x < 0 || x > 1000000) throw ParseError("");
        return static_cast<int>(x);
    } catch (const std::exception&) {
        throw ParseError("module spec: bad value '" + v + "' for " + key);
    }
}

int max_exponent(const std::string& g, char var) {
    int best = 0;
    const std::regex re(std::string(1, var) + R"((\s*\^\s*(\d+))?)");
    for (auto it = std::sregex_iterator(g.begin(), g.end(), re); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        best = std::max(best, m[2].matched ? std::stoi(m[2].str()) : 1);
    }
    return best;
}

}  // namespace

ModuleSpec parse_module_spec(const std::string& text, std::optional<int> default_N) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    std::map<std::string, int> fields;
    ModuleSpec spec;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            std::istringstream hs(line);
            std::string word;
            hs >> word;
            if (word != "ring") throw ParseError("module spec: first line must be a 'ring' header");
            while (hs >> word) {
                auto eq = word.find('=');
                if (eq == std::string::npos) throw ParseError("module spec: malformed header field '" + word + "'");
                std::string key = word.substr(0, eq);
                if (key != "n" && key != "N" && key != "p" && key != "rank")
                    throw ParseError("module spec: unknown header field '" + key + "'");
                if (fields.count(key)) throw ParseError("module spec: duplicate header field '" + key + "'");
                fields[key] = parse_int(key, word.substr(eq + 1));
            }
            have_header = true;
            continue;
        }
        spec.generators.push_back(line);
    }
    if (!have_header) throw ParseError("module spec: missing 'ring' header");
    if (!fields.count("n") || !fields.count("p")) throw ParseError("module spec: header needs n= and p=");
    spec.rank = fields.count("rank") ? fields["rank"] : 1;
    if (spec.rank != 1) throw ParseError("module spec: only rank=1 (ideals) is supported");
    if (spec.generators.empty()) throw ParseError("module spec: no generators");

    const int n = fields["n"];
    int xdeg = 0;
    for (const auto& g : spec.generators) {
        if (max_exponent(g, 'y') >= n)
            throw ParseError("module spec: generator '" + g + "' has y-degree >= n=" + std::to_string(n));
        xdeg = std::max(xdeg, max_exponent(g, 'x'));
    }
    spec.params.n = n;
    spec.params.p = static_cast<std::uint32_t>(fields["p"]);
    if (fields.count("N")) {
        spec.params.N = fields["N"];
        spec.explicit_precision = true;
    } else {
        spec.params.N = default_N ? *default_N : min_precision(n, xdeg);
    }
    try {
        spec.params.validate();
    } catch (const Error& e) {
        throw ParseError(std::string("module spec: ") + e.what());
    }
    return spec;
}

ModuleSpec read_module_spec(const std::string& path, std::optional<int> default_N) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open module spec '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_module_spec(ss.str(), default_N);
}

ModuleRep build_module(const ModuleSpec& spec) { return ideal_from_text(spec.params, spec.generators); }

}  // namespace pmc
