#include "expoweyl/config.hpp"

#include <fstream>
#include <sstream>

namespace expoweyl {

RingConfigPtr SessionConfig::ring() const {
    return make_ring_config(algebraic, transcendentals, embed, p, variant, deform);
}

SessionConfig default_session_config() {
    SessionConfig sc;
    sc.embed = {"1"};
    sc.p = {1};
    sc.neg_gens = {{-1}};
    return sc;
}

DeformationConfig parse_q_mode(const std::string& text) {
    if (text == "classical") return {QMode::classical, 0};
    if (text == "generic") return {QMode::generic, 0};
    if (text.rfind("root:", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(text.substr(5));
        } catch (const std::exception&) {
            throw ConfigError("malformed root order in q_mode '" + text + "'");
        }
        if (n < 1) throw ConfigError("root order must be >= 1 in q_mode '" + text + "'");
        return {QMode::root_of_unity, n};
    }
    throw ConfigError("unknown q_mode '" + text + "' (expected classical|generic|root:N)");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, sep)) out.push_back(trim(piece));
    if (out.empty()) out.push_back("");
    return out;
}

long long parse_ll(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("malformed integer '" + s + "'", line);
    }
}

Rational parse_rat(const std::string& s, int line) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ConfigError("malformed rational '" + s + "'", line);
    }
}

LatticeVector parse_vec(const std::string& s, int line) {
    LatticeVector v;
    for (const auto& piece : split(s, ',')) v.push_back(parse_ll(piece, line));
    return v;
}

} // namespace

SessionConfig load_session_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");

    SessionConfig sc;
    sc.neg_gens = {{-1}};
    bool saw_embed = false, saw_p = false;

    std::string section, raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("unterminated section header", lineno);
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value", lineno);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", lineno);

        if (section == "lattice") {
            if (key == "embed") {
                sc.embed = split(value, ',');
                saw_embed = true;
            } else if (key == "p") {
                sc.p = parse_vec(value, lineno);
                saw_p = true;
            } else if (key == "rank") {
                parse_ll(value, lineno); // redundant with embed, validated below
            } else {
                throw ConfigError("unknown key '" + key + "' in [lattice]", lineno);
            }
        } else if (section == "symbols") {
            if (value.empty()) {
                sc.transcendentals.push_back(key);
            } else {
                std::vector<Rational> mp;
                for (const auto& piece : split(value, ','))
                    mp.push_back(parse_rat(piece, lineno));
                sc.algebraic.push_back({key, std::move(mp)});
            }
        } else if (section == "ring") {
            if (key == "variant") {
                if (value == "constant")
                    sc.variant = Variant::constant;
                else if (value == "dynamic")
                    sc.variant = Variant::dynamic;
                else
                    throw ConfigError("unknown variant '" + value + "'", lineno);
            } else if (key == "q_mode") {
                try {
                    sc.deform = parse_q_mode(value);
                } catch (const ConfigError& e) {
                    throw ConfigError(e.what(), lineno);
                }
            } else {
                throw ConfigError("unknown key '" + key + "' in [ring]", lineno);
            }
        } else if (section == "galois") {
            if (key == "layer")
                sc.galois_layer = value;
            else
                throw ConfigError("unknown key '" + key + "' in [galois]", lineno);
        } else if (section == "negative") {
            if (key == "gens") {
                sc.neg_gens.clear();
                for (const auto& piece : split(value, ';'))
                    sc.neg_gens.push_back(parse_vec(piece, lineno));
            } else {
                throw ConfigError("unknown key '" + key + "' in [negative]", lineno);
            }
        } else {
            throw ConfigError("unknown section '" + section + "'", lineno);
        }
    }

    if (!saw_embed) sc.embed = {"1"};
    if (!saw_p) sc.p = LatticeVector(sc.embed.size(), 0), sc.p[0] = 1;
    if (sc.embed.empty() || sc.embed[0] != "1")
        throw ConfigError("embed must start with the literal 1");
    if (sc.p.size() != sc.embed.size())
        throw ConfigError("p must have one coordinate per embedding entry");
    for (std::size_t i = 1; i < sc.embed.size(); ++i) {
        bool known = false;
        for (const auto& a : sc.algebraic) known = known || a.name == sc.embed[i];
        for (const auto& t : sc.transcendentals) known = known || t == sc.embed[i];
        if (!known)
            throw ConfigError("embedding symbol '" + sc.embed[i] + "' is not declared in [symbols]");
    }
    try {
        sc.ring(); // surfaces symbol-table problems (duplicates, bad min_polys)
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return sc;
}

} // namespace expoweyl
