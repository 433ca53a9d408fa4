#pragma once

#include <stdexcept>
#include <string>

#include "expoweyl/expolyring.hpp"

namespace expoweyl {

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& msg, int line)
        : std::runtime_error(msg + " at line " + std::to_string(line)), line_(line) {}
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg), line_(0) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Session data loaded from an INI file: everything needed to rebuild the
/// ring config (possibly with an overridden deformation mode) plus the
/// optional Galois layer and the lowering-generator set.
struct SessionConfig {
    std::vector<SymbolSpec> algebraic;
    std::vector<std::string> transcendentals;
    std::vector<std::string> embed; // embed[0] must be "1"
    LatticeVector p;
    Variant variant = Variant::constant;
    DeformationConfig deform;
    std::string galois_layer;              // empty: none configured
    std::vector<LatticeVector> neg_gens;   // lowering generators, default {-1}

    RingConfigPtr ring() const;
};

/// rank-1 A = Z, p = (1), classical mode, generators {-1}
SessionConfig default_session_config();

/// "classical" | "generic" | "root:N"
DeformationConfig parse_q_mode(const std::string& text);

SessionConfig load_session_config(const std::string& path);

} // namespace expoweyl
