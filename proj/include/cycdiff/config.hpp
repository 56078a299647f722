/* INI-style configuration files describing a tower and optionally an
 * explicit curve.  Sections: [group], [base], [branch] (repeatable),
 * [curve].  Unknown sections or keys are rejected; parse errors carry
 * line numbers.  Field elements in [curve] are encoded as integers in
 * [0,q) (see Fq).
 */

#pragma once

#include "cycdiff/curve.hpp"
#include "cycdiff/tower.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace cycdiff {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct Config {
    TowerData tower;
    bool explicit_branches = false;   // [branch] sections present
    std::optional<CurveSpec> curve;

    /* tower for the closed-form engines: explicit branches if present,
     * otherwise derived from the curve */
    TowerData effective_tower() const;
};

Config parse_config(std::istream& in);
Config parse_config_file(const std::string& path);

}  // namespace cycdiff
