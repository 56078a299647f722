#include "cycdiff/config.hpp"

#include "cycdiff/rational.hpp"

#include <fstream>
#include <sstream>

namespace cycdiff {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& s, int line) {
    try {
        size_t pos = 0;
        long long v = std::stoll(trim(s), &pos);
        if (pos != trim(s).size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line, "expected an integer, got '" + trim(s) + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else cur += c;
    }
    out.push_back(cur);
    return out;
}

struct RawBranch {
    std::string id;
    long long tame_phi = 0;
    std::vector<long long> jumps;
    std::optional<long long> epsilon;
    std::optional<long long> delta;
    int line = 0;
};

}  // namespace

Config parse_config(std::istream& in) {
    Config cfg;
    bool saw_group = false, saw_curve = false;
    std::string section;
    std::vector<RawBranch> branches;
    CurveSpec curve;

    std::string raw;
    int lineno = 0;
    int section_line = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            section_line = lineno;
            if (section == "group") saw_group = true;
            else if (section == "base") {}
            else if (section == "branch") branches.push_back(RawBranch{.line = lineno});
            else if (section == "curve") saw_curve = true;
            else throw ParseError(lineno, "unknown section [" + section + "]");
            continue;
        }

        size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section.empty()) throw ParseError(lineno, "key outside of any section");

        if (section == "group") {
            if (key == "p") cfg.tower.group.p = parse_int(value, lineno);
            else if (key == "ell") cfg.tower.group.ell = static_cast<int>(parse_int(value, lineno));
            else if (key == "n") cfg.tower.group.n = parse_int(value, lineno);
            else if (key == "kummer_exponent") cfg.tower.group.kummer_exponent = parse_int(value, lineno);
            else throw ParseError(lineno, "unknown key '" + key + "' in [group]");
        } else if (section == "base") {
            if (key == "genus") cfg.tower.base_genus = parse_int(value, lineno);
            else if (key == "genus_ErT") cfg.tower.genus_ErT = parse_int(value, lineno);
            else throw ParseError(lineno, "unknown key '" + key + "' in [base]");
        } else if (section == "branch") {
            RawBranch& b = branches.back();
            if (key == "id") b.id = value;
            else if (key == "tame_phi") b.tame_phi = parse_int(value, lineno);
            else if (key == "jumps") {
                for (const auto& part : split(value, ','))
                    b.jumps.push_back(parse_int(part, lineno));
            } else if (key == "epsilon") b.epsilon = parse_int(value, lineno);
            else if (key == "delta") b.delta = parse_int(value, lineno);
            else throw ParseError(lineno, "unknown key '" + key + "' in [branch]");
        } else if (section == "curve") {
            if (key == "q") curve.q = parse_int(value, lineno);
            else if (key == "b_roots") {
                if (!trim(value).empty())
                    for (const auto& part : split(value, ',')) {
                        auto bits = split(part, ':');
                        if (bits.size() != 2)
                            throw ParseError(lineno, "b_roots entries are beta:phi pairs");
                        curve.b_factored.push_back(
                            {parse_int(bits[0], lineno), parse_int(bits[1], lineno)});
                    }
            } else if (key == "f_terms") {
                if (!trim(value).empty())
                    for (const auto& part : split(value, ',')) {
                        auto bits = split(part, ':');
                        if (bits.size() != 3)
                            throw ParseError(lineno, "f_terms entries are alpha:m:c triples");
                        curve.f_partial.push_back({parse_int(bits[0], lineno),
                                                   parse_int(bits[1], lineno),
                                                   parse_int(bits[2], lineno)});
                    }
            } else throw ParseError(lineno, "unknown key '" + key + "' in [curve]");
        }
    }
    if (!saw_group) throw ParseError(section_line, "missing [group] section");

    for (size_t i = 0; i < branches.size(); ++i) {
        RawBranch& b = branches[i];
        BranchPoint bp;
        bp.id = b.id.empty() ? "branch" + std::to_string(i) : b.id;
        bp.tame_phi = b.tame_phi;
        if (!b.jumps.empty()) {
            WildData w;
            w.jumps = b.jumps;
            w.epsilon = static_cast<int>(b.epsilon.value_or(cfg.tower.group.ell));
            if (b.delta) w.delta = *b.delta;
            else if (cfg.tower.group.ell == 1 && b.jumps.size() == 1)
                w.delta = WildData::delta_for_single_jump(b.jumps[0], cfg.tower.group.p);
            else
                throw ParseError(b.line, "delta is required for ell != 1 wild data");
            bp.wild = w;
        } else if (b.epsilon || b.delta) {
            throw ParseError(b.line, "epsilon/delta given without jumps");
        }
        cfg.tower.branch_points.push_back(bp);
    }
    cfg.explicit_branches = !branches.empty();
    if (saw_curve) {
        curve.group = cfg.tower.group;
        cfg.curve = curve;
    }
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_config(in);
}

TowerData Config::effective_tower() const {
    if (explicit_branches || !curve) return tower;
    return derive_tower(*curve);
}

}  // namespace cycdiff
