#include "emosc/config_file.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace emosc {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

PhysicalSystem load_system(std::istream& in) {
    PhysicalSystem sys;
    const std::map<std::string, double PhysicalSystem::*> fields = {
        {"mass", &PhysicalSystem::mass},
        {"charge", &PhysicalSystem::charge},
        {"hbar", &PhysicalSystem::hbar},
        {"light_speed", &PhysicalSystem::light_speed},
        {"omega_x", &PhysicalSystem::omega_x},
        {"omega_y", &PhysicalSystem::omega_y},
        {"omega_z", &PhysicalSystem::omega_z},
        {"E_x", &PhysicalSystem::E_x},
        {"E_y", &PhysicalSystem::E_y},
        {"E_z", &PhysicalSystem::E_z},
        {"B_z", &PhysicalSystem::B_z},
        {"B_x", &PhysicalSystem::B_x},
    };

    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigParseError(lineno, "expected key=value, got '" + stripped + "'");

        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) throw ConfigParseError(lineno, "missing key before '='");
        if (value.empty()) throw ConfigParseError(lineno, "missing value for key '" + key + "'");

        const auto it = fields.find(key);
        if (it == fields.end()) throw ConfigParseError(lineno, "unknown key '" + key + "'");

        std::istringstream num(value);
        double parsed = 0.0;
        num >> parsed;
        char leftover = 0;
        if (num.fail() || (num >> leftover))
            throw ConfigParseError(lineno, "could not parse number '" + value + "' for key '" +
                                               key + "'");
        sys.*(it->second) = parsed;
        seen.insert(key);
    }

    // Every field must be stated explicitly; silent defaults hide typos.
    for (const auto& entry : fields)
        if (!seen.count(entry.first))
            throw ConfigParseError(lineno, "missing key '" + entry.first + "'");

    try {
        sys.validate();
    } catch (const InvalidInput& e) {
        throw ConfigParseError(lineno, std::string("invalid system: ") + e.what());
    }
    return sys;
}

PhysicalSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigParseError(0, "cannot open file '" + path + "'");
    return load_system(in);
}

}  // namespace emosc
