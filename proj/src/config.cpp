#include "cqed/config.hpp"

#include <cctype>
#include <fstream>

namespace cqed {

namespace {

std::string trim(const std::string& s) {
    size_t begin = 0;
    size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return s.substr(begin, end - begin);
}

}  // namespace

void set_model_key(ModelParams& params, const std::string& key, double value) {
    if (key == "hbar") {
        params.hbar = value;
    } else if (key == "omega_up") {
        params.omega_up = value;
    } else if (key == "omega_down") {
        params.omega_down = value;
    } else if (key == "omega_ph") {
        params.omega_ph = value;
    } else if (key == "g_up") {
        params.g_up = value;
    } else if (key == "g_down") {
        params.g_down = value;
    } else if (key == "g_bond") {
        params.g_bond = value;
    } else if (key == "zeta") {
        params.zeta = value;
    } else {
        throw ConfigError("unknown parameter key '" + key + "'");
    }
}

ModelParams load_params_file(const std::string& path,
                             const ModelParams& base) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open parameter file '" + path + "'");
    }
    ModelParams params = base;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(line_no) +
                              ": expected key = value");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string text = trim(stripped.substr(eq + 1));
        double value = 0.0;
        try {
            size_t used = 0;
            value = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw ConfigError(path + ":" + std::to_string(line_no) +
                              ": bad numeric value '" + text + "'");
        }
        set_model_key(params, key, value);
    }
    return params;
}

}  // namespace cqed
