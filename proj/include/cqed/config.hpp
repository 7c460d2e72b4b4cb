#pragma once

#include <stdexcept>
#include <string>

#include "cqed/model.hpp"

namespace cqed {

/** Bad key, bad value or unreadable file; maps to CLI exit code 2. */
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Set one model parameter by its config key: hbar, omega_up, omega_down,
 * omega_ph, g_up, g_down, g_bond, zeta. Unknown keys throw ConfigError.
 */
void set_model_key(ModelParams& params, const std::string& key, double value);

/**
 * Parse a flat key=value parameter file on top of `base`. Blank lines and
 * '#' comments are ignored; unknown keys and malformed lines are errors.
 */
ModelParams load_params_file(const std::string& path,
                             const ModelParams& base = {});

}  // namespace cqed
