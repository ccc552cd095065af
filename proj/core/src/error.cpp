#include "memesim/error.hpp"

namespace memesim {

namespace {

std::string join_fields(const std::vector<std::string>& fields, const std::string& detail) {
    std::string msg = "invalid configuration:";
    for (const auto& f : fields) {
        msg += ' ';
        msg += f;
    }
    if (!detail.empty()) {
        msg += " (" + detail + ")";
    }
    return msg;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> fields, const std::string& detail)
    : Error("invalid-config", join_fields(fields, detail)), fields_(std::move(fields)) {}

ParseError::ParseError(std::size_t line, std::string token, const std::string& what)
    : Error("parse-error",
            "line " + std::to_string(line) + ": " + what + " near '" + token + "'"),
      line_(line),
      token_(std::move(token)) {}

}  // namespace memesim
