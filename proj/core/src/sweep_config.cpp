#include <cctype>
#include <charconv>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wle/experiments.hpp"

namespace wle {

ConfigError::ConfigError(std::size_t line, const std::string& what)
    : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " +
                                           what
                                     : what),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') &&
      s.back() == s.front()) {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::vector<std::string> split_list(std::string_view value) {
  value = trim(value);
  if (!value.empty() && value.front() == '[') {
    if (value.back() != ']') return {};
    value = value.substr(1, value.size() - 2);
  }
  std::vector<std::string> items;
  while (true) {
    const auto comma = value.find(',');
    const auto item = unquote(trim(value.substr(0, comma)));
    if (!item.empty()) items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return items;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
  SweepConfig cfg;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::string_view rest(text);
  while (!rest.empty()) {
    ++line_no;
    const auto nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{}
                                        : rest.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (value.empty()) throw ConfigError(line_no, "empty value for '" + key + "'");
    if (!seen.insert(key).second) {
      throw ConfigError(line_no, "duplicate key '" + key + "'");
    }
    auto bad = [&](const char* expected) {
      return ConfigError(line_no, "'" + key + "' must be " + expected);
    };

    if (key == "weights") {
      cfg.weight_names = split_list(value);
      if (cfg.weight_names.empty()) throw bad("a non-empty list of weights");
      for (const auto& w : cfg.weight_names) {
        try {
          (void)find_weight(w);
        } catch (const std::invalid_argument& e) {
          throw ConfigError(line_no, e.what());
        }
      }
    } else if (key == "n_values") {
      cfg.n_values.clear();
      for (const auto& item : split_list(value)) {
        std::size_t n = 0;
        if (!parse_number(item, n) || n < 2) throw bad("a list of integers >= 2");
        cfg.n_values.push_back(n);
      }
      if (cfg.n_values.empty()) throw bad("a list of integers >= 2");
    } else if (key == "p") {
      if (!parse_number(unquote(value), cfg.p) || !(cfg.p > 0 && cfg.p < 1)) {
        throw bad("a real number in (0, 1)");
      }
    } else if (key == "trials") {
      if (!parse_number(value, cfg.trials) || cfg.trials < 1) {
        throw bad("an integer >= 1");
      }
    } else if (key == "master_seed") {
      if (!parse_number(value, cfg.master_seed)) {
        throw bad("an unsigned 64-bit integer");
      }
    } else if (key == "resample_disconnected") {
      const auto v = unquote(value);
      if (v == "true") {
        cfg.resample_disconnected = true;
      } else if (v == "false") {
        cfg.resample_disconnected = false;
      } else {
        throw bad("true or false");
      }
    } else if (key == "quantities") {
      cfg.quantities.clear();
      for (const auto& item : split_list(value)) {
        try {
          cfg.quantities.push_back(parse_quantity(item));
        } catch (const std::invalid_argument& e) {
          throw ConfigError(line_no, e.what());
        }
      }
      if (cfg.quantities.empty()) throw bad("a non-empty list of quantities");
    } else if (key == "tolerance") {
      if (!parse_number(value, cfg.tolerance) || cfg.tolerance < 0) {
        throw bad("a nonnegative real");
      }
    } else if (key == "bracket_slack") {
      if (!parse_number(value, cfg.bracket_slack) || cfg.bracket_slack < 0) {
        throw bad("a nonnegative real");
      }
    } else if (key == "alpha") {
      if (!parse_number(value, cfg.alpha)) throw bad("a real number");
    } else {
      throw ConfigError(line_no, "unknown key '" + key + "'");
    }
  }
  for (const char* required : {"weights", "n_values", "p"}) {
    if (!seen.count(required)) {
      throw ConfigError(0, std::string("missing required key '") + required +
                               "'");
    }
  }
  return cfg;
}

}  // namespace wle
