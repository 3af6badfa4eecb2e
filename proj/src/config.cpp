#include "trotterlab/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace trotterlab::config {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& value, Parse parse) {
  std::vector<T> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse(item));
  }
  return out;
}

[[noreturn]] void fail(const std::string& origin, int line_no, const std::string& what) {
  throw config_error(origin + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
  ExperimentConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(origin, line_no, "expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) fail(origin, line_no, "empty value for key '" + key + "'");
    try {
      if (key == "scheme") {
        if (value != "lie" && value != "strang") fail(origin, line_no, "scheme must be lie|strang");
        cfg.scheme = value;
      } else if (key == "state") {
        cfg.state = value;
      } else if (key == "ell_condition") {
        cfg.ell_condition = std::stoi(value);
      } else if (key == "c") {
        cfg.c = std::stod(value);
      } else if (key == "sign") {
        cfg.sign = std::stoi(value);
        if (cfg.sign != 1 && cfg.sign != -1) fail(origin, line_no, "sign must be +1 or -1");
      } else if (key == "grid_n") {
        cfg.grid_n = parse_list<int>(value, [](const std::string& s) { return std::stoi(s); });
        if (cfg.grid_n.empty()) fail(origin, line_no, "grid_n list is empty");
        if (!std::is_sorted(cfg.grid_n.begin(), cfg.grid_n.end()))
          fail(origin, line_no, "grid_n must be ascending");
      } else if (key == "r_max") {
        cfg.r_max = std::stod(value);
      } else if (key == "T") {
        cfg.T = std::stod(value);
      } else if (key == "L") {
        cfg.L = parse_list<int>(value, [](const std::string& s) { return std::stoi(s); });
        if (cfg.L.empty()) fail(origin, line_no, "L list is empty");
      } else if (key == "out") {
        cfg.out = value;
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "tol") {
        cfg.tol = std::stod(value);
      } else if (key == "window") {
        cfg.window = std::stoi(value);
      } else if (key == "jump_threshold") {
        cfg.jump_threshold = std::stod(value);
      } else if (key == "times") {
        cfg.times = parse_list<double>(value, [](const std::string& s) { return std::stod(s); });
      } else if (key == "free_times") {
        cfg.free_times =
            parse_list<double>(value, [](const std::string& s) { return std::stod(s); });
      } else {
        fail(origin, line_no, "unknown key '" + key + "'");
      }
    } catch (const config_error&) {
      throw;
    } catch (const std::exception&) {
      fail(origin, line_no, "unparsable value for key '" + key + "'");
    }
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw config_error(path + ": cannot open");
  std::stringstream buf;
  buf << is.rdbuf();
  return parse_config_text(buf.str(), path);
}

}  // namespace trotterlab::config
