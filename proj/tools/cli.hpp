#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqdft::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInapplicable = 2;
inline constexpr int kExitInconsistent = 3;

// Ordered key=value report. Human mode prints an optional headline and
// aligned "key: value" lines; machine mode prints one key=value per line.
class Report {
 public:
  void set_headline(std::string text) { headline_ = std::move(text); }
  void add(std::string key, std::string value);
  void add(std::string key, long long value);
  void add(std::string key, unsigned long long value);
  void add(std::string key, int value) { add(std::move(key), static_cast<long long>(value)); }
  void add(std::string key, unsigned value) { add(std::move(key), static_cast<unsigned long long>(value)); }
  void add(std::string key, unsigned long value) { add(std::move(key), static_cast<unsigned long long>(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "yes" : "no")); }
  void add(std::string key, double value);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::string machine() const;
  std::string human() const;

 private:
  std::string headline_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Inverse of Report::machine. Blank lines are skipped; anything else
// without '=' or with an empty key is a parse error.
std::vector<std::pair<std::string, std::string>> parse_machine(std::string_view text);

// Runs one command line (arguments after the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqdft::cli
