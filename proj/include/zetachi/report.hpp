#pragma once

// Deterministic report emission: JSON with a fixed key order and explicit
// 17-significant-digit number formatting, a flat CSV projection, and
// atomic (write-then-rename) file output. Byte stability across runs with
// the same configuration is part of the contract.

#include <cstdint>
#include <string>
#include <vector>

namespace zetachi::report {

inline constexpr const char* kSchemaVersion = "1";

/// %.17g with a locale-independent decimal point.
std::string format_number(double x);

/// Minimal streaming JSON writer with deterministic output. Keys appear in
/// insertion order; all doubles go through format_number.
class JsonWriter {
public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& name);
  void value(double x);
  void value(long long x);
  void value(int x);
  void value(std::size_t x);
  void value(const std::string& s);
  void value(const char* s);
  void value_bool(bool b);
  void raw(const std::string& text);

  std::string str() const { return out_; }

private:
  void comma();
  std::string out_;
  std::vector<bool> need_comma_;
  bool pending_key_ = false;
};

/// One CSV table: header row plus rows of preformatted cells.
class CsvWriter {
public:
  void header(const std::vector<std::string>& names);
  void row(const std::vector<std::string>& cells);
  std::string str() const { return out_; }

private:
  std::string out_;
};

/// Writes content to path via a temporary file in the same directory and a
/// rename, so readers never observe a partial report.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace zetachi::report
