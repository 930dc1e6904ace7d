#include "zetachi/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace zetachi::report {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void JsonWriter::comma() {
  if (pending_key_) return;
  if (!need_comma_.empty()) {
    if (need_comma_.back()) out_ += ',';
    need_comma_.back() = true;
  }
}

void JsonWriter::begin_object() {
  comma();
  pending_key_ = false;
  out_ += '{';
  need_comma_.push_back(false);
}

void JsonWriter::end_object() {
  out_ += '}';
  need_comma_.pop_back();
}

void JsonWriter::begin_array() {
  comma();
  pending_key_ = false;
  out_ += '[';
  need_comma_.push_back(false);
}

void JsonWriter::end_array() {
  out_ += ']';
  need_comma_.pop_back();
}

void JsonWriter::key(const std::string& name) {
  comma();
  out_ += '"';
  out_ += name;
  out_ += "\":";
  pending_key_ = true;
}

void JsonWriter::value(double x) {
  comma();
  pending_key_ = false;
  out_ += format_number(x);
}

void JsonWriter::value(long long x) {
  comma();
  pending_key_ = false;
  out_ += std::to_string(x);
}

void JsonWriter::value(int x) { value(static_cast<long long>(x)); }
void JsonWriter::value(std::size_t x) { value(static_cast<long long>(x)); }

void JsonWriter::value(const std::string& s) {
  comma();
  pending_key_ = false;
  out_ += '"';
  for (const char c : s) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      case '\r': out_ += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out_ += buf;
        } else {
          out_ += c;
        }
    }
  }
  out_ += '"';
}

void JsonWriter::value(const char* s) { value(std::string(s)); }

void JsonWriter::value_bool(bool b) {
  comma();
  pending_key_ = false;
  out_ += b ? "true" : "false";
}

void JsonWriter::raw(const std::string& text) {
  comma();
  pending_key_ = false;
  out_ += text;
}

void CsvWriter::header(const std::vector<std::string>& names) {
  row(names);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += cells[i];
  }
  out_ += '\n';
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), std::streamsize(content.size()));
    if (!f) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace zetachi::report
