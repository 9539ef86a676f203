#include "rs3/report.hpp"

#include <cstdio>

namespace rs3::report {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void JsonWriter::newline_indent() {
  os_ << '\n';
  for (std::size_t i = 0; i < stack_.size(); ++i) os_ << "  ";
}

void JsonWriter::pre_value() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!stack_.empty()) {
    if (!stack_.back().first) os_ << ',';
    stack_.back().first = false;
    newline_indent();
  }
}

void JsonWriter::begin_object() {
  pre_value();
  os_ << '{';
  stack_.push_back({false, true});
}

void JsonWriter::end_object() {
  bool empty = stack_.back().first;
  stack_.pop_back();
  if (!empty) newline_indent();
  os_ << '}';
  if (stack_.empty()) os_ << '\n';
}

void JsonWriter::begin_array() {
  pre_value();
  os_ << '[';
  stack_.push_back({true, true});
}

void JsonWriter::end_array() {
  bool empty = stack_.back().first;
  stack_.pop_back();
  if (!empty) newline_indent();
  os_ << ']';
}

void JsonWriter::key(std::string_view name) {
  if (!stack_.back().first) os_ << ',';
  stack_.back().first = false;
  newline_indent();
  os_ << '"' << name << "\": ";
  pending_key_ = true;
}

void JsonWriter::value(double v) {
  pre_value();
  os_ << fmt17(v);
}

void JsonWriter::value(int v) {
  pre_value();
  os_ << v;
}

void JsonWriter::value(long v) {
  pre_value();
  os_ << v;
}

void JsonWriter::value(bool v) {
  pre_value();
  os_ << (v ? "true" : "false");
}

void JsonWriter::value(std::string_view v) {
  pre_value();
  os_ << '"';
  for (char c : v) {
    if (c == '"' || c == '\\') os_ << '\\';
    os_ << c;
  }
  os_ << '"';
}

std::string csv_escape(std::string_view field) {
  bool need = field.find_first_of(",\"\n") != std::string_view::npos;
  if (!need) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace rs3::report
