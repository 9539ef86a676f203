#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rs3::report {

// 17 significant digits, the round-trip-safe decimal form for IEEE doubles.
std::string fmt17(double v);

// Minimal ordered JSON emitter (2-space indent). Keys are emitted in call
// order so documents are byte-stable.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& os) : os_(os) {}

  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(std::string_view name);
  void value(double v);
  void value(int v);
  void value(long v);
  void value(bool v);
  void value(std::string_view v);

 private:
  struct Frame {
    bool is_array = false;
    bool first = true;
  };
  void pre_value();
  void newline_indent();

  std::ostream& os_;
  std::vector<Frame> stack_;
  bool pending_key_ = false;
};

std::string csv_escape(std::string_view field);

}  // namespace rs3::report
