#pragma once

#include <string>
#include <vector>

namespace mahlervol {

// Minimal JSON emitter with deterministic output: keys appear in insertion
// order, floats print as %.17g, and no locale-dependent formatting is used.
// Running the same report twice must produce identical bytes.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(double v);
  JsonWriter& value(long long v);
  JsonWriter& value(int v);
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  const std::string& str() const { return out_; }

 private:
  void comma();
  std::string out_;
  std::vector<bool> has_item_;   // per open scope
  bool pending_key_ = false;
};

// %.17g rendering shared by the JSON and CSV paths.
std::string format_double(double v);

// Writes text to path, or to stdout when path is empty. Failures raise io_error.
void write_text_output(const std::string& path, const std::string& text);

}  // namespace mahlervol
