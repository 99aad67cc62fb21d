#pragma once

// Minimal JSON emission helpers. Reports are written by hand so that field
// order is fixed and reals always carry 12 significant digits.

#include <cstdio>
#include <string>
#include <string_view>

namespace heawood::jsonio {

inline std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

inline std::string quoted(std::string_view s) { return "\"" + escape(s) + "\""; }

// 12 significant digits, shortest form ("%.12g").
inline std::string real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace heawood::jsonio
