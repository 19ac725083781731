#pragma once

#include <cctype>
#include <compare>
#include <stdexcept>
#include <string>

namespace polycfg {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A (class, index) label such as R_2 or m_0.
struct Label {
  std::string cls;
  int index = 0;

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;

  std::string str() const { return cls + "_" + std::to_string(index); }

  // Class name followed by subscript digits, e.g. "M₁".
  std::string pretty() const {
    static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string out = cls;
    std::string digits = std::to_string(index);
    for (char ch : digits) out += ch == '-' ? "₋" : sub[ch - '0'];
    return out;
  }

  // Accepts "R_2", "R2" or a bare class name (index 0).
  static Label parse(const std::string& text) {
    if (text.empty()) throw ValidationError("empty label");
    std::size_t end = text.size();
    std::size_t pos = end;
    while (pos > 0 && std::isdigit(static_cast<unsigned char>(text[pos - 1]))) --pos;
    if (pos == end) return {text, 0};
    std::string cls = text.substr(0, pos);
    if (!cls.empty() && cls.back() == '_') cls.pop_back();
    if (cls.empty()) throw ValidationError("label without class name: " + text);
    return {cls, std::stoi(text.substr(pos))};
  }
};

struct LabelHash {
  std::size_t operator()(const Label& l) const noexcept {
    return std::hash<std::string>()(l.cls) * 1315423911u ^ std::hash<int>()(l.index);
  }
};

// Number of terminal columns a UTF-8 string occupies (one per code point).
inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++w;
  return w;
}

}  // namespace polycfg
