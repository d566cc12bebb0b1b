#pragma once

// Text forms: complex literals, JSON and CSV report rendering.
//
// Complex literal grammar (no embedded whitespace):
//   rectangular  [+-]decimal [ (+|-)decimal 'i' ]   e.g. "1.5+0.5i", "-1"
//   imaginary    [+-]decimal 'i'                     e.g. "0.3i"
//   polar        decimal '@' decimal                 e.g. "2@2.356194490"
// where decimal is digits with an optional fraction and exponent. Polar form
// is only meaningful for BranchedConstant and takes theta in [0, 2 pi) as is.
//
// All numbers are printed with 17 significant digits, so rendering and
// parsing round-trip exactly, and JSON keys come out in a fixed order.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "complexfn.hpp"
#include "identities.hpp"

namespace zetaquad {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

struct Scanned {
  double value;
  std::size_t end;
};

inline Scanned scan_decimal(std::string_view text, std::size_t pos, bool allow_sign) {
  const std::size_t start = pos;
  bool negative = false;
  if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size() || !(std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
    throw ParseError("expected a decimal number", pos);
  }
  double v = 0.0;
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v, std::chars_format::general);
  if (res.ec == std::errc::result_out_of_range) throw ParseError("number out of range", start);
  if (res.ec != std::errc{}) throw ParseError("malformed decimal number", pos);
  return {negative ? -v : v, static_cast<std::size_t>(res.ptr - text.data())};
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses a rectangular complex literal.
inline Complex parse_complex(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw ParseError("empty complex literal", 0);
  const auto first = detail::scan_decimal(text, 0, true);
  std::size_t pos = first.end;
  if (pos == text.size()) return {first.value, 0.0};
  if (text[pos] == 'i' && pos + 1 == text.size()) return {0.0, first.value};
  if (text[pos] != '+' && text[pos] != '-') {
    throw ParseError("expected '+', '-' or 'i'", pos);
  }
  const auto second = detail::scan_decimal(text, pos, true);
  pos = second.end;
  if (pos >= text.size() || text[pos] != 'i') throw ParseError("expected trailing 'i'", pos);
  if (pos + 1 != text.size()) throw ParseError("unexpected trailing characters", pos + 1);
  return {first.value, second.value};
}

/// Parses a BranchedConstant: polar "r@theta" (theta taken verbatim, must be
/// in [0, 2 pi)) or a rectangular literal whose argument is mapped to
/// [0, 2 pi).
inline BranchedConstant parse_constant(std::string_view text) {
  text = detail::trim(text);
  const auto at = text.find('@');
  if (at == std::string_view::npos) {
    const Complex z = parse_complex(text);
    if (z == Complex{0.0, 0.0}) throw ParseError("constant must be nonzero", 0);
    double theta = std::atan2(z.imag(), z.real());
    if (theta < 0.0) theta += two_pi;
    if (theta >= two_pi) theta = 0.0;
    return {std::abs(z), theta};
  }
  const auto r = detail::scan_decimal(text, 0, false);
  if (r.end != at) throw ParseError("expected '@'", r.end);
  const auto theta = detail::scan_decimal(text, at + 1, true);
  if (theta.end != text.size()) throw ParseError("unexpected trailing characters", theta.end);
  if (!(r.value > 0.0)) throw ParseError("polar modulus must be > 0", 0);
  if (!(theta.value >= 0.0 && theta.value < two_pi)) {
    throw ParseError("polar angle must lie in [0, 2*pi)", at + 1);
  }
  return {r.value, theta.value};
}

inline std::string format_real(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Rectangular literal that parse_complex reads back bit-for-bit.
inline std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

inline std::string format_constant(const BranchedConstant& a) {
  return format_real(a.r()) + "@" + format_real(a.theta());
}

// ---------------------------------------------------------------------------
// JSON

/// Minimal streaming JSON writer: fixed key order as emitted, 17-digit numbers,
/// non-finite numbers as null.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(std::string_view k) {
    separator();
    string_literal(k);
    out_ << ':';
    after_key_ = true;
    return *this;
  }
  JsonWriter& value(double x) {
    separator();
    if (std::isfinite(x)) {
      out_ << format_real(x);
    } else {
      out_ << "null";
    }
    return *this;
  }
  JsonWriter& value(std::size_t n) {
    separator();
    out_ << n;
    return *this;
  }
  JsonWriter& value(bool b) {
    separator();
    out_ << (b ? "true" : "false");
    return *this;
  }
  JsonWriter& value(std::string_view s) {
    separator();
    string_literal(s);
    return *this;
  }
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& value(Complex z) {
    begin_object();
    key("re").value(z.real());
    key("im").value(z.imag());
    return end_object();
  }

 private:
  JsonWriter& open(char c) {
    separator();
    out_ << c;
    first_.push_back(true);
    return *this;
  }
  JsonWriter& close(char c) {
    out_ << c;
    first_.pop_back();
    return *this;
  }
  void separator() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!first_.empty()) {
      if (!first_.back()) out_ << ',';
      first_.back() = false;
    }
  }
  void string_literal(std::string_view s) {
    out_ << '"';
    for (const char ch : s) {
      switch (ch) {
        case '"': out_ << "\\\""; break;
        case '\\': out_ << "\\\\"; break;
        case '\n': out_ << "\\n"; break;
        case '\t': out_ << "\\t"; break;
        case '\r': out_ << "\\r"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
            out_ << buf;
          } else {
            out_ << ch;
          }
      }
    }
    out_ << '"';
  }

  std::ostream& out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

inline void write_report(JsonWriter& w, const VerificationReport& rep) {
  const auto& c = rep.identity_case;
  w.begin_object();
  w.key("label").value(rep.label);
  w.key("case").begin_object();
  w.key("k").value(c.k);
  w.key("a").begin_object();
  w.key("r").value(c.a.r());
  w.key("theta").value(c.a.theta());
  w.end_object();
  w.key("k_text").value(format_complex(c.k));
  w.key("a_text").value(format_constant(c.a));
  w.end_object();

  w.key("routes").begin_object();
  for (const auto& r : rep.routes) {
    w.key(r.name).begin_object();
    w.key("value").value(r.value);
    if (r.quad) {
      w.key("err_estimate").value(r.quad->err_estimate);
      w.key("n_evals").value(r.quad->n_evals);
      w.key("converged").value(r.quad->converged);
    }
    w.end_object();
  }
  w.end_object();

  w.key("residuals").begin_object();
  for (const auto& r : rep.residuals) {
    w.key(r.pair()).begin_object();
    w.key("value").value(r.value);
    w.key("bound").value(r.bound);
    w.key("ok").value(r.ok());
    w.end_object();
  }
  w.end_object();

  w.key("verdict").value(to_string(rep.verdict));
  w.key("notes").begin_array();
  for (const auto& n : rep.notes) w.value(n);
  w.end_array();
  w.end_object();
}

inline std::string to_json(const VerificationReport& rep) {
  std::ostringstream os;
  JsonWriter w(os);
  write_report(w, rep);
  return os.str();
}

/// {"reports": [...], "notes": [...]}
inline std::string to_json(const std::vector<VerificationReport>& reports,
                           const std::vector<std::string>& notes = {}) {
  std::ostringstream os;
  JsonWriter w(os);
  w.begin_object();
  w.key("reports").begin_array();
  for (const auto& r : reports) write_report(w, r);
  w.end_array();
  w.key("notes").begin_array();
  for (const auto& n : notes) w.value(n);
  w.end_array();
  w.end_object();
  return os.str();
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr const char* csv_header =
    "k_re,k_im,a_r,a_theta,route,value_re,value_im,err_est,verdict";

/// One row per route; err_est is empty for non-quadrature routes.
inline std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = std::string(csv_header) + "\n";
  for (const auto& rep : reports) {
    const auto& c = rep.identity_case;
    for (const auto& r : rep.routes) {
      out += format_real(c.k.real()) + "," + format_real(c.k.imag()) + "," + format_real(c.a.r()) +
             "," + format_real(c.a.theta()) + "," + r.name + "," + format_real(r.value.real()) +
             "," + format_real(r.value.imag()) + "," +
             (r.quad ? format_real(r.quad->err_estimate) : std::string()) + "," +
             to_string(rep.verdict) + "\n";
    }
  }
  return out;
}

}  // namespace zetaquad
