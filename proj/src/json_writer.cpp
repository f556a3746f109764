#include "causal/json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace causal {

namespace {

using ojson = nlohmann::ordered_json;

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  // keep a float marker so integral values still read back as numbers with a fraction
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void write(const ojson& v, std::string& out, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case ojson::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [k, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += ojson(k).dump();
        out += indent < 0 ? ":" : ": ";
        write(item, out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case ojson::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(item, out, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case ojson::value_t::number_float: out += format_double(v.get<double>()); return;
    default: out += v.dump(); return;
  }
}

}  // namespace

std::string write_json(const ojson& value, int indent) {
  std::string out;
  write(value, out, indent, 0);
  return out;
}

ojson eval_json(const EvalResult& r) {
  ojson j;
  j["status"] = std::string(to_string(r.status));
  if (r.is_finite() && !r.is_zero()) {
    j["log_value"] = r.log_scale;
    const double v = r.to_double();
    j["value"] = std::isfinite(v) ? ojson(v) : ojson(nullptr);
    j["sign"] = r.sign();
  } else {
    j["log_value"] = nullptr;
    j["value"] = r.is_finite() ? ojson(0.0) : ojson(nullptr);
    j["sign"] = 0;
  }
  return j;
}

ojson rational_vector_json(const RationalVector& v) {
  ojson a = ojson::array();
  for (const auto& s : format_coords(v)) a.push_back(s);
  return a;
}

ojson double_vector_json(std::span<const double> v) {
  ojson a = ojson::array();
  for (double x : v) a.push_back(x);
  return a;
}

}  // namespace causal
