#include "hopfq/render.hpp"

#include <sstream>

namespace hopfq {

namespace {

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string power(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^{" + std::to_string(e) + "}";
}

}  // namespace

std::string latex(const ExactScalar& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : s.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    std::string body;
    if (c != 1 || (t.eps == 0 && t.u0 == 0)) body = latex_rational(c);
    auto append = [&](const std::string& f) { body += (body.empty() ? "" : " ") + f; };
    if (t.u0 != 0) append(power("u_0", t.u0));
    if (t.eps != 0) append(power("\\epsilon", t.eps));
    os << body;
  }
  return os.str();
}

std::string latex(const MultiIndex& m, const char* var) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [k, mult] : m.entries()) {
    if (!out.empty()) out += ' ';
    out += power(std::string(var) + "_{" + std::to_string(k) + "}", mult);
  }
  return out;
}

std::string latex(const NormalOrderedOperator& op) {
  if (op.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : op.terms()) {
    if (!first) os << "\n+ ";
    first = false;
    std::string coeff = c.size() > 1 ? "\\left(" + latex(c) + "\\right)" : latex(c);
    const bool bare = key.first.empty() && key.second.empty();
    if (!bare && coeff == "1") coeff.clear();
    if (!bare && coeff == "-1") coeff = "-";
    std::string mono;
    if (!key.first.empty()) mono += latex(key.first, "q");
    if (!key.second.empty()) mono += (mono.empty() ? "" : " ") + latex(key.second, "\\hat{p}");
    os << coeff << (coeff.empty() || coeff == "-" || mono.empty() ? "" : " ") << mono;
  }
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace hopfq
