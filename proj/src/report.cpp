#include "skewspan/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewspan {

void Check::fail(const Element& w, std::string why) {
  if (passed) {
    witness = w;
    detail = std::move(why);
  }
  passed = false;
}

void Check::expect(bool ok, const Element& w, const char* why) {
  ++evaluated;
  if (!ok) fail(w, why ? why : "");
}

Check& Report::add(std::string name) {
  Check c;
  c.name = std::move(name);
  checks.push_back(std::move(c));
  return checks.back();
}

const Check* Report::find(std::string_view name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

bool Report::passed(std::string_view name) const {
  const Check* c = find(name);
  if (!c) throw std::out_of_range("no check named " + std::string(name));
  return c->passed;
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::merge(const Report& other, std::string_view prefix) {
  for (auto c : other.checks) {
    if (!prefix.empty()) c.name = std::string(prefix) + "." + c.name;
    checks.push_back(std::move(c));
  }
}

std::string Report::to_string() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.name;
    out += " (" + std::to_string(c.evaluated) + " checked)";
    if (!c.passed) {
      if (c.witness) out += " witness " + c.witness->to_string();
      if (!c.detail.empty()) out += ": " + c.detail;
    }
    out += "\n";
  }
  return out;
}

}  // namespace skewspan
