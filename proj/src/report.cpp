#include "tgpd/report.hpp"

#include <sstream>

#include "tgpd/carrier.hpp"

namespace tgpd {

void ValidationReport::pass(std::string name, bool advisory) {
  checks_.push_back(Check{std::move(name), true, advisory, std::nullopt});
}

void ValidationReport::fail(std::string name, Witness w, bool advisory) {
  checks_.push_back(Check{std::move(name), false, advisory, std::move(w)});
}

void ValidationReport::record(std::string name, bool ok, Witness w,
                              bool advisory) {
  if (ok) {
    pass(std::move(name), advisory);
  } else {
    fail(std::move(name), std::move(w), advisory);
  }
}

void ValidationReport::merge(const ValidationReport &other,
                             const std::string &prefix) {
  for (const auto &c : other.checks_) {
    Check copy = c;
    copy.name = prefix + c.name;
    checks_.push_back(std::move(copy));
  }
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const Check *ValidationReport::find(const std::string &name) const {
  for (const auto &c : checks_) {
    if (c.name == name) {
      return &c;
    }
  }
  return nullptr;
}

bool ValidationReport::passed(const std::string &name) const {
  const Check *c = find(name);
  return c != nullptr && c->passed;
}

const Check *ValidationReport::first_failure() const {
  for (const auto &c : checks_) {
    if (!c.passed && !c.advisory) {
      return &c;
    }
  }
  return nullptr;
}

std::string format_witness(const Witness &w, const Carrier *carrier) {
  std::ostringstream oss;
  oss << '(';
  for (std::size_t k = 0; k < w.items.size(); ++k) {
    if (k) {
      oss << ", ";
    }
    if (const auto *e = std::get_if<std::size_t>(&w.items[k])) {
      if (carrier && *e < carrier->size()) {
        oss << carrier->name(*e);
      } else {
        oss << *e;
      }
    } else {
      const auto &s = std::get<Subset>(w.items[k]);
      if (carrier && s.width() == carrier->size()) {
        oss << carrier->format(s);
      } else {
        oss << '{';
        bool first = true;
        s.for_each([&](std::size_t i) {
          oss << (first ? "" : ",") << i;
          first = false;
        });
        oss << '}';
      }
    }
  }
  oss << ')';
  if (!w.note.empty()) {
    oss << ' ' << w.note;
  }
  return oss.str();
}

std::string ValidationReport::to_text(const Carrier *carrier) const {
  std::ostringstream oss;
  for (const auto &c : checks_) {
    oss << (c.passed ? "PASS " : (c.advisory ? "NOTE " : "FAIL ")) << c.name;
    if (!c.passed && c.witness) {
      oss << ": " << format_witness(*c.witness, carrier);
    }
    oss << '\n';
  }
  return oss.str();
}

} // namespace tgpd
