#ifndef KRASNER_REPORT_HPP
#define KRASNER_REPORT_HPP

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace krasner {

/// The element tuple (at most three indices) that reproduces a failure.
struct Witness {
  std::vector<int> elements;
  std::string reason;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::optional<Witness> witness;

  friend bool operator==(const AxiomResult&, const AxiomResult&) = default;
};

/// Outcome of an exhaustive axiom check, one entry per axiom in fixed order.
class AxiomReport {
 public:
  void pass(std::string axiom) {
    results_.push_back({std::move(axiom), true, std::nullopt});
  }
  void fail(std::string axiom, std::vector<int> elements, std::string reason) {
    results_.push_back(
        {std::move(axiom), false, Witness{std::move(elements), std::move(reason)}});
  }
  void add(AxiomResult result) { results_.push_back(std::move(result)); }

  bool passed() const {
    return std::all_of(results_.begin(), results_.end(),
                       [](const AxiomResult& r) { return r.passed; });
  }

  const std::vector<AxiomResult>& results() const { return results_; }

  const AxiomResult* find(const std::string& axiom) const {
    auto it = std::find_if(results_.begin(), results_.end(),
                           [&](const AxiomResult& r) { return r.axiom == axiom; });
    return it == results_.end() ? nullptr : &*it;
  }

  /// Identifiers of the failing axioms, in report order.
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& r : results_) {
      if (!r.passed) out.push_back(r.axiom);
    }
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const AxiomReport& report) {
    for (const auto& r : report.results_) {
      os << r.axiom << ' ' << (r.passed ? "pass" : "FAIL");
      if (r.witness) {
        os << " witness=(";
        for (std::size_t i = 0; i < r.witness->elements.size(); ++i) {
          if (i != 0) os << ',';
          os << r.witness->elements[i];
        }
        os << ") reason=" << r.witness->reason;
      }
      os << '\n';
    }
    return os;
  }

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;

 private:
  std::vector<AxiomResult> results_;
};

}  // namespace krasner

#endif  // KRASNER_REPORT_HPP
