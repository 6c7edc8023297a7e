#pragma once

#include <string>
#include <vector>

namespace catnerve {

enum class Verdict { pass, fail, inconclusive };

inline char const* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

/// Outcome of an exhaustive check. `notes` carries the first violation (for
/// failures) or informational lines; checks never throw on a plain failure.
struct Report {
  Report() = default;
  explicit Report(std::string name) : check(std::move(name)) {}

  std::string check;
  Verdict verdict = Verdict::pass;
  std::vector<std::string> notes;

  bool ok() const noexcept { return verdict == Verdict::pass; }
  explicit operator bool() const noexcept { return ok(); }

  void fail(std::string msg) {
    verdict = Verdict::fail;
    notes.push_back(std::move(msg));
  }
  void inconclusive(std::string msg) {
    if (verdict == Verdict::pass) {
      verdict = Verdict::inconclusive;
    }
    notes.push_back(std::move(msg));
  }
  void note(std::string msg) { notes.push_back(std::move(msg)); }

  /// Folds another report in; failure dominates inconclusive dominates pass.
  void merge(Report const& other) {
    if (other.verdict == Verdict::fail) {
      verdict = Verdict::fail;
    } else if (other.verdict == Verdict::inconclusive && verdict == Verdict::pass) {
      verdict = Verdict::inconclusive;
    }
    for (auto const& n : other.notes) {
      notes.push_back(other.check.empty() ? n : other.check + ": " + n);
    }
  }
};

}  // namespace catnerve
