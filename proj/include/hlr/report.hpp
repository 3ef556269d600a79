#pragma once

#include "hlr/rational.hpp"

#include <string>
#include <vector>

namespace hlr {

/// One failed identity: the axiom tag, the witnessing basis indices
/// (0-based internally; rendered 1-based), and both sides of the equation.
struct Finding {
    std::string tag;
    std::vector<std::size_t> where;
    Vec lhs;
    Vec rhs;
    std::string detail;
};

/// Outcome of a validator. Empty findings = valid. Notes carry assumption
/// flags and mode information, not failures.
class ValidationReport {
  public:
    bool ok() const { return findings_.empty(); }
    const std::vector<Finding>& findings() const { return findings_; }
    const std::vector<std::string>& notes() const { return notes_; }

    void add(std::string tag, std::vector<std::size_t> where, Vec lhs, Vec rhs,
             std::string detail = {});
    void add_note(std::string note);
    void merge(const ValidationReport& other);
    bool has_tag(const std::string& tag) const;

    /// Human-readable listing, 1-based indices.
    std::string to_text() const;

  private:
    std::vector<Finding> findings_;
    std::vector<std::string> notes_;
};

/// Thrown when an operation requires a valid input and validation failed.
class ValidationError : public std::runtime_error {
  public:
    ValidationError(const std::string& what, ValidationReport report)
        : std::runtime_error(what + "\n" + report.to_text()), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

  private:
    ValidationReport report_;
};

}  // namespace hlr
