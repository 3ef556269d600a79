#include "hlr/report.hpp"

#include <sstream>

namespace hlr {

void ValidationReport::add(std::string tag, std::vector<std::size_t> where, Vec lhs, Vec rhs,
                           std::string detail) {
    findings_.push_back(
        {std::move(tag), std::move(where), std::move(lhs), std::move(rhs), std::move(detail)});
}

void ValidationReport::add_note(std::string note) {
    for (const auto& n : notes_)
        if (n == note) return;
    notes_.push_back(std::move(note));
}

void ValidationReport::merge(const ValidationReport& other) {
    for (const auto& f : other.findings_) findings_.push_back(f);
    for (const auto& n : other.notes_) add_note(n);
}

bool ValidationReport::has_tag(const std::string& tag) const {
    for (const auto& f : findings_)
        if (f.tag == tag) return true;
    return false;
}

std::string ValidationReport::to_text() const {
    std::ostringstream os;
    for (const auto& n : notes_) os << "note: " << n << "\n";
    if (findings_.empty()) {
        os << "valid (no axiom failures)\n";
        return os.str();
    }
    for (const auto& f : findings_) {
        os << "[" << f.tag << "] witness (";
        for (std::size_t i = 0; i < f.where.size(); ++i) {
            if (i) os << ", ";
            os << (f.where[i] + 1);
        }
        os << ")";
        if (!f.detail.empty()) os << " " << f.detail;
        os << ": lhs=" << vec_to_string(f.lhs) << " rhs=" << vec_to_string(f.rhs) << "\n";
    }
    return os.str();
}

}  // namespace hlr
