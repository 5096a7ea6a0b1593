#include "qhopf/report.hpp"

#include <algorithm>
#include <sstream>

namespace qhopf {

void VerificationReport::pass(const std::string& id, const std::string& anchor, const std::string& note) {
    CheckResult r;
    r.id = id;
    r.anchor = anchor;
    r.note = note;
    entries_.push_back(std::move(r));
}

void VerificationReport::fail(const std::string& id, const std::string& anchor, Witness w, const std::string& note) {
    CheckResult r;
    r.id = id;
    r.anchor = anchor;
    r.passed = false;
    r.note = note;
    r.witnesses.push_back(std::move(w));
    entries_.push_back(std::move(r));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
    for (CheckResult r : other.entries_) {
        if (!prefix.empty()) r.id = prefix + "." + r.id;
        entries_.push_back(std::move(r));
    }
    for (const auto& n : other.notes_) notes_.push_back(n);
}

bool VerificationReport::all_passed() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const CheckResult& r) { return r.passed; });
}

const CheckResult* VerificationReport::find(const std::string& id) const {
    for (const auto& r : entries_)
        if (r.id == id) return &r;
    return nullptr;
}

std::vector<std::string> VerificationReport::failed_ids() const {
    std::vector<std::string> out;
    for (const auto& r : entries_)
        if (!r.passed) out.push_back(r.id);
    return out;
}

namespace {

std::vector<const CheckResult*> sorted(const std::vector<CheckResult>& e) {
    std::vector<const CheckResult*> v;
    for (const auto& r : e) v.push_back(&r);
    std::stable_sort(v.begin(), v.end(), [](const CheckResult* a, const CheckResult* b) { return a->id < b->id; });
    return v;
}

std::string witness_str(const Witness& w) {
    std::ostringstream os;
    os << "basis=";
    for (std::size_t i = 0; i < w.basis.size(); ++i) os << (i ? "," : "") << w.basis[i];
    if (!w.lhs.empty() || !w.rhs.empty()) os << " lhs=" << w.lhs << " rhs=" << w.rhs;
    return os.str();
}

} // namespace

std::string VerificationReport::text() const {
    std::ostringstream os;
    for (const auto* r : sorted(entries_)) {
        os << (r->passed ? "[PASS] " : "[FAIL] ") << r->id << "  " << r->anchor;
        if (!r->note.empty()) os << "  (" << r->note << ")";
        os << "\n";
        for (const auto& w : r->witnesses) os << "       " << witness_str(w) << "\n";
    }
    for (const auto& n : notes_) os << "note: " << n << "\n";
    return os.str();
}

std::string VerificationReport::machine() const {
    std::ostringstream os;
    for (const auto* r : sorted(entries_)) {
        os << "CHECK " << r->id << " " << (r->passed ? "PASS" : "FAIL");
        if (!r->witnesses.empty()) os << " " << witness_str(r->witnesses.front());
        os << "\n";
    }
    return os.str();
}

} // namespace qhopf
