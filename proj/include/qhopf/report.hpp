#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qhopf {

struct Witness {
    std::vector<int> basis;   // basis index tuple where the identity failed
    std::string lhs, rhs;
};

struct CheckResult {
    std::string id;
    std::string anchor;       // the identity being checked, in formula form
    bool passed = true;
    std::vector<Witness> witnesses;   // empty iff passed
    std::string note;
};

class VerificationReport {
public:
    void pass(const std::string& id, const std::string& anchor, const std::string& note = "");
    void fail(const std::string& id, const std::string& anchor, Witness w, const std::string& note = "");
    void add(CheckResult r) { entries_.push_back(std::move(r)); }
    // Adds every entry of `other`, prefixing ids with `prefix.` when given.
    void merge(const VerificationReport& other, const std::string& prefix = "");
    void note(const std::string& text) { notes_.push_back(text); }

    bool all_passed() const;
    const std::vector<CheckResult>& entries() const { return entries_; }
    const std::vector<std::string>& notes() const { return notes_; }
    const CheckResult* find(const std::string& id) const;
    std::vector<std::string> failed_ids() const;

    // Lines sorted by check id.
    std::string text() const;
    std::string machine() const;

private:
    std::vector<CheckResult> entries_;
    std::vector<std::string> notes_;
};

// Collects witnesses for one check: keeps the first, or all when exhaustive.
class CheckScope {
public:
    CheckScope(VerificationReport& r, std::string id, std::string anchor, bool exhaustive = false)
        : r_(r), exhaustive_(exhaustive) {
        res_.id = std::move(id);
        res_.anchor = std::move(anchor);
    }
    CheckScope(const CheckScope&) = delete;
    CheckScope& operator=(const CheckScope&) = delete;
    ~CheckScope() { r_.add(std::move(res_)); }

    // Returns true when the caller should stop looking for more witnesses.
    bool fail(Witness w) {
        res_.passed = false;
        res_.witnesses.push_back(std::move(w));
        return !exhaustive_;
    }
    bool failed() const { return !res_.passed; }
    void set_note(const std::string& s) { res_.note = s; }

private:
    VerificationReport& r_;
    CheckResult res_;
    bool exhaustive_;
};

} // namespace qhopf
