#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qhopf::acceptance {

struct SubCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int number = 0;
    std::string id;
    std::vector<SubCheck> checks;
    std::vector<std::string> diagnostics;
    double seconds = 0;

    bool passed() const;
    std::vector<const SubCheck*> failures() const;
};

// Runs criteria 1-16 in order.  The last one aggregates the others.
std::vector<Criterion> run_all(const std::function<void(const Criterion&)>& on_done = {});

} // namespace qhopf::acceptance
