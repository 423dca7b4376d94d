// Check reporting shared by the validators: a named list of pass/fail items
// with witnesses for the failures.
#pragma once

#include <string>
#include <vector>

namespace cat2alg {

struct CheckItem {
    std::string name;
    bool passed = true;
    std::string witness; // empty when passed
};

struct CheckReport {
    std::vector<CheckItem> items;

    void add(std::string name, bool passed, std::string witness = "") {
        items.push_back({std::move(name), passed, std::move(witness)});
    }

    void merge(const CheckReport& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }

    bool all_passed() const {
        for (const CheckItem& it : items)
            if (!it.passed) return false;
        return true;
    }
};

} // namespace cat2alg
