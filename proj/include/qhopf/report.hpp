#pragma once

#include <string>
#include <vector>

namespace qhopf {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness;  // counterexample description on failure, or a note
};

struct Report {
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, std::string witness = "") {
        items.push_back({std::move(name), pass, std::move(witness)});
    }
    void merge(const Report& o, const std::string& prefix = "") {
        for (const auto& it : o.items) items.push_back({prefix + it.name, it.pass, it.witness});
    }
    bool ok() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    std::string summary() const {
        std::string s;
        for (const auto& it : items) {
            s += (it.pass ? "PASS  " : "FAIL  ") + it.name;
            if (!it.witness.empty()) s += "  [" + it.witness + "]";
            s += "\n";
        }
        return s;
    }
};

}  // namespace qhopf
