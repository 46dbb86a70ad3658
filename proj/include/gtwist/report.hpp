#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace gtwist {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;  // witness on failure, optional note on success
};

// Ordered list of named pass/fail checks; rendering is deterministic.
struct Report {
    std::string title;
    std::vector<CheckItem> items;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        items.push_back({name, pass, detail});
    }

    bool pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream os;
        if (!title.empty()) os << "[" << title << "]\n";
        for (const auto& it : items) {
            os << it.name << ": " << (it.pass ? "PASS" : "FAIL");
            if (!it.detail.empty()) os << " (" << it.detail << ")";
            os << "\n";
        }
        os << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
        return os.str();
    }
};

}  // namespace gtwist
