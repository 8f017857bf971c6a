#ifndef CODATA_REPORT_HPP
#define CODATA_REPORT_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace codata {

enum class LawStatus { Pass, Fail, Vacuous };

inline const char* to_string(LawStatus s) {
    switch (s) {
        case LawStatus::Pass: return "pass";
        case LawStatus::Fail: return "fail";
        case LawStatus::Vacuous: return "vacuous";
    }
    return "?";
}

struct LawEntry {
    std::string law_id;
    std::string instance_id;
    LawStatus status = LawStatus::Vacuous;
    int depth = 0;
    int samples = 0;
    nlohmann::json counterexample;  // null unless status == Fail
};

/// Outcome of a batch of depth-bounded, sample-based law checks.
struct LawReport {
    std::vector<LawEntry> entries;

    void add(LawEntry e) { entries.push_back(std::move(e)); }

    void merge(const LawReport& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }

    int count(LawStatus s) const {
        return static_cast<int>(
            std::count_if(entries.begin(), entries.end(),
                          [&](const LawEntry& e) { return e.status == s; }));
    }

    bool all_pass() const { return count(LawStatus::Fail) == 0; }

    /// Stable order regardless of execution order.
    void sort() {
        std::stable_sort(entries.begin(), entries.end(),
                         [](const LawEntry& a, const LawEntry& b) {
                             if (a.law_id != b.law_id) return a.law_id < b.law_id;
                             return a.instance_id < b.instance_id;
                         });
    }

    nlohmann::json to_json() const {
        nlohmann::json out;
        out["entries"] = nlohmann::json::array();
        for (const auto& e : entries) {
            nlohmann::json j;
            j["law_id"] = e.law_id;
            j["instance_id"] = e.instance_id;
            j["status"] = to_string(e.status);
            j["depth"] = e.depth;
            j["samples"] = e.samples;
            j["counterexample"] = e.counterexample;
            out["entries"].push_back(std::move(j));
        }
        out["summary"] = {{"pass", count(LawStatus::Pass)},
                          {"fail", count(LawStatus::Fail)},
                          {"vacuous", count(LawStatus::Vacuous)}};
        return out;
    }
};

/// Single-law helper: builds the entry from the first recorded violation.
class LawCheck {
public:
    LawCheck(std::string law_id, std::string instance_id, int depth)
        : entry_{std::move(law_id), std::move(instance_id), LawStatus::Vacuous, depth, 0, nullptr} {}

    void sample(bool ok, const std::function<nlohmann::json()>& describe) {
        ++entry_.samples;
        if (entry_.status == LawStatus::Vacuous) entry_.status = LawStatus::Pass;
        if (!ok && entry_.status != LawStatus::Fail) {
            entry_.status = LawStatus::Fail;
            entry_.counterexample = describe();
            entry_.counterexample["sample_index"] = entry_.samples - 1;
        }
    }

    LawEntry finish() const { return entry_; }

private:
    LawEntry entry_;
};

}  // namespace codata

#endif
