#pragma once

#include <string>
#include <vector>

#include "sgr/errors.hpp"

namespace sgr {

struct CheckResult {
    std::string tag;
    bool pass = true;
    std::string detail;
};

// Ordered list of identity checks. Failures keep their witness text.
class Report {
public:
    void add(std::string tag, bool pass, std::string detail = {}) {
        checks_.push_back({std::move(tag), pass, std::move(detail)});
    }
    void merge(const Report& other, const std::string& prefix = {}) {
        for (const auto& c : other.checks_) checks_.push_back({prefix + c.tag, c.pass, c.detail});
    }
    bool ok() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks_)
            if (!c.pass) return &c;
        return nullptr;
    }
    std::size_t size() const { return checks_.size(); }
    const std::vector<CheckResult>& checks() const { return checks_; }

    // Throws MathError(error_tag) carrying the first failing check.
    void require(const std::string& error_tag) const {
        if (auto* f = first_failure()) throw MathError(error_tag, f->tag + " " + f->detail);
    }

private:
    std::vector<CheckResult> checks_;
};

}  // namespace sgr
