#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sgr {

// Either a finite group given by its table (elements 0..n-1) or the integer
// window -N..N with partial addition.
class GroupModel {
public:
    static GroupModel integer_window(int bound);
    static GroupModel finite(std::vector<std::vector<int>> table, std::vector<std::string> names = {});
    static GroupModel cyclic(int n);

    bool is_window() const { return window_; }
    int bound() const { return bound_; }
    int order() const { return static_cast<int>(elements_.size()); }

    const std::vector<int>& elements() const { return elements_; }
    int identity() const { return identity_; }
    bool contains(int g) const;
    std::optional<int> mul(int g, int h) const;
    int mul_or_throw(int g, int h) const;
    int inv(int g) const;
    std::string name(int g) const;
    int parse(const std::string& name) const;
    const std::vector<std::vector<int>>& table() const { return table_; }

    friend bool operator==(const GroupModel& a, const GroupModel& b) {
        return a.window_ == b.window_ && a.bound_ == b.bound_ && a.table_ == b.table_;
    }

private:
    bool window_ = true;
    int bound_ = 0;
    int identity_ = 0;
    std::vector<int> elements_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<std::string> names_;
};

}  // namespace sgr
