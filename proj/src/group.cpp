#include "sgr/group.hpp"

#include <cstdlib>

#include "sgr/errors.hpp"

namespace sgr {

GroupModel GroupModel::integer_window(int bound) {
    if (bound < 1) throw InputError("BadWindow", "window bound must be >= 1");
    GroupModel g;
    g.window_ = true;
    g.bound_ = bound;
    g.identity_ = 0;
    for (int n = -bound; n <= bound; ++n) g.elements_.push_back(n);
    return g;
}

GroupModel GroupModel::finite(std::vector<std::vector<int>> table, std::vector<std::string> names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw InputError("BadGroup", "empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw InputError("BadGroup", "table not square");
        for (int x : row)
            if (x < 0 || x >= n) throw InputError("BadGroup", "table entry out of range");
    }
    auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n; ++b) ok = ok && at(a, b) == b && at(b, a) == b;
        if (ok) e = a;
    }
    if (e < 0) throw InputError("BadGroup", "no two-sided identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c))) throw InputError("BadGroup", "table not associative");
    GroupModel g;
    g.window_ = false;
    g.identity_ = e;
    g.inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (at(a, b) == e && at(b, a) == e) g.inverse_[static_cast<std::size_t>(a)] = b;
        if (g.inverse_[static_cast<std::size_t>(a)] < 0) throw InputError("BadGroup", "element without inverse");
        g.elements_.push_back(a);
    }
    g.table_ = std::move(table);
    if (!names.empty() && static_cast<int>(names.size()) != n) throw InputError("BadGroup", "name count");
    g.names_ = std::move(names);
    return g;
}

GroupModel GroupModel::cyclic(int n) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return finite(std::move(t));
}

bool GroupModel::contains(int g) const {
    return window_ ? std::abs(g) <= bound_ : (g >= 0 && g < order());
}

std::optional<int> GroupModel::mul(int g, int h) const {
    if (!contains(g) || !contains(h)) return std::nullopt;
    if (window_) {
        int s = g + h;
        if (std::abs(s) > bound_) return std::nullopt;
        return s;
    }
    return table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
}

int GroupModel::mul_or_throw(int g, int h) const {
    auto p = mul(g, h);
    if (!p) throw OutOfWindow("product " + name(g) + "*" + name(h) + " leaves the group model");
    return *p;
}

int GroupModel::inv(int g) const {
    if (!contains(g)) throw OutOfWindow("element " + std::to_string(g));
    return window_ ? -g : inverse_[static_cast<std::size_t>(g)];
}

std::string GroupModel::name(int g) const {
    if (!window_ && !names_.empty() && contains(g)) return names_[static_cast<std::size_t>(g)];
    return std::to_string(g);
}

int GroupModel::parse(const std::string& s) const {
    for (int g : elements_)
        if (name(g) == s) return g;
    throw InputError("UnknownGroupElement", s);
}

}  // namespace sgr
