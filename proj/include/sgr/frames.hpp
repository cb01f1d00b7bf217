#pragma once

#include <map>
#include <string>

#include "sgr/group.hpp"
#include "sgr/matrix.hpp"

namespace sgr {

// Column pair (x, y) of size n for degree g: entries of x lie in S_g,
// entries of y in S_{g^-1}, and y^t x = 1.
template <GradedRing S>
struct FrameColumn {
    int degree = 0;
    Mat<typename S::Element> x;
    Mat<typename S::Element> y;

    std::size_t size() const { return x.rows; }
};

template <GradedRing S>
struct FrameSystem {
    GroupModel group = GroupModel::integer_window(1);
    std::map<int, FrameColumn<S>> cols;

    const FrameColumn<S>& at(int g) const {
        auto it = cols.find(g);
        if (it == cols.end()) throw OutOfWindow("no frame for degree " + group.name(g));
        return it->second;
    }
};

template <GradedRing S>
bool homogeneous_of(const S& s, const typename S::Element& a, int g) {
    auto parts = s.homogeneous_parts(a);
    return parts.empty() || (parts.size() == 1 && parts.begin()->first == g);
}

// Throws MathError("FrameInvalid") unless the column is a valid frame.
template <GradedRing S>
void check_frame(const S& s, const GroupModel& group, const FrameColumn<S>& f) {
    const std::string where = "degree " + group.name(f.degree);
    if (f.x.cols != 1 || f.y.cols != 1 || f.x.rows != f.y.rows || f.x.rows == 0)
        throw MathError("FrameInvalid", where + ": x and y must be columns of equal size");
    const int ginv = group.inv(f.degree);
    for (const auto& e : f.x.a)
        if (!homogeneous_of(s, e, f.degree))
            throw MathError("FrameInvalid", where + ": x entry not homogeneous: " + s.show(e));
    for (const auto& e : f.y.a)
        if (!homogeneous_of(s, e, ginv))
            throw MathError("FrameInvalid", where + ": y entry not homogeneous: " + s.show(e));
    auto p = mat::mul(s, mat::transpose(f.y), f.x);
    if (!(p(0, 0) == s.one()))
        throw MathError("FrameInvalid", where + ": y^t x = " + s.show(p(0, 0)));
}

template <GradedRing S>
void check_frames(const S& s, const FrameSystem<S>& fr) {
    for (const auto& [g, col] : fr.cols) {
        if (col.degree != g) throw MathError("FrameInvalid", "degree label mismatch");
        check_frame(s, fr.group, col);
    }
    const auto& e = fr.at(fr.group.identity());
    if (e.size() != 1 || !(e.x(0, 0) == s.one()) || !(e.y(0, 0) == s.one()))
        throw MathError("FrameInvalid", "identity frame must be x_e = y_e = 1");
}

}  // namespace sgr
