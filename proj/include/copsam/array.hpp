#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace copsam {

using Shape = std::vector<int>;

int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);
bool same_shape(const Shape& a, const Shape& b);

// Dense row-major double tensor. Plain storage, no autodiff.
struct Array {
    Shape shape;
    std::vector<double> data;

    Array() = default;
    explicit Array(Shape s) : shape(std::move(s)), data(shape_numel(shape), 0.0) {}
    Array(Shape s, double fill) : shape(std::move(s)), data(shape_numel(shape), fill) {}
    Array(Shape s, std::vector<double> values);

    static Array zeros(Shape s) { return Array(std::move(s)); }
    static Array full(Shape s, double v) { return Array(std::move(s), v); }
    static Array scalar(double v) { return Array(Shape{1}, std::vector<double>{v}); }

    int64_t size() const { return static_cast<int64_t>(data.size()); }
    int ndim() const { return static_cast<int>(shape.size()); }
    int dim(int i) const { return shape[static_cast<size_t>(i)]; }

    double& operator[](int64_t i) { return data[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return data[static_cast<size_t>(i)]; }

    // 2-D [rows, cols]
    double& at2(int r, int c) { return data[static_cast<size_t>(r) * dim(1) + c]; }
    double at2(int r, int c) const { return data[static_cast<size_t>(r) * dim(1) + c]; }
    // 3-D [ch, y, x]
    double& at3(int ch, int y, int x) {
        return data[(static_cast<size_t>(ch) * dim(1) + y) * dim(2) + x];
    }
    double at3(int ch, int y, int x) const {
        return data[(static_cast<size_t>(ch) * dim(1) + y) * dim(2) + x];
    }
    // 4-D [o, c, y, x]
    double& at4(int o, int c, int y, int x) {
        return data[((static_cast<size_t>(o) * dim(1) + c) * static_cast<size_t>(dim(2)) + y) *
                        dim(3) +
                    x];
    }
    double at4(int o, int c, int y, int x) const {
        return data[((static_cast<size_t>(o) * dim(1) + c) * static_cast<size_t>(dim(2)) + y) *
                        dim(3) +
                    x];
    }

    bool all_finite() const;
    double min_value() const;
    double max_value() const;
};

// Elementwise helpers on plain arrays (no graph involved).
double linf_diff(const Array& a, const Array& b);
double l2_norm(const Array& a);
bool bitwise_equal(const Array& a, const Array& b);

}  // namespace copsam
