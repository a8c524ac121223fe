#include "copsam/array.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "copsam/error.hpp"

namespace copsam {

int64_t shape_numel(const Shape& s) {
    int64_t n = 1;
    for (int d : s) n *= d;
    return n;
}

std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ",";
        os << s[i];
    }
    os << "]";
    return os.str();
}

bool same_shape(const Shape& a, const Shape& b) { return a == b; }

Array::Array(Shape s, std::vector<double> values) : shape(std::move(s)), data(std::move(values)) {
    if (static_cast<int64_t>(data.size()) != shape_numel(shape))
        throw ArgumentError("Array: value count does not match shape " + shape_str(shape));
}

bool Array::all_finite() const {
    for (double v : data)
        if (!std::isfinite(v)) return false;
    return true;
}

double Array::min_value() const {
    double m = data.empty() ? 0.0 : data[0];
    for (double v : data) m = std::min(m, v);
    return m;
}

double Array::max_value() const {
    double m = data.empty() ? 0.0 : data[0];
    for (double v : data) m = std::max(m, v);
    return m;
}

double linf_diff(const Array& a, const Array& b) {
    if (!same_shape(a.shape, b.shape))
        throw ArgumentError("linf_diff: shape mismatch " + shape_str(a.shape) + " vs " +
                            shape_str(b.shape));
    double m = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::fabs(a.data[i] - b.data[i]));
    return m;
}

double l2_norm(const Array& a) {
    double s = 0.0;
    for (double v : a.data) s += v * v;
    return std::sqrt(s);
}

bool bitwise_equal(const Array& a, const Array& b) {
    if (!same_shape(a.shape, b.shape)) return false;
    return std::memcmp(a.data.data(), b.data.data(), a.data.size() * sizeof(double)) == 0;
}

}  // namespace copsam
