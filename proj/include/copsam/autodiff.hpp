#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "copsam/array.hpp"

namespace copsam {

class Var;

// One node of the dynamically built computation graph. Gradients are
// accumulated into `grad` during the reverse pass; `backfn` pulls from this
// node's grad and pushes into the parents' grads.
struct Node {
    Array val;
    Array grad;
    bool requires_grad = false;
    bool grad_touched = false;
    std::vector<Var> parents;
    std::function<void(Node&)> backfn;
    uint64_t id = 0;
};

// Value-semantic handle to a graph node. Copies share the node.
class Var {
public:
    Var() = default;

    static Var leaf(Array value, bool requires_grad = false);

    bool defined() const { return n_ != nullptr; }
    const Array& val() const { return n_->val; }
    Array& val() { return n_->val; }
    const Shape& shape() const { return n_->val.shape; }
    double scalar() const;

    bool requires_grad() const { return n_ && n_->requires_grad; }
    void set_requires_grad(bool rg) { n_->requires_grad = rg; }

    // Gradient buffer, zero-allocated on first use.
    Array& grad();
    bool has_grad() const { return n_ && n_->grad_touched; }
    void zero_grad();

    Node* node() const { return n_.get(); }

private:
    std::shared_ptr<Node> n_;
    friend Var make_node(Array val, std::vector<Var> parents, std::function<void(Node&)> backfn);
};

Var make_node(Array val, std::vector<Var> parents, std::function<void(Node&)> backfn);

// Reverse pass from a scalar root. Accumulates into every reachable
// requires_grad leaf; call zero_grad on leaves between passes.
void backward(const Var& root);

// ---- elementwise / reductions ----
Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);
Var vdiv(const Var& a, const Var& b);
Var scale(const Var& a, double k);
Var add_scalar(const Var& a, double k);
Var vsum(const Var& a);             // -> shape {1}
Var vsqrt(const Var& a);
Var silu(const Var& a);
Var sigmoid(const Var& a);

// ---- shape / indexing ----
Var reshape(const Var& a, Shape s);
Var transpose(const Var& a);        // 2-D
Var concat_cols(const Var& a, const Var& b);      // [m,n1]+[m,n2] -> [m,n1+n2]
Var concat_channels(const Var& a, const Var& b);  // [c1,h,w]+[c2,h,w] -> [c1+c2,h,w]
Var slice_col(const Var& a, int col);             // [m,n] -> [m]
Var embedding_rows(const Var& table, const std::vector<int>& ids);  // [v,d] -> [n,d]

// ---- linear algebra ----
Var matmul(const Var& a, const Var& b);           // [m,k]x[k,n]
Var softmax_rows(const Var& a);                   // row-wise, numerically stable
Var add_row_bias(const Var& a, const Var& bias);  // [m,n] + [n]

// ---- spatial ----
Var conv2d(const Var& x, const Var& w, const Var& bias, int stride, int pad);
Var add_channel_bias(const Var& x, const Var& bias);     // [c,h,w] + [c]
Var mul_channel(const Var& x, const Var& s);             // [c,h,w] * [c]
Var upsample_nearest2(const Var& x);                     // [c,h,w] -> [c,2h,2w]
Var upsample_bilinear(const Var& x, int oh, int ow);     // [c,h,w] -> [c,oh,ow]

// ---- composites ----
inline Var dot(const Var& a, const Var& b) { return vsum(mul(a, b)); }
inline Var sq_norm(const Var& a) { return vsum(mul(a, a)); }
inline Var linear(const Var& x, const Var& w, const Var& b) {
    return add_row_bias(matmul(x, w), b);
}

}  // namespace copsam
