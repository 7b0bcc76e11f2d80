#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spts/tensor.hpp"

namespace spts {

/// Learnable tensor with externally owned gradient accumulation. Graphs add
/// into `grad`; the optimizer (or caller) zeroes it between steps.
template <typename T>
struct Parameter {
  std::string name;
  Tensor<T> value;
  Tensor<T> grad;

  Parameter() = default;
  Parameter(std::string n, Tensor<T> val)
      : name(std::move(n)), value(std::move(val)), grad(Tensor<T>::zeros(value.shape)) {}

  void zero_grad() { std::fill(grad.v.begin(), grad.v.end(), T{0}); }
};

/// Reverse-mode tape over dense arrays. Every op records its output and a
/// backward closure; backward() replays the tape once in reverse execution
/// order. Single-threaded by design: identical inputs give identical bits.
template <typename T>
class Graph {
 public:
  struct Var {
    int id = -1;
  };

  explicit Graph(bool check_finite = false) : check_finite_(check_finite) {}
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;

  /// Constant leaf (no gradient).
  Var input(Tensor<T> value);
  /// Differentiable leaf bound to external parameter storage. Repeated calls
  /// with the same parameter return the same node, so weight sharing is
  /// literal storage identity.
  Var param(Parameter<T>& p);

  Var matmul(Var a, Var b);
  /// Batched matmul over equal leading batch dims: (B,m,k) x (B,k,n).
  Var bmm(Var a, Var b);
  /// Repeat a batched tensor: (g,m,n) -> (times*g,m,n), out[c*g+j] = x[j].
  Var tile_batch(Var x, int times);
  Var add(Var a, Var b);
  /// b's shape must be a suffix of x's shape; broadcasts over leading dims.
  Var add_broadcast(Var x, Var b);
  Var mul(Var a, Var b);
  Var scale(Var x, T c);
  Var permute(Var x, std::vector<int> perm);
  Var reshape(Var x, std::vector<int> shape);
  Var concat(const std::vector<Var>& xs, int axis);
  Var slice(Var x, int axis, int start, int len);
  /// Softmax over the last axis.
  Var softmax(Var x);
  /// Layer norm over the last axis; gamma/beta are 1-D of that extent.
  Var layer_norm(Var x, Var gamma, Var beta, T eps = T(1e-5));
  Var relu(Var x);
  /// Row gather: table (R,d), ids in [0,R) -> (ids.size(),d).
  Var embedding_lookup(Var table, const std::vector<int>& ids);
  /// x (Cin,H,W), w (Cout,Cin,kh,kw), b (Cout).
  Var conv2d(Var x, Var w, Var b, int stride, int pad);
  Var mean_pool2d(Var x, int k, int stride);
  Var max_pool2d(Var x, int k, int stride);
  /// Weighted sum over positions of next-token negative log likelihood.
  /// logits (P,V); targets and weights have length P. Returns a scalar.
  Var cross_entropy(Var logits, const std::vector<int>& targets, const std::vector<T>& weights);
  Var sum(Var x);

  const Tensor<T>& value(Var v) const { return *nodes_[v.id].value; }
  /// Gradient of a node after backward(); nullptr if the node was not on the
  /// path from the loss (or backward has not run).
  const Tensor<T>* grad(Var v) const;

  /// Reverse pass from a scalar loss. Accumulates into Parameter::grad for
  /// every reachable parameter. One backward per graph.
  void backward(Var loss);

  size_t size() const { return nodes_.size(); }
  bool check_finite() const { return check_finite_; }

 private:
  struct Node {
    Tensor<T> value_storage;
    const Tensor<T>* value = nullptr;
    Tensor<T> grad_storage;
    Tensor<T>* grad = nullptr;  // null until touched by backward
    bool needs_grad = false;
    std::function<void(Graph&)> backward_fn;
  };

  Var make_node(Tensor<T> value, const std::vector<Var>& parents,
                std::function<void(Graph&)> backward_fn);
  Tensor<T>& acc_grad(int id);  // allocate-on-write gradient buffer
  const Tensor<T>& val(int id) const { return *nodes_[id].value; }
  void check_value(const Tensor<T>& t, const char* op) const;

  std::vector<Node> nodes_;
  std::unordered_map<const Parameter<T>*, int> param_nodes_;
  bool check_finite_ = false;
  bool backward_done_ = false;
};

using GraphF = Graph<float>;
using GraphD = Graph<double>;

}  // namespace spts
