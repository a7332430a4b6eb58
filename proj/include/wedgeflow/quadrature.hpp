#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace wedgeflow::quad {

// 16-node Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
// up to 31. All composite rules in this library are built from it.
inline constexpr int kGaussNodes = 16;
extern const std::array<double, 16> kGaussX;
extern const std::array<double, 16> kGaussW;

/// Deterministic pairwise reduction; the summation tree depends only on the
/// element count, never on execution order or backend.
double pairwise_sum(std::span<const double> values);

/// Appends the mapped nodes and weights of a composite 16-node rule over
/// [lo, hi] with `panels` equal panels.
void append_panel_nodes(double lo, double hi, int panels,
                        std::vector<double>& nodes, std::vector<double>& weights);

/// Composite Gauss-Legendre integral of f over [lo, hi].
double integrate(double lo, double hi, int panels,
                 const std::function<double(double)>& f);

}  // namespace wedgeflow::quad
