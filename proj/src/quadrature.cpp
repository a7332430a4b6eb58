#include "wedgeflow/quadrature.hpp"

namespace wedgeflow::quad {

const std::array<double, 16> kGaussX = {
    -0.9894009349916499325961542, -0.9445750230732325760779884,
    -0.8656312023878317438804679, -0.7554044083550030338951012,
    -0.6178762444026437484466718, -0.4580167776572273863424194,
    -0.2816035507792589132304605, -0.0950125098376374401853193,
     0.0950125098376374401853193,  0.2816035507792589132304605,
     0.4580167776572273863424194,  0.6178762444026437484466718,
     0.7554044083550030338951012,  0.8656312023878317438804679,
     0.9445750230732325760779884,  0.9894009349916499325961542,
};

const std::array<double, 16> kGaussW = {
    0.0271524594117540948517806, 0.0622535239386478928628438,
    0.0951585116824927848099251, 0.1246289712555338720524763,
    0.1495959888165767320815017, 0.1691565193950025381893121,
    0.1826034150449235888667637, 0.1894506104550684962853967,
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806,
};

double pairwise_sum(std::span<const double> values)
{
    const std::size_t n = values.size();
    if (n <= 16) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

void append_panel_nodes(double lo, double hi, int panels,
                        std::vector<double>& nodes, std::vector<double>& weights)
{
    if (!(hi > lo) || panels < 1) return;
    const double h = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * h;
        const double mid = a + 0.5 * h;
        const double scale = 0.5 * h;
        for (int k = 0; k < kGaussNodes; ++k) {
            nodes.push_back(mid + scale * kGaussX[k]);
            weights.push_back(scale * kGaussW[k]);
        }
    }
}

double integrate(double lo, double hi, int panels,
                 const std::function<double(double)>& f)
{
    std::vector<double> nodes, weights;
    append_panel_nodes(lo, hi, panels, nodes, weights);
    std::vector<double> vals(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) vals[i] = weights[i] * f(nodes[i]);
    return pairwise_sum(vals);
}

}  // namespace wedgeflow::quad
