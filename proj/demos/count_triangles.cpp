// Counts cyclic-triangle-free orientations of small complete graphs and
// compares the exact value with a Monte Carlo estimate.

#include "dorient/dorient.hpp"

#include <iostream>

int main()
{
    using namespace dorient;
    for (int n = 3; n <= 7; ++n) {
        Graph k = complete_graph(n);
        auto exact = count_hfree(k, cyclic_triangle());
        auto mc = mc_estimate(k, cyclic_triangle(), 20000, 42);
        std::cout << "K" << n << ": " << to_string(exact.hfree) << " of " << to_string(exact.total)
                  << " orientations avoid the cyclic triangle; P(contains) = " << to_fraction_string(exact.p_contains)
                  << ", sampled " << to_decimal_string(mc.estimate, 4) << "\n";
    }
}
