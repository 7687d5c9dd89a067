// Decomposition family of the bowtie and which orientations of each member
// survive for a few bowtie orientations.

#include "dorient/dorient.hpp"

#include <iostream>

int main()
{
    using namespace dorient;
    auto family = decomposition_family(fan_graph(2, 3));
    std::cout << "bowtie family (p = " << family.p << "):";
    for (const auto& m : family.members) std::cout << " " << describe(m);
    std::cout << "\n";
    for (const char* name : {"bowtie:antidirected", "bowtie:all-in", "bowtie:in-out", "bowtie:three-in"}) {
        std::cout << name << "\n";
        for (const auto& r : directed_family(named_digraph(name))) {
            std::cout << "  " << describe(r.base) << ": " << r.member_orientations.size() << "/"
                      << r.orientation_classes << " orientation classes"
                      << (r.all_orientations_in ? " (all)" : "") << "\n";
        }
    }
}
