#pragma once

#include <string>
#include <vector>

#include "perv/rational.hpp"

namespace perv {

// Integer partition nu_1 >= nu_2 >= ... >= nu_l > 0.
struct Partition {
    std::vector<int> parts;

    int n() const;
    int length() const { return static_cast<int>(parts.size()); }

    // multiplicities()[i] = number of parts equal to i, for 1 <= i <= n.
    // Index 0 is unused.
    std::vector<int> multiplicities() const;

    std::string str() const; // "[2,1]"
};

bool operator==(const Partition& a, const Partition& b);
bool operator!=(const Partition& a, const Partition& b);

// All partitions of n in reverse-lexicographic order: (n) first, (1,...,1) last.
std::vector<Partition> partitions_of(int n);

} // namespace perv
