#include "perv/partition.hpp"

#include <numeric>

#include "perv/errors.hpp"

namespace perv {

int Partition::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> a(static_cast<std::size_t>(n()) + 1, 0);
    for (int p : parts)
        ++a[static_cast<std::size_t>(p)];
    return a;
}

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts[i]);
    }
    s += ']';
    return s;
}

bool operator==(const Partition& a, const Partition& b) {
    return a.parts == b.parts;
}

bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
}

std::vector<Partition> partitions_of(int n) {
    if (n < 1)
        throw Error(ErrorKind::BadInvocation, "partitions_of requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> parts{n};
    for (;;) {
        out.push_back(Partition{parts});
        // rightmost part larger than 1
        int idx = static_cast<int>(parts.size()) - 1;
        while (idx >= 0 && parts[static_cast<std::size_t>(idx)] == 1)
            --idx;
        if (idx < 0)
            break;
        int rem = static_cast<int>(parts.size()) - idx; // the removed 1s plus one
        int x = parts[static_cast<std::size_t>(idx)] - 1;
        parts.resize(static_cast<std::size_t>(idx));
        parts.push_back(x);
        while (rem > x) {
            parts.push_back(x);
            rem -= x;
        }
        if (rem > 0)
            parts.push_back(rem);
    }
    return out;
}

} // namespace perv
