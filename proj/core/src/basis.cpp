#include "sv/basis.hpp"

namespace sv {

std::string to_string(const BasisIndex& b) {
    switch (b.fam) {
        case Family::L: return "L[" + std::to_string(b.idx) + "]";
        case Family::M: return "M[" + std::to_string(b.idx) + "]";
        case Family::Y: return "Y[" + std::to_string(b.idx) + "]";
        case Family::C: return "c";
    }
    return "?";
}

std::vector<BasisIndex> basis_in_window(const Window& w) {
    std::vector<BasisIndex> out;
    for (long long n = -w.l_bound(); n <= w.l_bound(); ++n) out.push_back(BasisIndex::L(n));
    for (long long n = -w.l_bound(); n <= w.l_bound(); ++n) out.push_back(BasisIndex::M(n));
    for (long long y = -w.bound; y <= w.bound; ++y)
        if (y % 2 != 0) out.push_back(BasisIndex::Y(y));
    out.push_back(BasisIndex::C());
    return out;
}

} // namespace sv
