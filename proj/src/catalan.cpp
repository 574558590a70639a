#include "dycklab/catalan.hpp"

namespace dycklab {

QtPoly brute_force_catalan(int n, int cap) {
    if (n < 1) throw std::domain_error("brute_force_catalan requires n >= 1");
    if (n > cap)
        throw ResourceLimitError("brute_force_catalan: n=" + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
    QtPoly poly;
    for_each_dyck(n, [&](const IntSeq& s) {
        poly.add_term(static_cast<int>(area(s)), static_cast<int>(dinv(s)), 1);
    });
    return poly;
}

}  // namespace dycklab
