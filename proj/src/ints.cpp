#include "mono/ints.hpp"

namespace mono {

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int num = 1;
    Int den = 1;
    for (Int i = 0; i < kk; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

Int factorial(unsigned k) {
    Int f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

Int ipow(const Int& m, unsigned e) {
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r *= m;
    return r;
}

} // namespace mono
