// Prints the mutation class size of every finite-type diagram up to rank 8.
// The numbers feed the frozen regression constants in the test suite.

#include <cstdio>

#include "cdiag/dynkin.hpp"
#include "cdiag/explore.hpp"

int main() {
    struct Range {
        char family;
        int lo, hi;
    };
    for (const Range& r : {Range{'A', 1, 8}, Range{'B', 2, 8}, Range{'D', 4, 8},
                           Range{'E', 6, 8}, Range{'F', 4, 4}, Range{'G', 2, 2}}) {
        for (int rank = r.lo; rank <= r.hi; ++rank) {
            cdiag::ClassSummary s = cdiag::enumerate_class(cdiag::dynkin(r.family, rank));
            std::printf("%c%d: %zu\n", r.family, rank, s.size());
        }
    }
    return 0;
}
