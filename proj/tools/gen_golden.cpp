// Regenerates the checked-in catalog files.  Usage:
//   gen_golden [OUT_DIR] [BASE...]
// Defaults: OUT_DIR=data, bases 6 7 8 (base 8 takes ~half a minute).

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cdiag/catalog.hpp"

int main(int argc, char** argv) {
    std::string out_dir = argc > 1 ? argv[1] : "data";
    std::vector<int> bases;
    for (int i = 2; i < argc; ++i) bases.push_back(std::atoi(argv[i]));
    if (bases.empty()) bases = {6, 7, 8};

    for (int base : bases) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<cdiag::CatalogEntry> entries = cdiag::generate_exceptional(base);
        std::string path = out_dir + "/catalog-base" + std::to_string(base) + ".txt";
        cdiag::save_catalog(entries, path);
        auto t1 = std::chrono::steady_clock::now();
        std::printf("%s: %zu entries, %zu skeleton groups (%.1fs)\n", path.c_str(), entries.size(),
                    cdiag::skeleton_group_count(entries),
                    std::chrono::duration<double>(t1 - t0).count());
    }
    return 0;
}
