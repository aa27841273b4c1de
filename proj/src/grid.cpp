#include "strata/grid.hpp"

#include <string>

namespace strata {

Grid::Grid(int nx_, int ny_, int nz_) : nx(nx_), ny(ny_), nz(nz_) {
    auto check = [](int n, const char* name) {
        if (n < 4 || n % 2 != 0)
            throw InvalidInput(std::string("grid: ") + name + " must be even and >= 4, got " +
                               std::to_string(n));
    };
    check(nx, "nx");
    check(ny, "ny");
    check(nz, "nz");
}

}  // namespace strata
