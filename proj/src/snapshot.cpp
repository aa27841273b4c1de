#include "strata/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace strata {

static_assert(std::endian::native == std::endian::little,
              "snapshot I/O assumes a little-endian host");

void write_snapshot(const std::string& path, const Field& f, double time, double tau) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open snapshot file for writing: " + path);
    std::ostringstream header;
    header.precision(17);
    header << "STRATA1 " << f.grid.nx << ' ' << f.grid.ny << ' ' << f.grid.nz << ' '
           << to_string(f.parity) << ' ' << time << ' ' << tau << '\n';
    out << header.str();
    out.write(reinterpret_cast<const char*>(f.values.data()),
              std::streamsize(f.values.size() * sizeof(double)));
    if (!out) throw InvalidInput("short write on snapshot file: " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open snapshot file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("snapshot header missing: " + path);
    std::istringstream header(line);
    std::string magic, parity;
    int nx = 0, ny = 0, nz = 0;
    Snapshot snap;
    if (!(header >> magic >> nx >> ny >> nz >> parity >> snap.time >> snap.tau) ||
        magic != "STRATA1")
        throw InvalidInput("malformed snapshot header in " + path + ": '" + line + "'");
    Grid grid(nx, ny, nz);
    snap.field = Field(grid, parity_from_string(parity));
    in.read(reinterpret_cast<char*>(snap.field.values.data()),
            std::streamsize(snap.field.values.size() * sizeof(double)));
    if (std::size_t(in.gcount()) != snap.field.values.size() * sizeof(double))
        throw InvalidInput("snapshot payload truncated in " + path);
    char extra;
    if (in.read(&extra, 1))
        throw InvalidInput("snapshot payload larger than header promises in " + path);
    return snap;
}

}  // namespace strata
