#include "hrte/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "hrte/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "checkpoint I/O assumes a little-endian host");

namespace hrte {
namespace {

constexpr char kMagic[4] = {'H', 'R', 'T', 'E'};

template <typename T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is, std::size_t& offset, const std::string& path) {
    T v;
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) {
        std::ostringstream msg;
        msg << "checkpoint " << path << ": truncated at byte offset " << offset
            << " (wanted " << sizeof(T) << " more bytes)";
        throw ConfigError(msg.str());
    }
    offset += sizeof(T);
    return v;
}

} // namespace

void save_checkpoint(const std::string& path, const CheckpointData& data) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw ConfigError("checkpoint: cannot open " + path + " for writing");
    os.write(kMagic, 4);
    put<std::uint32_t>(os, data.version);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(data.n));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(data.M));
    put<double>(os, data.L);
    put<double>(os, data.t);
    put<double>(os, data.dt);
    put<double>(os, data.s);
    put<double>(os, data.N);
    put<double>(os, data.mu);
    for (const auto& z : data.values) {
        put<double>(os, z.real());
        put<double>(os, z.imag());
    }
    if (!os) throw ConfigError("checkpoint: write to " + path + " failed");
}

CheckpointData load_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("checkpoint: cannot open " + path);
    std::size_t offset = 0;

    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw ConfigError("checkpoint " + path + ": bad magic bytes");
    offset += 4;

    CheckpointData d;
    d.version = get<std::uint32_t>(is, offset, path);
    if (d.version != kCheckpointVersion) {
        std::ostringstream msg;
        msg << "checkpoint " << path << ": format version " << d.version
            << " does not match supported version " << kCheckpointVersion;
        throw ConfigError(msg.str());
    }
    d.n = static_cast<int>(get<std::uint32_t>(is, offset, path));
    d.M = static_cast<int>(get<std::uint32_t>(is, offset, path));
    d.L = get<double>(is, offset, path);
    d.t = get<double>(is, offset, path);
    d.dt = get<double>(is, offset, path);
    d.s = get<double>(is, offset, path);
    d.N = get<double>(is, offset, path);
    d.mu = get<double>(is, offset, path);

    const GridSpec g = d.grid(); // validates n, M, L
    d.values.resize(g.size());
    for (auto& z : d.values) {
        const double re = get<double>(is, offset, path);
        const double im = get<double>(is, offset, path);
        z = cplx(re, im);
    }
    return d;
}

} // namespace hrte
