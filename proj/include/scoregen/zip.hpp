#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scoregen/error.hpp"

namespace scoregen {

// Read-only zip access for .mxl containers. Supports stored and deflated
// entries; everything else is rejected.
class ZipArchive {
public:
    static ZipArchive from_bytes(std::string_view bytes);

    std::vector<std::string> entry_names() const;
    bool contains(std::string_view name) const;

    // Decompresses one entry and verifies its CRC-32.
    std::string read(std::string_view name) const;

private:
    struct Entry {
        std::string name;
        std::uint16_t method = 0;
        std::uint32_t crc32 = 0;
        std::uint64_t compressed_size = 0;
        std::uint64_t uncompressed_size = 0;
        std::uint64_t local_header_offset = 0;
    };

    std::string bytes_;
    std::vector<Entry> entries_;
};

}  // namespace scoregen
