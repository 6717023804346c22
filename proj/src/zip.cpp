#include "scoregen/zip.hpp"

#include <zlib.h>

#include <cstring>

namespace scoregen {

namespace {

constexpr std::uint32_t kLocalHeaderSig = 0x04034b50;
constexpr std::uint32_t kCentralDirSig = 0x02014b50;
constexpr std::uint32_t kEndOfCentralDirSig = 0x06054b50;

std::uint16_t read_u16(std::string_view b, std::size_t off) {
    return static_cast<std::uint16_t>(static_cast<unsigned char>(b[off]) |
                                      static_cast<unsigned char>(b[off + 1]) << 8);
}

std::uint32_t read_u32(std::string_view b, std::size_t off) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(b[off])) |
           static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 1])) << 8 |
           static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 2])) << 16 |
           static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 3])) << 24;
}

void require(bool ok, const std::string& what, std::size_t byte_offset) {
    if (!ok) throw ParseError("zip: " + what, 0, static_cast<long>(byte_offset));
}

std::string inflate_raw(std::string_view compressed, std::uint64_t expected_size) {
    std::string out(expected_size, '\0');
    z_stream zs;
    std::memset(&zs, 0, sizeof(zs));
    // Negative window bits: raw deflate stream, no zlib wrapper.
    if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) throw IoError("zlib init failed");
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
    zs.avail_in = static_cast<uInt>(compressed.size());
    zs.next_out = reinterpret_cast<Bytef*>(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = inflate(&zs, Z_FINISH);
    std::uint64_t produced = zs.total_out;
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || produced != expected_size)
        throw ParseError("zip: corrupt deflate stream");
    return out;
}

}  // namespace

ZipArchive ZipArchive::from_bytes(std::string_view bytes) {
    ZipArchive zip;
    zip.bytes_.assign(bytes);
    std::string_view b = zip.bytes_;

    require(b.size() >= 22, "too short to be a zip archive", b.size());

    // End-of-central-directory record: scan backwards over a possible comment.
    std::size_t eocd = std::string_view::npos;
    std::size_t scan_limit = b.size() >= 22 + 65535 ? b.size() - 22 - 65535 : 0;
    for (std::size_t pos = b.size() - 22; ; --pos) {
        if (read_u32(b, pos) == kEndOfCentralDirSig) {
            eocd = pos;
            break;
        }
        if (pos == scan_limit) break;
    }
    require(eocd != std::string_view::npos, "end-of-central-directory record not found",
            b.size());

    std::uint16_t entry_count = read_u16(b, eocd + 10);
    std::uint32_t cd_size = read_u32(b, eocd + 12);
    std::uint32_t cd_offset = read_u32(b, eocd + 16);
    require(static_cast<std::uint64_t>(cd_offset) + cd_size <= eocd,
            "central directory out of bounds", eocd);

    std::size_t pos = cd_offset;
    for (std::uint16_t i = 0; i < entry_count; ++i) {
        require(pos + 46 <= b.size() && read_u32(b, pos) == kCentralDirSig,
                "bad central directory entry", pos);
        Entry e;
        e.method = read_u16(b, pos + 10);
        e.crc32 = read_u32(b, pos + 16);
        e.compressed_size = read_u32(b, pos + 20);
        e.uncompressed_size = read_u32(b, pos + 24);
        std::uint16_t name_len = read_u16(b, pos + 28);
        std::uint16_t extra_len = read_u16(b, pos + 30);
        std::uint16_t comment_len = read_u16(b, pos + 32);
        e.local_header_offset = read_u32(b, pos + 42);
        require(pos + 46 + name_len <= b.size(), "entry name out of bounds", pos);
        e.name.assign(b.substr(pos + 46, name_len));
        zip.entries_.push_back(std::move(e));
        pos += 46u + name_len + extra_len + comment_len;
    }
    return zip;
}

std::vector<std::string> ZipArchive::entry_names() const {
    std::vector<std::string> names;
    names.reserve(entries_.size());
    for (const auto& e : entries_) names.push_back(e.name);
    return names;
}

bool ZipArchive::contains(std::string_view name) const {
    for (const auto& e : entries_)
        if (e.name == name) return true;
    return false;
}

std::string ZipArchive::read(std::string_view name) const {
    const Entry* entry = nullptr;
    for (const auto& e : entries_)
        if (e.name == name) {
            entry = &e;
            break;
        }
    if (!entry) throw DataError("zip: no entry named '" + std::string(name) + "'");

    std::string_view b = bytes_;
    std::size_t pos = entry->local_header_offset;
    require(pos + 30 <= b.size() && read_u32(b, pos) == kLocalHeaderSig, "bad local file header",
            pos);
    std::uint16_t name_len = read_u16(b, pos + 26);
    std::uint16_t extra_len = read_u16(b, pos + 28);
    std::size_t data_off = pos + 30 + name_len + extra_len;
    require(data_off + entry->compressed_size <= b.size(), "entry data out of bounds", data_off);

    std::string_view raw = b.substr(data_off, entry->compressed_size);
    std::string data;
    if (entry->method == 0) {
        require(entry->compressed_size == entry->uncompressed_size,
                "stored entry with size mismatch", data_off);
        data.assign(raw);
    } else if (entry->method == 8) {
        data = inflate_raw(raw, entry->uncompressed_size);
    } else {
        throw ParseError("zip: unsupported compression method " + std::to_string(entry->method));
    }

    auto crc = static_cast<std::uint32_t>(
        ::crc32(0, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
    if (crc != entry->crc32)
        throw ParseError("zip: CRC mismatch for entry '" + std::string(name) + "'");
    return data;
}

}  // namespace scoregen
