#pragma once

#include <cstdint>
#include <string>

namespace peelkit {

// Minimal SHA-256 (FIPS 180-4), used for output-file digests in run manifests.
class Sha256 {
public:
    Sha256();
    void update(const void* data, std::size_t len);
    std::string hex_digest(); // finalizes; object not reusable afterwards

private:
    void process_block(const std::uint8_t* p);
    std::uint32_t h_[8];
    std::uint8_t buf_[64];
    std::size_t buf_len_ = 0;
    std::uint64_t total_ = 0;
};

std::string sha256_hex(const std::string& bytes);
std::string sha256_file_hex(const std::string& path); // empty string if unreadable

} // namespace peelkit
