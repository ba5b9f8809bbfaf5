#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sketchlab {

// Hex-encoded SHA-256 of a byte buffer.
std::string sha256_hex(const void* data, std::size_t size);
std::string sha256_hex(const std::string& text);
std::string sha256_hex(const std::vector<std::uint8_t>& bytes);

// Hex-encoded SHA-256 of a file's contents. Throws on I/O failure.
std::string sha256_file(const std::string& path);

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(const std::string& text);

}  // namespace sketchlab
