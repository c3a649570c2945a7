#pragma once

// Little-endian primitives for the binary vector and model file formats.
// Explicit byte assembly keeps the layouts host-independent.

#include <cstdint>
#include <cstring>
#include <string>

#include "spindetect/common.hpp"

namespace spindetect::binio {

inline void put_u8(std::string& out, std::uint8_t v) { out.push_back(static_cast<char>(v)); }

inline void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void put_f32(std::string& out, float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32(out, bits);
}

inline void put_f64(std::string& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

inline void put_string(std::string& out, const std::string& s) {
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out.append(s);
}

// Cursor over an in-memory buffer; reads raise Error on underrun.
class Reader {
public:
    Reader(const std::string& buf, std::string context)
        : buf_(buf), context_(std::move(context)) {}

    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return buf_.size() - pos_; }
    bool at_end() const { return pos_ == buf_.size(); }

    const char* take(std::size_t n, const char* what) {
        if (remaining() < n) {
            fail(context_, ": truncated file: expected ", n, " more byte(s) for ", what,
                 ", only ", remaining(), " left at offset ", pos_);
        }
        const char* p = buf_.data() + pos_;
        pos_ += n;
        return p;
    }

    std::uint8_t get_u8(const char* what) {
        return static_cast<std::uint8_t>(*take(1, what));
    }

    std::uint32_t get_u32(const char* what) {
        const unsigned char* p = reinterpret_cast<const unsigned char*>(take(4, what));
        return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
               (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
    }

    std::uint64_t get_u64(const char* what) {
        const unsigned char* p = reinterpret_cast<const unsigned char*>(take(8, what));
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
        return v;
    }

    float get_f32(const char* what) {
        std::uint32_t bits = get_u32(what);
        float v;
        std::memcpy(&v, &bits, 4);
        return v;
    }

    double get_f64(const char* what) {
        std::uint64_t bits = get_u64(what);
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }

    std::string get_string(const char* what) {
        std::uint32_t n = get_u32(what);
        return std::string(take(n, what), n);
    }

private:
    const std::string& buf_;
    std::string context_;
    std::size_t pos_ = 0;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

} // namespace spindetect::binio
