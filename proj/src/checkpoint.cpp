#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "bernden/denom_sieve.hpp"

namespace bernden::checkpoint {

namespace {

constexpr size_t kHeaderBytes = 6;   // magic + version
constexpr size_t kRecordBytes = 32;  // n, key.lo, key.hi, lambda

void store_le64(unsigned char* out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
}

uint64_t load_le64(const unsigned char* in) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(in[i]) << (8 * i);
    return v;
}

void encode(const DenomRecord& rec, unsigned char* out) {
    store_le64(out, rec.n);
    store_le64(out + 8, rec.key.lo);
    store_le64(out + 16, rec.key.hi);
    store_le64(out + 24, rec.lambda);
}

DenomRecord decode(const unsigned char* in) {
    DenomRecord rec;
    rec.n = load_le64(in);
    rec.key.lo = load_le64(in + 8);
    rec.key.hi = load_le64(in + 16);
    rec.lambda = load_le64(in + 24);
    return rec;
}

void check_header(const unsigned char* h, const std::string& path) {
    if (std::memcmp(h, kMagic, 4) != 0)
        throw std::runtime_error("checkpoint: bad magic in " + path);
    uint16_t ver = uint16_t(h[4]) | uint16_t(h[5]) << 8;
    if (ver != kVersion)
        throw std::runtime_error("checkpoint: unsupported version " + std::to_string(ver) +
                                 " in " + path);
}

}  // namespace

struct Writer::Impl {
    std::FILE* f = nullptr;
    std::string path;
};

Writer::Writer(const std::string& path) : impl_(new Impl{nullptr, path}) {
    namespace fs = std::filesystem;
    std::error_code ec;
    uint64_t size = fs::exists(path, ec) ? fs::file_size(path, ec) : 0;
    if (ec) size = 0;
    if (size < kHeaderBytes) {
        impl_->f = std::fopen(path.c_str(), "wb");
        if (!impl_->f) {
            delete impl_;
            throw std::runtime_error("checkpoint: cannot create " + path);
        }
        unsigned char h[kHeaderBytes];
        std::memcpy(h, kMagic, 4);
        h[4] = static_cast<unsigned char>(kVersion & 0xff);
        h[5] = static_cast<unsigned char>(kVersion >> 8);
        if (std::fwrite(h, 1, kHeaderBytes, impl_->f) != kHeaderBytes) {
            std::fclose(impl_->f);
            delete impl_;
            throw std::runtime_error("checkpoint: cannot write header to " + path);
        }
        return;
    }
    {
        std::FILE* in = std::fopen(path.c_str(), "rb");
        if (!in) {
            delete impl_;
            throw std::runtime_error("checkpoint: cannot open " + path);
        }
        unsigned char h[kHeaderBytes];
        size_t got = std::fread(h, 1, kHeaderBytes, in);
        std::fclose(in);
        if (got != kHeaderBytes) {
            delete impl_;
            throw std::runtime_error("checkpoint: cannot read header of " + path);
        }
        try {
            check_header(h, path);
        } catch (...) {
            delete impl_;
            throw;
        }
    }
    // drop a partial trailing record before appending
    uint64_t usable = kHeaderBytes + (size - kHeaderBytes) / kRecordBytes * kRecordBytes;
    if (usable != size) fs::resize_file(path, usable, ec);
    impl_->f = std::fopen(path.c_str(), "ab");
    if (!impl_->f) {
        delete impl_;
        throw std::runtime_error("checkpoint: cannot append to " + path);
    }
}

Writer::~Writer() {
    if (impl_) {
        if (impl_->f) std::fclose(impl_->f);
        delete impl_;
    }
}

void Writer::append(const DenomRecord& rec) {
    unsigned char buf[kRecordBytes];
    encode(rec, buf);
    if (std::fwrite(buf, 1, kRecordBytes, impl_->f) != kRecordBytes)
        throw std::runtime_error("checkpoint: write failed for " + impl_->path);
}

void Writer::flush() {
    if (impl_->f && std::fflush(impl_->f) != 0)
        throw std::runtime_error("checkpoint: flush failed for " + impl_->path);
}

std::optional<uint64_t> replay(const std::string& path, uint64_t stop_after,
                               const DenomEmit& emit) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return std::nullopt;
    unsigned char h[kHeaderBytes];
    if (std::fread(h, 1, kHeaderBytes, f) != kHeaderBytes) {
        std::fclose(f);
        return std::nullopt;  // fresh or sub-header file, nothing to replay
    }
    try {
        check_header(h, path);
    } catch (...) {
        std::fclose(f);
        throw;
    }
    std::optional<uint64_t> last;
    unsigned char buf[kRecordBytes];
    while (std::fread(buf, 1, kRecordBytes, f) == kRecordBytes) {
        DenomRecord rec = decode(buf);
        last = rec.n;
        if (rec.n <= stop_after) emit(rec);
    }
    std::fclose(f);  // a short final read is a tolerated truncated tail
    return last;
}

}  // namespace bernden::checkpoint
