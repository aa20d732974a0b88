#include "agfsync/gen/blob_store.hpp"

#include <fstream>

#include "agfsync/core/error.hpp"
#include "agfsync/core/sha256.hpp"

namespace agfsync::gen {

namespace fs = std::filesystem;

BlobStore::BlobStore(fs::path root) : root_(std::move(root)) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec) raise(ErrorKind::io, "cannot create blob store root " + root_.string());
}

fs::path BlobStore::path_for(const std::string& address) const {
    if (address.size() != 64) raise(ErrorKind::validation, "malformed content address " + address);
    return root_ / address.substr(0, 2) / address;
}

std::string BlobStore::put(std::span<const std::uint8_t> bytes) {
    std::string address = core::sha256_hex(bytes);
    fs::path target = path_for(address);
    if (fs::exists(target)) return address;  // write-once

    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec) raise(ErrorKind::io, "cannot create blob directory " + target.parent_path().string());

    fs::path temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) raise(ErrorKind::io, "cannot open " + temp.string());
        out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
        if (!out) raise(ErrorKind::io, "short write to " + temp.string());
    }
    fs::rename(temp, target, ec);
    if (ec) raise(ErrorKind::io, "cannot move blob into place: " + target.string());
    return address;
}

bool BlobStore::contains(const std::string& address) const {
    return fs::exists(path_for(address));
}

std::vector<std::uint8_t> BlobStore::get(const std::string& address) const {
    fs::path source = path_for(address);
    std::ifstream in(source, std::ios::binary);
    if (!in) raise(ErrorKind::state, "blob not found: " + address);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

}  // namespace agfsync::gen
