#include "homotally/journal.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <utility>

#include "homotally/crypto.h"
#include "homotally/error.h"

namespace homotally {
namespace {

const std::string kGenesis(64, '0');

std::string NextChain(const std::string& prev, const Journal::Entry& entry) {
  const Digest d = Sha256(prev + "\n" + entry.dump());
  return ToHex(d);
}

int OpenForAppend(const std::filesystem::path& path) {
  int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0600);
  if (fd < 0) {
    throw Error(ErrorCode::kIo, "cannot open journal " + path.string() + ": " + std::strerror(errno));
  }
  return fd;
}

std::vector<Journal::Entry> Verify(const std::filesystem::path& path, std::string* last_chain) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read journal " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  if (!content.empty() && content.back() != '\n') {
    throw Error(ErrorCode::kIntegrity, path.string() + ": partial final entry");
  }

  std::vector<Journal::Entry> entries;
  std::string chain = kGenesis;
  size_t pos = 0;
  while (pos < content.size()) {
    const size_t end = content.find('\n', pos);
    const std::string line = content.substr(pos, end - pos);
    pos = end + 1;
    const std::string where = path.string() + " entry " + std::to_string(entries.size());
    Journal::Entry entry;
    try {
      entry = Journal::Entry::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorCode::kIntegrity, where + ": unparseable");
    }
    if (!entry.is_object() || !entry.contains("chain") || !entry["chain"].is_string() ||
        !entry.contains("seq") || !entry["seq"].is_number_unsigned()) {
      throw Error(ErrorCode::kIntegrity, where + ": missing seq/chain");
    }
    const std::string stated = entry["chain"].get<std::string>();
    entry.erase("chain");
    if (entry["seq"].get<uint64_t>() != entries.size()) {
      throw Error(ErrorCode::kIntegrity, where + ": out of sequence");
    }
    const std::string expected = NextChain(chain, entry);
    if (stated != expected) throw Error(ErrorCode::kIntegrity, where + ": checksum mismatch");
    chain = expected;
    entry.erase("seq");
    entries.push_back(std::move(entry));
  }
  if (last_chain) *last_chain = chain;
  return entries;
}

}  // namespace

Journal::Journal(std::filesystem::path path, int fd, std::string chain, uint64_t next_seq)
    : path_(std::move(path)), fd_(fd), chain_(std::move(chain)), next_seq_(next_seq) {}

Journal::Journal(Journal&& other) noexcept
    : path_(std::move(other.path_)),
      fd_(std::exchange(other.fd_, -1)),
      chain_(std::move(other.chain_)),
      next_seq_(other.next_seq_) {}

Journal& Journal::operator=(Journal&& other) noexcept {
  if (this != &other) {
    if (fd_ >= 0) ::close(fd_);
    path_ = std::move(other.path_);
    fd_ = std::exchange(other.fd_, -1);
    chain_ = std::move(other.chain_);
    next_seq_ = other.next_seq_;
  }
  return *this;
}

Journal::~Journal() {
  if (fd_ >= 0) ::close(fd_);
}

Journal Journal::Create(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::exists(path, ec) && std::filesystem::file_size(path, ec) > 0) {
    throw Error(ErrorCode::kIo, "journal " + path.string() + " already has entries; recover instead");
  }
  return Journal(path, OpenForAppend(path), kGenesis, 0);
}

Journal Journal::Resume(const std::filesystem::path& path, std::vector<Entry>* entries) {
  std::string chain;
  std::vector<Entry> loaded = Verify(path, &chain);
  const uint64_t count = loaded.size();
  if (entries) *entries = std::move(loaded);
  return Journal(path, OpenForAppend(path), chain, count);
}

std::vector<Journal::Entry> Journal::Load(const std::filesystem::path& path) {
  return Verify(path, nullptr);
}

void Journal::Append(Entry entry) {
  if (!entry.is_object()) throw Error(ErrorCode::kInternal, "journal entry must be an object");
  Entry framed;
  framed["seq"] = next_seq_;
  for (auto& [key, value] : entry.items()) framed[key] = value;
  const std::string chain = NextChain(chain_, framed);
  framed["chain"] = chain;
  const std::string line = framed.dump() + "\n";

  size_t written = 0;
  while (written < line.size()) {
    ssize_t n = ::write(fd_, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kIo, "journal write failed: " + std::string(std::strerror(errno)));
    }
    written += static_cast<size_t>(n);
  }
  if (::fsync(fd_) != 0) {
    throw Error(ErrorCode::kIo, "journal fsync failed: " + std::string(std::strerror(errno)));
  }
  chain_ = chain;
  ++next_seq_;
}

}  // namespace homotally
