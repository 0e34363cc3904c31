#ifndef HOMOTALLY_JOURNAL_H_
#define HOMOTALLY_JOURNAL_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace homotally {

// Append-only newline-delimited JSON log. Every entry carries a sequence
// number and a running checksum
//   chain_i = SHA-256(chain_{i-1} hex || "\n" || compact entry without chain)
// with chain_0 = 64 zeros, so any edit, reordering or truncation is detected
// on load. Each append is fsync'ed before returning.
class Journal {
 public:
  using Entry = nlohmann::ordered_json;

  // Starts a fresh journal; the file must be absent or empty.
  static Journal Create(const std::filesystem::path& path);
  // Verifies an existing journal and positions for further appends. Entries
  // are returned without their seq/chain fields. Throws Error(kIntegrity) on
  // any damaged, reordered or partial line.
  static Journal Resume(const std::filesystem::path& path, std::vector<Entry>* entries);
  // Entries of a journal without opening it for writing.
  static std::vector<Entry> Load(const std::filesystem::path& path);

  Journal(Journal&& other) noexcept;
  Journal& operator=(Journal&& other) noexcept;
  Journal(const Journal&) = delete;
  Journal& operator=(const Journal&) = delete;
  ~Journal();

  // `entry` must be an object; seq and chain are added here.
  void Append(Entry entry);

  const std::filesystem::path& path() const { return path_; }
  uint64_t size() const { return next_seq_; }

 private:
  Journal(std::filesystem::path path, int fd, std::string chain, uint64_t next_seq);

  std::filesystem::path path_;
  int fd_ = -1;
  std::string chain_;
  uint64_t next_seq_ = 0;
};

}  // namespace homotally

#endif  // HOMOTALLY_JOURNAL_H_
