// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ransim::csv {

// Shortest round-trip decimal rendering of a double (std::to_chars), so that
// parsing a logged value reproduces the exact bit pattern that was logged.
// Non-finite values render as "inf"/"-inf"/"nan".
std::string format_double(double v);

void append_double(std::string& out, double v);
void append_int(std::string& out, long long v);
void append_uint(std::string& out, unsigned long long v);

// Strict parse of a full field; throws ransim::RuntimeError on garbage.
double parse_double(std::string_view field, std::string_view context);
long long parse_int(std::string_view field, std::string_view context);
std::uint64_t parse_uint(std::string_view field, std::string_view context);

// Split one CSV line on commas (no quoting in any of our schemas).
std::vector<std::string_view> split(std::string_view line);

// Buffered line writer that creates the file eagerly and fsync-free flushes
// on close.  Throws ransim::RuntimeError on I/O failure.
class Writer {
 public:
  explicit Writer(const std::string& path);
  ~Writer();
  Writer(const Writer&) = delete;
  Writer& operator=(const Writer&) = delete;

  void write_line(std::string_view line);
  std::string& row_buffer() { return row_; }
  void commit_row();  // appends row_ + '\n', clears row_
  void close();

 private:
  void flush();
  std::string path_;
  int fd_ = -1;
  std::string buf_;
  std::string row_;
};

// Reads a whole text file; FileMissingError if absent.
std::string read_file(const std::string& path);
bool file_exists(const std::string& path);
void write_file_atomic(const std::string& path, std::string_view content);
void ensure_dir(const std::string& path);  // mkdir -p

// FNV-1a 64-bit checksum, used to pin shipped data files.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace ransim::csv
