#pragma once

#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "splitkit/types.hpp"

namespace splitkit {

struct LineError {
  std::size_t line_no = 0;  // 1-based
  std::string message;
};

// Streaming reader for JSON Lines pair files. Malformed lines are collected
// with their line number and skipped; only I/O failure on open throws.
class PairReader {
 public:
  explicit PairReader(const std::string& path);
  explicit PairReader(std::istream& in);

  std::optional<PairRecord> next();

  const std::vector<LineError>& errors() const { return errors_; }
  std::size_t lines_read() const { return line_no_; }

 private:
  std::unique_ptr<std::ifstream> owned_;
  std::istream* in_;
  std::size_t line_no_ = 0;
  std::vector<LineError> errors_;
};

// Streaming writer; one record per line, deterministic field order.
class PairWriter {
 public:
  explicit PairWriter(const std::string& path);
  explicit PairWriter(std::ostream& out);

  void write(const PairRecord& rec);
  std::size_t count() const { return count_; }

 private:
  std::unique_ptr<std::ofstream> owned_;
  std::ostream* out_;
  std::size_t count_ = 0;
};

std::string to_json_line(const PairRecord& rec);
PairRecord pair_from_json_line(const std::string& line);  // throws std::runtime_error

// Convenience wrappers over the streaming classes.
std::vector<PairRecord> read_pairs(const std::string& path,
                                   std::vector<LineError>* errors = nullptr);
std::size_t write_pairs(const std::vector<PairRecord>& records, const std::string& path);

}  // namespace splitkit
