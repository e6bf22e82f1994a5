#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mapcount {

using Rank = std::int32_t;
using Index = std::int64_t;

/// Raised on malformed input files; `line` is 1-based when known.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? what + " at line " + std::to_string(line) : what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Dense ranks 0..sigma-1 for the distinct bytes of a source sequence,
/// assigned in byte-sorted order.
class Alphabet {
public:
  Alphabet() = default;

  static Alphabet from_bytes(std::span<const unsigned char> data, bool case_fold);
  /// Synthetic alphabet for generated texts; byte images are only cosmetic.
  static Alphabet of_size(Rank sigma);

  Rank size() const { return sigma_; }
  /// Rank of a source byte, -1 when the byte never occurred.
  Rank rank_of(unsigned char b) const { return rank_of_[fold(b)]; }
  unsigned char byte_of(Rank r) const;
  bool case_fold() const { return fold_; }

private:
  unsigned char fold(unsigned char b) const;

  Rank sigma_ = 0;
  bool fold_ = false;
  std::array<Rank, 256> rank_of_{};
  std::vector<unsigned char> byte_of_;
};

/// A text over an integer alphabet: every letter replaced by its rank.
/// Immutable once constructed.
class IntText {
public:
  IntText(std::vector<Rank> ranks, Alphabet alphabet, std::string source_name = {});

  Index size() const { return static_cast<Index>(ranks_.size()); }
  Rank operator[](Index i) const { return ranks_[static_cast<std::size_t>(i)]; }
  std::span<const Rank> ranks() const { return ranks_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::string& source_name() const { return source_name_; }

  /// Maps ranks back through the alphabet; inverse of ingestion.
  std::string to_bytes() const;

private:
  std::vector<Rank> ranks_;
  Alphabet alphabet_;
  std::string source_name_;
};

enum class InputFormat { Raw, Fasta };

/// Rank-reduces raw bytes or FASTA content into one IntText per record.
/// Raw input is a single record (one trailing newline stripped); FASTA
/// records are independent, whitespace inside sequence lines is dropped.
std::vector<IntText> ingest(std::string_view bytes, InputFormat format,
                            bool case_fold = false);

IntText reverse_text(const IntText& t);

inline constexpr std::size_t infinite_distance = std::numeric_limits<std::size_t>::max();

/// Number of mismatching offsets; infinite_distance when lengths differ.
std::size_t hamming_distance(std::span<const Rank> a, std::span<const Rank> b);

namespace detail {

[[noreturn]] inline void contract_fail(const char* msg) {
  throw std::invalid_argument(msg);
}

inline void require(bool ok, const char* msg) {
  if (!ok) contract_fail(msg);
}

inline void internal_check(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(msg);
}

}  // namespace detail

}  // namespace mapcount
