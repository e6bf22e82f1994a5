#include "mapcount/text.hpp"

#include <algorithm>
#include <cctype>

namespace mapcount {

unsigned char Alphabet::fold(unsigned char b) const {
  return fold_ ? static_cast<unsigned char>(std::tolower(b)) : b;
}

Alphabet Alphabet::from_bytes(std::span<const unsigned char> data, bool case_fold) {
  Alphabet a;
  a.fold_ = case_fold;
  a.rank_of_.fill(-1);
  std::array<bool, 256> seen{};
  for (unsigned char b : data) seen[a.fold(b)] = true;
  for (int b = 0; b < 256; ++b) {
    if (seen[b]) {
      a.rank_of_[b] = a.sigma_++;
      a.byte_of_.push_back(static_cast<unsigned char>(b));
    }
  }
  return a;
}

Alphabet Alphabet::of_size(Rank sigma) {
  detail::require(sigma >= 1, "alphabet size must be positive");
  Alphabet a;
  a.sigma_ = sigma;
  a.rank_of_.fill(-1);
  for (Rank r = 0; r < sigma; ++r) {
    unsigned char b = r < 26 ? static_cast<unsigned char>('a' + r)
                             : static_cast<unsigned char>(r & 0xff);
    a.byte_of_.push_back(b);
    if (r < 256 && a.rank_of_[b] < 0) a.rank_of_[b] = r;
  }
  return a;
}

unsigned char Alphabet::byte_of(Rank r) const {
  detail::require(r >= 0 && r < sigma_, "rank out of alphabet");
  return byte_of_[static_cast<std::size_t>(r)];
}

IntText::IntText(std::vector<Rank> ranks, Alphabet alphabet, std::string source_name)
    : ranks_(std::move(ranks)),
      alphabet_(std::move(alphabet)),
      source_name_(std::move(source_name)) {
  detail::require(!ranks_.empty(), "empty sequence");
  for (Rank r : ranks_)
    detail::require(r >= 0 && r < alphabet_.size(), "rank outside alphabet");
}

std::string IntText::to_bytes() const {
  std::string out;
  out.reserve(ranks_.size());
  for (Rank r : ranks_) out.push_back(static_cast<char>(alphabet_.byte_of(r)));
  return out;
}

namespace {

IntText make_record(const std::string& content, bool case_fold, std::string name) {
  if (content.empty()) throw ParseError("empty sequence");
  auto bytes = std::span<const unsigned char>(
      reinterpret_cast<const unsigned char*>(content.data()), content.size());
  Alphabet alpha = Alphabet::from_bytes(bytes, case_fold);
  std::vector<Rank> ranks;
  ranks.reserve(content.size());
  for (unsigned char b : bytes) ranks.push_back(alpha.rank_of(b));
  return IntText(std::move(ranks), std::move(alpha), std::move(name));
}

}  // namespace

std::vector<IntText> ingest(std::string_view bytes, InputFormat format, bool case_fold) {
  std::vector<IntText> records;
  if (format == InputFormat::Raw) {
    std::string content(bytes);
    if (content.ends_with("\r\n"))
      content.resize(content.size() - 2);
    else if (content.ends_with("\n"))
      content.pop_back();
    records.push_back(make_record(content, case_fold, ""));
    return records;
  }

  // FASTA: '>'-prefixed headers, sequence lines concatenated.
  std::string name;
  std::string seq;
  bool in_record = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto flush = [&]() {
    if (!in_record) return;
    records.push_back(make_record(seq, case_fold, name));
    seq.clear();
  };
  while (pos < bytes.size()) {
    std::size_t eol = bytes.find('\n', pos);
    std::string_view line = bytes.substr(pos, eol == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : eol - pos);
    pos = eol == std::string_view::npos ? bytes.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '>') {
      flush();
      in_record = true;
      std::string_view rest = line.substr(1);
      std::size_t ws = rest.find_first_of(" \t");
      name = std::string(ws == std::string_view::npos ? rest : rest.substr(0, ws));
    } else {
      if (!in_record) throw ParseError("malformed FASTA header", line_no);
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) seq.push_back(c);
    }
  }
  if (!in_record) throw ParseError("malformed FASTA header", line_no ? line_no : 1);
  flush();
  return records;
}

IntText reverse_text(const IntText& t) {
  std::vector<Rank> r(t.ranks().begin(), t.ranks().end());
  std::reverse(r.begin(), r.end());
  return IntText(std::move(r), t.alphabet(), t.source_name());
}

std::size_t hamming_distance(std::span<const Rank> a, std::span<const Rank> b) {
  if (a.size() != b.size()) return infinite_distance;
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++d;
  return d;
}

}  // namespace mapcount
