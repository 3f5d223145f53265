/*
 * Copyright 2026 The qgen Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qgen/corpus/chunkers.hpp"

#include <algorithm>
#include <set>

#include "qgen/corpus/loader.hpp"
#include "qgen/error.hpp"
#include "qgen/text_util.hpp"

namespace qgen::corpus {
namespace {

struct Range {
  std::size_t b = 0;
  std::size_t e = 0;
};

enum class SepLevel { Paragraph, Line, Sentence, Space, Count };

class RecursiveSplitter {
 public:
  RecursiveSplitter(std::string_view text, const RecursiveParams& params) : text_(text), params_(params) {
    cp_prefix_.resize(text.size() + 1, 0);
    for (std::size_t i = 0; i < text.size(); ++i)
      cp_prefix_[i + 1] = cp_prefix_[i] + ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80 ? 1 : 0);
  }

  std::vector<Range> chunks() {
    std::vector<Range> pieces;
    if (!text_.empty()) split({0, text_.size()}, 0, pieces);
    return merge(pieces);
  }

 private:
  std::size_t len(Range r) const { return cp_prefix_[r.e] - cp_prefix_[r.b]; }

  bool blank(Range r) const { return !text::has_non_space(text_.substr(r.b, r.e - r.b)); }

  // Cut points strictly inside r, placed right after each separator so the
  // separator stays with the preceding piece.
  std::vector<std::size_t> cuts(Range r, SepLevel level) const {
    std::vector<std::size_t> out;
    for (std::size_t i = r.b; i < r.e; ++i) {
      const char c = text_[i];
      std::size_t cut = 0;
      switch (level) {
        case SepLevel::Paragraph:
          if (c == '\n' && i + 1 < r.e && text_[i + 1] == '\n') {
            cut = i + 2;
            ++i;
          }
          break;
        case SepLevel::Line:
          if (c == '\n') cut = i + 1;
          break;
        case SepLevel::Sentence:
          if ((c == '.' || c == '?' || c == '!') && i + 1 < r.e && (text_[i + 1] == ' ' || text_[i + 1] == '\n')) {
            cut = i + 2;
            ++i;
          }
          break;
        case SepLevel::Space:
          if (c == ' ') cut = i + 1;
          break;
        case SepLevel::Count:
          break;
      }
      if (cut > r.b && cut < r.e) out.push_back(cut);
    }
    return out;
  }

  std::vector<Range> parts(Range r, SepLevel level) const {
    std::vector<Range> out;
    std::size_t start = r.b;
    for (std::size_t cut : cuts(r, level)) {
      out.push_back({start, cut});
      start = cut;
    }
    out.push_back({start, r.e});
    // Whitespace-only parts ride along with a neighbour.
    std::vector<Range> merged;
    for (const Range& p : out) {
      if (!merged.empty() && blank(p)) {
        merged.back().e = p.e;
      } else if (!merged.empty() && blank(merged.back())) {
        merged.back().e = p.e;
      } else {
        merged.push_back(p);
      }
    }
    return merged;
  }

  void split(Range r, std::size_t level, std::vector<Range>& out) const {
    if (len(r) <= params_.max_chars) {
      out.push_back(r);
      return;
    }
    for (std::size_t l = level; l < static_cast<std::size_t>(SepLevel::Count); ++l) {
      auto ps = parts(r, static_cast<SepLevel>(l));
      if (ps.size() > 1) {
        for (const Range& p : ps) split(p, l + 1, out);
        return;
      }
    }
    if (!params_.hard_split) {
      out.push_back(r);
      return;
    }
    std::size_t start = r.b;
    while (start < r.e) {
      std::size_t end = start;
      std::size_t n = 0;
      while (end < r.e && n < params_.max_chars) {
        ++end;
        while (end < r.e && (static_cast<unsigned char>(text_[end]) & 0xC0) == 0x80) ++end;
        ++n;
      }
      out.push_back({start, end});
      start = end;
    }
  }

  std::vector<Range> merge(const std::vector<Range>& pieces) const {
    std::vector<Range> out;
    const std::size_t m = pieces.size();
    std::size_t i = 0;
    while (i < m) {
      std::size_t j = i;
      std::size_t total = len(pieces[i]);
      while (j + 1 < m && total + len(pieces[j + 1]) <= params_.max_chars) {
        ++j;
        total += len(pieces[j]);
      }
      out.push_back({pieces[i].b, pieces[j].e});
      if (j + 1 >= m) break;
      const std::size_t next_len = len(pieces[j + 1]);
      std::size_t t = j + 1;
      std::size_t carried = 0;
      while (t - 1 > i) {
        const std::size_t add = len(pieces[t - 1]);
        if (carried + add > params_.overlap || carried + add + next_len > params_.max_chars) break;
        carried += add;
        --t;
      }
      i = t;
    }
    return out;
  }

  std::string_view text_;
  const RecursiveParams& params_;
  std::vector<std::size_t> cp_prefix_;
};

void check_params(const RecursiveParams& params) {
  if (params.max_chars == 0) throw Error(Errc::InvalidChunkParams, "max_chars must be positive");
  if (params.overlap >= params.max_chars)
    throw Error(Errc::InvalidChunkParams, "overlap (" + std::to_string(params.overlap) +
                                              ") must be smaller than max_chars (" +
                                              std::to_string(params.max_chars) + ")");
}

// Length of a standard code at `pos` ("1.2.1"), or 0 when there is none.
std::size_t code_length_at(std::string_view text, std::size_t pos) {
  auto digit = [&](std::size_t i) { return i < text.size() && text[i] >= '0' && text[i] <= '9'; };
  std::size_t i = pos;
  for (int group = 0; group < 3; ++group) {
    if (!digit(i)) return 0;
    while (digit(i)) ++i;
    if (group < 2) {
      if (i >= text.size() || text[i] != '.') return 0;
      ++i;
    }
  }
  if (i < text.size() && text[i] == '.' && digit(i + 1)) return 0;  // four-part number
  return i - pos;
}

}  // namespace

std::vector<Chunk> chunk_text_recursive(std::string_view text, std::string_view doc_id,
                                        const RecursiveParams& params) {
  check_params(params);
  RecursiveSplitter splitter(text, params);
  std::vector<Chunk> chunks;
  for (const Range& r : splitter.chunks()) {
    Chunk c;
    c.chunk_id = make_chunk_id(doc_id, ChunkStrategy::Recursive, chunks.size());
    c.doc_id = std::string(doc_id);
    c.text = std::string(text.substr(r.b, r.e - r.b));
    c.char_span = CharSpan{r.b, r.e};
    c.strategy = ChunkStrategy::Recursive;
    chunks.push_back(std::move(c));
  }
  return chunks;
}

std::vector<Chunk> chunk_recursive(const SourceDocument& doc, const RecursiveParams& params) {
  check_params(params);
  if (doc.block_count() == 0) throw Error(Errc::EmptyDocument, doc.doc_id);
  const FlatText flat = flatten(doc);
  return chunk_text_recursive(flat.text, doc.doc_id, params);
}

std::vector<std::string> default_unit_keywords() { return {"Contoh", "Latih Diri", "Standard Pembelajaran"}; }

double median_font_size(const SourceDocument& doc) {
  std::vector<double> sizes;
  for (const Block* b : doc.blocks()) sizes.push_back(b->font_size);
  if (sizes.empty()) throw Error(Errc::EmptyDocument, doc.doc_id);
  std::sort(sizes.begin(), sizes.end());
  const std::size_t n = sizes.size();
  return n % 2 == 1 ? sizes[n / 2] : 0.5 * (sizes[n / 2 - 1] + sizes[n / 2]);
}

std::vector<Chunk> chunk_structure_aware(const SourceDocument& doc, const StructureParams& params) {
  if (doc.block_count() == 0) throw Error(Errc::EmptyDocument, doc.doc_id);
  if (params.max_chars == 0) throw Error(Errc::InvalidChunkParams, "max_chars must be positive");

  const FlatText flat = flatten(doc);
  const auto blocks = doc.blocks();
  const double median = median_font_size(doc);

  auto opens_unit = [&](const Block& b) {
    return std::any_of(params.keywords.begin(), params.keywords.end(),
                       [&](const std::string& kw) { return text::starts_with_word(b.text, kw); });
  };

  std::vector<Chunk> chunks;
  std::vector<std::size_t> current;
  bool keyword_unit = false;

  auto flush = [&] {
    if (current.empty()) return;
    const std::size_t b = flat.block_spans[current.front()].start;
    const std::size_t e = flat.block_spans[current.back()].end;
    Chunk c;
    c.chunk_id = make_chunk_id(doc.doc_id, ChunkStrategy::StructureAware, chunks.size());
    c.doc_id = doc.doc_id;
    c.text = flat.text.substr(b, e - b);
    c.char_span = CharSpan{b, e};
    c.source_blocks = current;
    c.strategy = ChunkStrategy::StructureAware;
    chunks.push_back(std::move(c));
    current.clear();
  };

  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& block = *blocks[i];
    const bool heading = block.font_size - median >= params.heading_font_delta;
    const bool keyword = opens_unit(block);
    if (!current.empty()) {
      bool boundary = heading || keyword;
      if (!boundary && !keyword_unit) {
        const std::size_t start = flat.block_spans[current.front()].start;
        const std::size_t end = flat.block_spans[i].end;
        boundary = text::utf8_length(std::string_view(flat.text).substr(start, end - start)) > params.max_chars;
      }
      if (boundary) flush();
    }
    if (current.empty()) keyword_unit = keyword;
    current.push_back(i);
  }
  flush();
  return chunks;
}

std::vector<StandardChunk> chunk_rpt_standards(const SourceDocument& doc) {
  if (doc.role != DocumentRole::StandardsBlueprint)
    throw Error(Errc::WrongRole, doc.doc_id + " is not a standards blueprint");
  const FlatText flat = flatten(doc);
  const std::string_view text = flat.text;

  struct Hit {
    std::size_t pos;
    std::size_t len;
  };
  std::vector<Hit> hits;
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t p = pos;
    while (p < text.size() && (text[p] == ' ' || text[p] == '\t')) ++p;
    if (const std::size_t n = code_length_at(text, p); n > 0) hits.push_back({p, n});
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (hits.empty()) throw Error(Errc::NoStandardsFound, doc.doc_id + ": no N.N.N code at a line start");

  std::vector<StandardChunk> out;
  std::set<std::string> seen;
  for (std::size_t h = 0; h < hits.size(); ++h) {
    const std::size_t b = hits[h].pos;
    const std::size_t e = h + 1 < hits.size() ? hits[h + 1].pos : text.size();
    StandardChunk sc;
    sc.standard.code = std::string(text.substr(b, hits[h].len));
    sc.standard.description = text::squash_whitespace(text::trim(text.substr(b + hits[h].len, e - b - hits[h].len)));
    if (!seen.insert(sc.standard.code).second)
      throw Error(Errc::DuplicateStandard, doc.doc_id + ": standard " + sc.standard.code + " appears twice");
    sc.chunk.chunk_id = make_chunk_id(doc.doc_id, ChunkStrategy::StandardSplit, out.size());
    sc.chunk.doc_id = doc.doc_id;
    sc.chunk.text = std::string(text.substr(b, e - b));
    sc.chunk.char_span = CharSpan{b, e};
    sc.chunk.strategy = ChunkStrategy::StandardSplit;
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace qgen::corpus
