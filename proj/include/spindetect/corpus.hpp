#pragma once

// Corpus ingestion: tokenization, sentence segmentation, paragraph
// extraction with the three-sentence filter, and the labeled dataset format.
//
// All operations are pure and deterministic; documents may be processed
// concurrently with no shared mutable state.

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "spindetect/common.hpp"

namespace spindetect::corpus {

enum class Source { wikipedia, arxiv, theses, synthetic };

enum class Label { original, paraphrased };

std::string to_string(Source s);
std::string to_string(Label l);
Source parse_source(std::string_view s);
Label parse_label(std::string_view s);

// Provenance of a labeled example: untouched text, the synthetic spinner at
// frequency k, or a named external tool.
struct Tool {
    enum class Kind { none, synthetic, external };

    Kind kind = Kind::none;
    int k = 0;            // synthetic only
    std::string name;     // external only

    static Tool none() { return {}; }
    static Tool synthetic(int k);
    static Tool external(std::string name);

    bool operator==(const Tool&) const = default;
};

std::string to_string(const Tool& t);
Tool parse_tool(std::string_view s);

struct Document {
    std::string id;
    Source source = Source::synthetic;
    std::string body;
};

// Normalizes CRLF to LF and validates: non-empty id without whitespace,
// non-empty body after normalization.
Document make_document(std::string id, Source source, std::string body);

struct Paragraph {
    std::string doc_id;
    std::size_t index = 0;   // ordinal among the document's non-empty blocks
    std::vector<std::vector<std::string>> sentences;  // tokenized
    std::string raw_text;

    bool operator==(const Paragraph&) const = default;

    // Token stream of the whole paragraph, sentence order preserved.
    std::vector<std::string> tokens() const;
};

// Builds a Paragraph from raw text, deriving sentences deterministically
// (split_sentences + tokenize). load_dataset uses the same derivation, so
// pipeline-built examples round-trip exactly.
Paragraph make_paragraph(std::string doc_id, std::size_t index, std::string raw_text);

struct LabeledExample {
    Paragraph paragraph;
    Source source = Source::synthetic;
    Label label = Label::original;
    Tool tool;

    bool operator==(const LabeledExample&) const = default;
};

// Enforces the label/tool pairing: original <=> no tool.
LabeledExample make_example(Paragraph paragraph, Source source, Label label, Tool tool);

// Lowercased (ASCII) whitespace-delimited tokens with ASCII punctuation
// stripped from token boundaries. Internal punctuation ("don't") is kept.
// Idempotent on its own output joined by single spaces.
std::vector<std::string> tokenize(std::string_view text);

using AbbrevSet = std::unordered_set<std::string>;

// Compiled-in copy of data/abbreviations.txt.
const AbbrevSet& default_abbreviations();

// Reads an abbreviation file: one lowercase entry per line, '#' comments and
// blank lines ignored.
AbbrevSet load_abbreviations(const std::string& path);

// Splits on runs of terminal punctuation (. ! ?) followed by whitespace and
// an ASCII uppercase letter, or by end of text. A run ending in '.' does not
// split when the preceding word (letters and internal periods, dots removed,
// lowercased) is in the abbreviation set.
std::vector<std::string> split_sentences(std::string_view text);
std::vector<std::string> split_sentences(std::string_view text, const AbbrevSet& abbreviations);

// Blank-line delimited paragraphs with fewer than three sentences discarded.
// Soft-wrapped lines inside a block are joined with single spaces.
std::vector<Paragraph> split_paragraphs(const Document& doc);
std::vector<Paragraph> split_paragraphs(const Document& doc, const AbbrevSet& abbreviations);

// Dataset file: one record per line, tab-separated
//   id  source  tool  label  text
// where id is "<doc_id>#<paragraph_index>" and text escapes backslash, tab,
// LF and CR as \\ \t \n \r. UTF-8, LF line endings. Parsing is strict; any
// malformed record reports its line number.
std::vector<LabeledExample> load_dataset(const std::string& path);
void save_dataset(const std::vector<LabeledExample>& examples, const std::string& path);

// Line-level codecs, exposed for tools and tests.
std::string format_record(const LabeledExample& ex);
LabeledExample parse_record(std::string_view line, std::size_t line_no);

} // namespace spindetect::corpus
