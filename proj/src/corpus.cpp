#include "spindetect/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include "spindetect/binio.hpp"

namespace spindetect::corpus {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

char lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

} // namespace

std::string to_string(Source s) {
    switch (s) {
        case Source::wikipedia: return "wikipedia";
        case Source::arxiv: return "arxiv";
        case Source::theses: return "theses";
        case Source::synthetic: return "synthetic";
    }
    fail("invalid Source value");
}

std::string to_string(Label l) {
    return l == Label::original ? "original" : "paraphrased";
}

Source parse_source(std::string_view s) {
    if (s == "wikipedia") return Source::wikipedia;
    if (s == "arxiv") return Source::arxiv;
    if (s == "theses") return Source::theses;
    if (s == "synthetic") return Source::synthetic;
    fail("unknown source '", std::string(s), "'");
}

Label parse_label(std::string_view s) {
    if (s == "original") return Label::original;
    if (s == "paraphrased") return Label::paraphrased;
    fail("unknown label '", std::string(s), "'");
}

Tool Tool::synthetic(int k) {
    if (k < 1) fail("synthetic tool frequency must be >= 1, got ", k);
    Tool t;
    t.kind = Kind::synthetic;
    t.k = k;
    return t;
}

Tool Tool::external(std::string name) {
    if (name.empty()) fail("external tool name must be non-empty");
    Tool t;
    t.kind = Kind::external;
    t.name = std::move(name);
    return t;
}

std::string to_string(const Tool& t) {
    switch (t.kind) {
        case Tool::Kind::none: return "none";
        case Tool::Kind::synthetic: return detail::cat("synthetic(", t.k, ")");
        case Tool::Kind::external: return detail::cat("external(", t.name, ")");
    }
    fail("invalid Tool kind");
}

Tool parse_tool(std::string_view s) {
    if (s == "none") return Tool::none();
    auto inner = [&](std::string_view prefix) -> std::string_view {
        return s.substr(prefix.size(), s.size() - prefix.size() - 1);
    };
    if (s.starts_with("synthetic(") && s.ends_with(")")) {
        std::string_view body = inner("synthetic(");
        int k = 0;
        auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
        if (ec != std::errc() || p != body.data() + body.size())
            fail("bad synthetic tool spec '", std::string(s), "'");
        return Tool::synthetic(k);
    }
    if (s.starts_with("external(") && s.ends_with(")")) {
        std::string_view body = inner("external(");
        return Tool::external(std::string(body));
    }
    fail("unknown tool '", std::string(s), "'");
}

Document make_document(std::string id, Source source, std::string body) {
    if (id.empty()) fail("document id must be non-empty");
    for (char c : id) {
        if (is_space(c)) fail("document id '", id, "' contains whitespace");
    }
    std::string normalized;
    normalized.reserve(body.size());
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '\r' && i + 1 < body.size() && body[i + 1] == '\n') continue;
        normalized.push_back(body[i] == '\r' ? '\n' : body[i]);
    }
    if (trim(normalized).empty()) fail("document '", id, "' has an empty body");
    return Document{std::move(id), source, std::move(normalized)};
}

std::vector<std::string> Paragraph::tokens() const {
    std::vector<std::string> out;
    for (const auto& sentence : sentences)
        out.insert(out.end(), sentence.begin(), sentence.end());
    return out;
}

Paragraph make_paragraph(std::string doc_id, std::size_t index, std::string raw_text) {
    Paragraph p;
    p.doc_id = std::move(doc_id);
    p.index = index;
    for (const std::string& s : split_sentences(raw_text))
        p.sentences.push_back(tokenize(s));
    p.raw_text = std::move(raw_text);
    return p;
}

LabeledExample make_example(Paragraph paragraph, Source source, Label label, Tool tool) {
    bool untouched = tool.kind == Tool::Kind::none;
    if ((label == Label::original) != untouched) {
        fail("example '", paragraph.doc_id, "#", paragraph.index, "': label ",
             to_string(label), " is inconsistent with tool ", to_string(tool));
    }
    return LabeledExample{std::move(paragraph), source, label, std::move(tool)};
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        if (i == start) break;
        std::size_t b = start, e = i;
        while (b < e && is_punct(text[b])) ++b;
        while (e > b && is_punct(text[e - 1])) --e;
        if (b == e) continue;
        std::string tok;
        tok.reserve(e - b);
        for (std::size_t j = b; j < e; ++j) tok.push_back(lower(text[j]));
        out.push_back(std::move(tok));
    }
    return out;
}

const AbbrevSet& default_abbreviations() {
    static const AbbrevSet set = {
        "mr", "mrs", "ms", "dr", "prof", "rev", "hon", "st", "sr", "jr",
        "etc", "eg", "ie", "cf", "vs", "al", "fig", "figs", "eq", "eqs",
        "sec", "secs", "no", "nos", "vol", "vols", "pp", "ed", "eds", "ca",
        "approx", "dept", "univ", "assn", "bros", "inc", "ltd", "co", "corp",
        "mt", "capt", "col", "gen", "lt", "maj", "sgt",
    };
    return set;
}

AbbrevSet load_abbreviations(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open abbreviation file '", path, "'");
    AbbrevSet set;
    std::string line;
    while (std::getline(in, line)) {
        std::string entry = trim(line);
        if (entry.empty() || entry[0] == '#') continue;
        set.insert(entry);
    }
    return set;
}

namespace {

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

// Word immediately before position `t` (letters and internal periods), with
// periods removed and lowercased. Empty when the period follows a digit etc.
std::string preceding_word(std::string_view text, std::size_t t) {
    std::size_t b = t;
    while (b > 0 && (is_alpha(text[b - 1]) || text[b - 1] == '.')) --b;
    std::string word;
    for (std::size_t j = b; j < t; ++j) {
        if (text[j] == '.') continue;
        word.push_back(lower(text[j]));
    }
    return word;
}

} // namespace

std::vector<std::string> split_sentences(std::string_view text) {
    return split_sentences(text, default_abbreviations());
}

std::vector<std::string> split_sentences(std::string_view text, const AbbrevSet& abbreviations) {
    std::vector<std::string> out;
    std::size_t start = 0;
    std::size_t i = 0;
    auto emit = [&](std::size_t end) {
        std::string sentence = trim(text.substr(start, end - start));
        if (!sentence.empty()) out.push_back(std::move(sentence));
        start = end;
    };
    while (i < text.size()) {
        if (!is_terminal(text[i])) {
            ++i;
            continue;
        }
        std::size_t run_begin = i;
        while (i < text.size() && is_terminal(text[i])) ++i;
        if (i == text.size()) {
            emit(i);
            break;
        }
        if (!is_space(text[i])) continue;
        std::size_t next = i;
        while (next < text.size() && is_space(text[next])) ++next;
        if (next < text.size() && !is_upper(text[next])) continue;
        if (text[i - 1] == '.' &&
            abbreviations.contains(preceding_word(text, run_begin)))
            continue;
        emit(i);
    }
    if (start < text.size()) emit(text.size());
    return out;
}

std::vector<Paragraph> split_paragraphs(const Document& doc) {
    return split_paragraphs(doc, default_abbreviations());
}

std::vector<Paragraph> split_paragraphs(const Document& doc, const AbbrevSet& abbreviations) {
    // Collect non-empty blocks separated by blank (or whitespace-only) lines,
    // unwrapping soft line breaks with single spaces.
    std::vector<std::string> blocks;
    std::string current;
    std::size_t pos = 0;
    auto flush = [&] {
        std::string block = trim(current);
        current.clear();
        if (!block.empty()) blocks.push_back(std::move(block));
    };
    while (pos <= doc.body.size()) {
        std::size_t eol = doc.body.find('\n', pos);
        if (eol == std::string::npos) eol = doc.body.size();
        std::string line = trim(std::string_view(doc.body).substr(pos, eol - pos));
        if (line.empty()) {
            flush();
        } else {
            if (!current.empty()) current.push_back(' ');
            current += line;
        }
        if (eol == doc.body.size()) break;
        pos = eol + 1;
    }
    flush();

    std::vector<Paragraph> out;
    for (std::size_t index = 0; index < blocks.size(); ++index) {
        Paragraph p;
        p.doc_id = doc.id;
        p.index = index;
        for (const std::string& s : split_sentences(blocks[index], abbreviations))
            p.sentences.push_back(tokenize(s));
        if (p.sentences.size() < 3) continue;
        p.raw_text = std::move(blocks[index]);
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

std::string escape_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string unescape_text(std::string_view text, std::size_t line_no) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '\\') {
            out.push_back(text[i]);
            continue;
        }
        if (i + 1 == text.size()) fail("line ", line_no, ": dangling escape in text field");
        ++i;
        switch (text[i]) {
            case '\\': out.push_back('\\'); break;
            case 't': out.push_back('\t'); break;
            case 'n': out.push_back('\n'); break;
            case 'r': out.push_back('\r'); break;
            default: fail("line ", line_no, ": unknown escape '\\", text[i], "' in text field");
        }
    }
    return out;
}

} // namespace

std::string format_record(const LabeledExample& ex) {
    const Paragraph& p = ex.paragraph;
    return detail::cat(p.doc_id, "#", p.index, "\t", to_string(ex.source), "\t",
                       to_string(ex.tool), "\t", to_string(ex.label), "\t",
                       escape_text(p.raw_text));
}

LabeledExample parse_record(std::string_view line, std::size_t line_no) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t tab = line.find('\t', pos);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
    if (fields.size() != 5)
        fail("line ", line_no, ": expected 5 tab-separated fields, got ", fields.size());

    std::string_view id = fields[0];
    std::size_t hash = id.rfind('#');
    if (hash == std::string_view::npos || hash == 0 || hash + 1 == id.size())
        fail("line ", line_no, ": id '", std::string(id), "' is not '<doc_id>#<index>'");
    std::string doc_id(id.substr(0, hash));
    std::string_view index_str = id.substr(hash + 1);
    std::size_t index = 0;
    auto [p, ec] = std::from_chars(index_str.data(), index_str.data() + index_str.size(), index);
    if (ec != std::errc() || p != index_str.data() + index_str.size())
        fail("line ", line_no, ": bad paragraph index '", std::string(index_str), "'");

    try {
        Source source = parse_source(fields[1]);
        Tool tool = parse_tool(fields[2]);
        Label label = parse_label(fields[3]);
        std::string text = unescape_text(fields[4], line_no);
        return make_example(make_paragraph(std::move(doc_id), index, std::move(text)),
                            source, label, std::move(tool));
    } catch (const Error& e) {
        std::string what = e.what();
        if (what.rfind("line ", 0) == 0) throw;
        fail("line ", line_no, ": ", what);
    }
}

std::vector<LabeledExample> load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open dataset '", path, "'");
    std::vector<LabeledExample> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        try {
            out.push_back(parse_record(line, line_no));
        } catch (const Error& e) {
            fail("dataset '", path, "': ", e.what());
        }
    }
    return out;
}

void save_dataset(const std::vector<LabeledExample>& examples, const std::string& path) {
    std::string buf;
    for (const LabeledExample& ex : examples) {
        buf += format_record(ex);
        buf.push_back('\n');
    }
    binio::write_file(path, buf);
}

} // namespace spindetect::corpus
