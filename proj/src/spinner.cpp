#include "spindetect/spinner.hpp"

#include <cctype>
#include <fstream>
#include <random>

namespace spindetect::spinner {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_punct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }

char lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

const std::string* pick_synonym(const std::vector<std::string>& synonyms,
                                SynonymChoice choice, std::mt19937_64& gen) {
    if (choice == SynonymChoice::first) return &synonyms.front();
    return &synonyms[gen() % synonyms.size()];
}

} // namespace

SpinResult spin(const std::vector<std::string>& tokens, const SynonymDict& dict,
                const SpinConfig& cfg) {
    if (cfg.frequency_k < 1) fail("spin: frequency_k must be >= 1");
    std::mt19937_64 gen(cfg.seed);
    SpinResult result;
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string* emit = &tokens[i];
        if ((i + 1) % cfg.frequency_k == 0) {
            ++result.attempted;
            auto it = dict.entries.find(tokens[i]);
            if (it != dict.entries.end()) {
                emit = pick_synonym(it->second, cfg.synonym_choice, gen);
                result.replacements.push_back({i, tokens[i], *emit});
                ++result.replaced;
            }
        }
        if (!out.empty()) out.push_back(' ');
        out += *emit;
    }
    result.spun_text = std::move(out);
    return result;
}

SpinResult spin_text(std::string_view raw_text, const SynonymDict& dict,
                     const SpinConfig& cfg) {
    if (cfg.frequency_k < 1) fail("spin_text: frequency_k must be >= 1");
    std::mt19937_64 gen(cfg.seed);
    SpinResult result;
    std::string out;
    out.reserve(raw_text.size());
    std::size_t token_index = 0;
    std::size_t i = 0;
    while (i < raw_text.size()) {
        std::size_t ws_start = i;
        while (i < raw_text.size() && is_space(raw_text[i])) ++i;
        out.append(raw_text.substr(ws_start, i - ws_start));
        std::size_t chunk_start = i;
        while (i < raw_text.size() && !is_space(raw_text[i])) ++i;
        if (i == chunk_start) continue;
        std::string_view chunk = raw_text.substr(chunk_start, i - chunk_start);

        // Token core: chunk minus boundary punctuation, as in corpus::tokenize.
        std::size_t b = 0, e = chunk.size();
        while (b < e && is_punct(chunk[b])) ++b;
        while (e > b && is_punct(chunk[e - 1])) --e;
        if (b == e) {
            out.append(chunk);
            continue;
        }
        std::string token;
        token.reserve(e - b);
        for (std::size_t j = b; j < e; ++j) token.push_back(lower(chunk[j]));

        const std::string* core = nullptr;
        if ((token_index + 1) % cfg.frequency_k == 0) {
            ++result.attempted;
            auto it = dict.entries.find(token);
            if (it != dict.entries.end()) {
                core = pick_synonym(it->second, cfg.synonym_choice, gen);
                result.replacements.push_back({token_index, token, *core});
                ++result.replaced;
            }
        }
        out.append(chunk.substr(0, b));
        if (core) {
            out += *core;
        } else {
            out.append(chunk.substr(b, e - b));
        }
        out.append(chunk.substr(e));
        ++token_index;
    }
    result.spun_text = std::move(out);
    return result;
}

double replacement_ratio(const SpinResult& result, std::size_t total_tokens) {
    if (total_tokens == 0) fail("replacement_ratio: total_tokens must be >= 1");
    return static_cast<double>(result.replaced) / static_cast<double>(total_tokens);
}

SynonymLoadResult load_synonyms(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open synonym file '", path, "'");
    SynonymLoadResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            fail("synonyms '", path, "', line ", line_no, ": missing TAB separator");
        std::string head = line.substr(0, tab);
        if (head.empty())
            fail("synonyms '", path, "', line ", line_no, ": empty headword");
        for (char& c : head) c = lower(c);

        std::vector<std::string> synonyms;
        std::size_t pos = tab + 1;
        while (pos <= line.size()) {
            std::size_t comma = line.find(',', pos);
            std::size_t end = comma == std::string::npos ? line.size() : comma;
            std::string syn = line.substr(pos, end - pos);
            if (syn.empty())
                fail("synonyms '", path, "', line ", line_no, ": empty synonym");
            for (char& c : syn) c = lower(c);
            if (syn == head) {
                ++result.self_dropped;
            } else {
                synonyms.push_back(std::move(syn));
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (synonyms.empty()) {
            result.dict.entries.erase(head);
            continue;
        }
        result.dict.entries[std::move(head)] = std::move(synonyms);
    }
    return result;
}

std::uint64_t derive_seed(std::uint64_t base_seed, const std::string& doc_id,
                          std::size_t paragraph_index) {
    std::uint64_t h = fnv1a64(doc_id);
    h ^= base_seed;
    h ^= 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(paragraph_index) + 1);
    return splitmix64(h);
}

} // namespace spindetect::spinner
