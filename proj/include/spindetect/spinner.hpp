#pragma once

// Deterministic synthetic paraphraser. Emulates spinning services that
// attempt a synonym substitution on every k-th word: commercial tools
// commonly attempt every fourth word by default and every second word in an
// aggressive setting. Attempts land on every k-th token counting all tokens;
// an attempt succeeds only when the token has a thesaurus entry, so the
// realized replacement ratio is at most 1/k.
//
// Randomness: std::mt19937_64 seeded from SpinConfig::seed. Under
// uniform_random, each successful dictionary hit draws one value and picks
// synonym index gen() % list_size. mt19937_64's output sequence is fixed by
// the C++ standard, so spins reproduce bit-identically across platforms.

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spindetect/common.hpp"

namespace spindetect::spinner {

enum class SynonymChoice { first, uniform_random };

struct SpinConfig {
    std::size_t frequency_k = 4;  // attempt on tokens k, 2k, ... (1-indexed)
    std::uint64_t seed = 0;
    SynonymChoice synonym_choice = SynonymChoice::uniform_random;
};

// Headword -> non-empty ordered synonym list. Keys lowercase; no entry lists
// itself (load_synonyms enforces both).
struct SynonymDict {
    std::unordered_map<std::string, std::vector<std::string>> entries;

    bool contains(const std::string& token) const { return entries.contains(token); }
    std::size_t size() const { return entries.size(); }
};

struct Replacement {
    std::size_t token_index = 0;  // 0-based position in the token stream
    std::string original;
    std::string substitute;

    bool operator==(const Replacement&) const = default;
};

struct SpinResult {
    std::string spun_text;
    std::vector<Replacement> replacements;  // strictly increasing token_index
    std::size_t attempted = 0;
    std::size_t replaced = 0;
};

// Spins a token stream. spun_text is the resulting tokens joined by single
// spaces. Deterministic for fixed (tokens, dict, cfg).
SpinResult spin(const std::vector<std::string>& tokens, const SynonymDict& dict,
                const SpinConfig& cfg);

// Spins raw text in place: tokens are located exactly as corpus::tokenize
// sees them and the substitute replaces the token's core characters, keeping
// surrounding punctuation and whitespace. Makes the same replacement
// decisions (and RNG draws) as spin() on corpus::tokenize(raw_text).
// Substitutes are inserted lowercase, mirroring the case damage real
// spinning tools inflict.
SpinResult spin_text(std::string_view raw_text, const SynonymDict& dict,
                     const SpinConfig& cfg);

// replaced / total_tokens. total_tokens must be >= 1.
double replacement_ratio(const SpinResult& result, std::size_t total_tokens);

struct SynonymLoadResult {
    SynonymDict dict;
    std::size_t self_dropped = 0;  // self-synonyms removed while loading
};

// Synonym file: one entry per line, "headword TAB syn1,syn2,...", UTF-8,
// lowercase. Self-synonyms are dropped (counted in self_dropped); an entry
// whose synonyms were all dropped is omitted. A duplicated headword keeps
// the last entry. Malformed lines report their line number.
SynonymLoadResult load_synonyms(const std::string& path);

// Stable per-paragraph seed: splitmix64(fnv1a64(doc_id) ^ base_seed ^
// golden * (index + 1)). Lets paragraphs spin in parallel with independent
// streams while staying reproducible.
std::uint64_t derive_seed(std::uint64_t base_seed, const std::string& doc_id,
                          std::size_t paragraph_index);

} // namespace spindetect::spinner
