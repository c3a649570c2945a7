#pragma once

// Pre-trained word-vector tables and averaged paragraph vectors.
//
// Three on-disk formats, bit-exact:
//  * text vectors:   "token f1 ... fD" per line, optional "count dim" header
//  * binary vectors: header "count SP dim LF", then per entry the token
//                    bytes, one space, and dim little-endian float32 values
//  * subword table:  header "min_n max_n dim", then "ngram f1 ... fD" lines
//
// Vectors are stored as float32; all accumulation happens in float64 so
// paragraph means stay stable for long paragraphs.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spindetect/common.hpp"

namespace spindetect::embeddings {

struct SubwordTable {
    std::size_t min_n = 3;
    std::size_t max_n = 6;
    std::unordered_map<std::string, std::vector<float>> ngrams;
};

struct EmbeddingModel {
    std::size_t dimension = 0;
    std::unordered_map<std::string, std::vector<float>> vocab;
    std::optional<SubwordTable> subwords;

    const std::vector<float>* find(const std::string& token) const {
        auto it = vocab.find(token);
        return it == vocab.end() ? nullptr : &it->second;
    }
};

// How average_embedding treats tokens absent from the vocabulary:
//   skip            drop the token from the mean
//   subword_compose try subword_vector() first, drop only if that fails too;
//                   requires a loaded subword table
//   zero            count the token with a zero vector (divide by total)
enum class OovPolicy { skip, subword_compose, zero };

OovPolicy parse_oov_policy(const std::string& s);
std::string to_string(OovPolicy p);

struct FeatureVector {
    std::vector<double> values;
    std::size_t covered_tokens = 0;
    std::size_t total_tokens = 0;

    bool operator==(const FeatureVector&) const = default;
};

struct LoadStats {
    std::size_t duplicates = 0;  // tokens seen more than once (last wins)
};

EmbeddingModel load_text_vectors(const std::string& path, LoadStats* stats = nullptr);
EmbeddingModel load_binary_vectors(const std::string& path, LoadStats* stats = nullptr);

// Writers emit tokens in lexicographic order so files are reproducible.
// Text floats use %.9g, enough digits to round-trip float32 exactly.
void save_text_vectors(const EmbeddingModel& model, const std::string& path,
                       bool with_header = false);
void save_binary_vectors(const EmbeddingModel& model, const std::string& path);

SubwordTable load_subword_table(const std::string& path);
void save_subword_table(const SubwordTable& table, const std::string& path);

// Validates the table's vector dimensions against the model.
void attach_subwords(EmbeddingModel& model, SubwordTable table);

// fastText-style composition: the token is wrapped as "<token>", its
// character n-grams with min_n <= n <= max_n are looked up (UTF-8 aware, one
// code point per character), and the found vectors are summed per
// occurrence. Returns nullopt when no n-gram is present.
std::optional<std::vector<double>> subword_vector(const EmbeddingModel& model,
                                                  const std::string& token);

// Mean of the covered tokens' vectors, accumulated in float64 in token
// order. Token list must be non-empty. When every token is uncovered under
// skip/subword_compose the result is the zero vector with covered_tokens=0.
FeatureVector average_embedding(const EmbeddingModel& model,
                                const std::vector<std::string>& tokens,
                                OovPolicy policy);

} // namespace spindetect::embeddings
