// Copyright 2026 The Bioling Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bioling/alias_index.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <utility>

#include "bioling/error.h"
#include "bioling/unicode.h"

namespace bioling {

namespace {

constexpr char kMagic[4] = {'B', 'L', 'I', 'X'};
constexpr std::uint32_t kMaxLshBits = 30;
constexpr std::uint32_t kMaxLshTables = 256;

std::uint64_t splitmix64(std::uint64_t *state) {
  std::uint64_t z = (*state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform in (0, 1].
double unit_open(std::uint64_t *state) {
  return (static_cast<double>(splitmix64(state) >> 11) + 1.0) * 0x1.0p-53;
}

double clamp_similarity(double s) { return std::min(s, 1.0); }

class Writer {
 public:
  explicit Writer(std::ostream &out) : out_(out) {}

  void bytes(const void *data, std::size_t n) {
    out_.write(static_cast<const char *>(data),
               static_cast<std::streamsize>(n));
  }
  template <typename T>
  void uint(T v) {
    unsigned char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      buf[i] = static_cast<unsigned char>(v >> (8 * i));
    }
    bytes(buf, sizeof(T));
  }
  void f64(double v) { uint(std::bit_cast<std::uint64_t>(v)); }
  void str(const std::string &s) {
    uint(static_cast<std::uint32_t>(s.size()));
    bytes(s.data(), s.size());
  }

 private:
  std::ostream &out_;
};

class Reader {
 public:
  explicit Reader(std::istream &in) : in_(in) {}

  void bytes(void *data, std::size_t n) {
    in_.read(static_cast<char *>(data), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) {
      throw DataError("index file is truncated");
    }
  }
  template <typename T>
  T uint() {
    unsigned char buf[sizeof(T)];
    bytes(buf, sizeof(T));
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<T>(static_cast<T>(buf[i]) << (8 * i));
    }
    return v;
  }
  double f64() { return std::bit_cast<double>(uint<std::uint64_t>()); }
  std::string str() {
    const auto n = uint<std::uint32_t>();
    std::string s(n, '\0');
    if (n > 0) bytes(s.data(), n);
    return s;
  }
  bool at_end() { return in_.peek() == std::char_traits<char>::eof(); }

 private:
  std::istream &in_;
};

void validate_lsh(const LshParams &p) {
  if (p.tables == 0 || p.tables > kMaxLshTables) {
    throw InvalidArgument("LSH tables must be in [1, " +
                          std::to_string(kMaxLshTables) + "]");
  }
  if (p.bits == 0 || p.bits > kMaxLshBits) {
    throw InvalidArgument("LSH bits must be in [1, " +
                          std::to_string(kMaxLshBits) + "]");
  }
  if (p.probe_radius > 2 || p.probe_radius > p.bits) {
    throw InvalidArgument("LSH probe radius must be at most 2 and at most bits");
  }
}

}  // namespace

KParam::KParam(std::size_t k) : k_(k) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
}

std::string_view backend_name(Backend backend) {
  return backend == Backend::kExact ? "exact" : "lsh";
}

Backend parse_backend(std::string_view name) {
  if (name == "exact") return Backend::kExact;
  if (name == "lsh") return Backend::kLsh;
  throw InvalidArgument("unknown backend '" + std::string(name) +
                        "' (expected exact or lsh)");
}

AliasIndex AliasIndex::build(const AliasTable &aliases,
                             NgramVectorizer vectorizer, Backend backend,
                             const LshParams &lsh) {
  if (backend == Backend::kLsh) validate_lsh(lsh);
  AliasIndex index;
  index.aliases_ = aliases;
  index.vectorizer_ = std::move(vectorizer);
  index.backend_ = backend;
  index.lsh_ = lsh;
  index.vectors_.reserve(aliases.size());
  for (const AliasTable::Entry &entry : aliases.entries()) {
    index.vectors_.push_back(index.vectorizer_.encode(entry.surface));
  }
  index.build_postings();
  if (backend == Backend::kLsh) index.build_lsh();
  return index;
}

void AliasIndex::build_postings() {
  const std::size_t n = vectors_.size();
  lex_order_.resize(n);
  std::iota(lex_order_.begin(), lex_order_.end(), 0u);
  std::sort(lex_order_.begin(), lex_order_.end(),
            [&](std::uint32_t a, std::uint32_t b) { return alias(a) < alias(b); });
  lex_rank_.assign(n, 0);
  for (std::uint32_t r = 0; r < n; ++r) lex_rank_[lex_order_[r]] = r;

  posting_offsets_.assign(vectorizer_.size() + 1, 0);
  for (const SparseVector &v : vectors_) {
    for (const SparseEntry &e : v.entries) ++posting_offsets_[e.index + 1];
  }
  std::partial_sum(posting_offsets_.begin(), posting_offsets_.end(),
                   posting_offsets_.begin());
  posting_alias_.resize(posting_offsets_.back());
  posting_weight_.resize(posting_offsets_.back());
  std::vector<std::uint64_t> fill(posting_offsets_.begin(),
                                  posting_offsets_.end() - 1);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (const SparseEntry &e : vectors_[a].entries) {
      const std::uint64_t slot = fill[e.index]++;
      posting_alias_[slot] = a;
      posting_weight_[slot] = e.weight;
    }
  }
}

void AliasIndex::build_lsh() {
  const std::size_t dim = vectorizer_.size();
  const std::size_t planes = std::size_t{lsh_.tables} * lsh_.bits;
  planes_.resize(planes * dim);
  std::uint64_t state = lsh_.seed;
  // Box-Muller from a portable generator so every platform hashes alike.
  for (std::size_t i = 0; i < planes_.size(); i += 2) {
    const double r = std::sqrt(-2.0 * std::log(unit_open(&state)));
    const double theta = 2.0 * M_PI * unit_open(&state);
    planes_[i] = static_cast<float>(r * std::cos(theta));
    if (i + 1 < planes_.size()) {
      planes_[i + 1] = static_cast<float>(r * std::sin(theta));
    }
  }
  buckets_.assign(lsh_.tables, {});
  for (std::uint32_t a = 0; a < vectors_.size(); ++a) {
    if (vectors_[a].empty()) continue;
    for (std::uint32_t t = 0; t < lsh_.tables; ++t) {
      buckets_[t][signature(vectors_[a], t)].push_back(a);
    }
  }
}

std::uint32_t AliasIndex::signature(const SparseVector &v,
                                    std::uint32_t table) const {
  const std::size_t dim = vectorizer_.size();
  std::uint32_t sig = 0;
  for (std::uint32_t b = 0; b < lsh_.bits; ++b) {
    const float *plane = planes_.data() + (std::size_t{table} * lsh_.bits + b) * dim;
    double s = 0.0;
    for (const SparseEntry &e : v.entries) s += e.weight * plane[e.index];
    if (s > 0.0) sig |= std::uint32_t{1} << b;
  }
  return sig;
}

std::vector<Neighbor> AliasIndex::nearest(const SparseVector &query,
                                          KParam k) const {
  return backend_ == Backend::kLsh ? nearest_lsh(query, k)
                                   : nearest_exact(query, k);
}

std::vector<Neighbor> AliasIndex::nearest_exact(const SparseVector &query,
                                                KParam k) const {
  std::vector<Neighbor> out;
  if (query.empty() || vectors_.empty()) return out;
  thread_local std::vector<double> scores;
  thread_local std::vector<std::uint32_t> touched;
  if (scores.size() < vectors_.size()) scores.resize(vectors_.size(), 0.0);
  touched.clear();
  // Accumulate in increasing gram order so each score is summed exactly as
  // dot() would sum it.
  for (const SparseEntry &q : query.entries) {
    if (q.index >= vectorizer_.size()) continue;
    const std::uint64_t end = posting_offsets_[q.index + 1];
    for (std::uint64_t p = posting_offsets_[q.index]; p < end; ++p) {
      const std::uint32_t a = posting_alias_[p];
      if (scores[a] == 0.0) touched.push_back(a);
      scores[a] += q.weight * posting_weight_[p];
    }
  }
  const std::size_t want = std::min(k.value(), vectors_.size());
  out.reserve(touched.size());
  for (std::uint32_t a : touched) {
    out.push_back(Neighbor{a, clamp_similarity(scores[a])});
  }
  auto before = [this](const Neighbor &a, const Neighbor &b) {
    return ranks_before(a, b);
  };
  if (out.size() > want) {
    std::nth_element(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(want),
                     out.end(), before);
    out.resize(want);
  }
  std::sort(out.begin(), out.end(), before);
  if (out.size() < want) {
    for (std::uint32_t a : lex_order_) {
      if (out.size() == want) break;
      if (scores[a] == 0.0) out.push_back(Neighbor{a, 0.0});
    }
  }
  for (std::uint32_t a : touched) scores[a] = 0.0;
  return out;
}

std::vector<Neighbor> AliasIndex::nearest_lsh(const SparseVector &query,
                                              KParam k) const {
  std::vector<Neighbor> out;
  if (query.empty() || vectors_.empty()) return out;
  if (buckets_.empty()) return nearest_exact(query, k);
  std::vector<std::uint32_t> probes{0};
  for (std::uint32_t i = 0; i < lsh_.bits && lsh_.probe_radius >= 1; ++i) {
    probes.push_back(std::uint32_t{1} << i);
    for (std::uint32_t j = i + 1; j < lsh_.bits && lsh_.probe_radius >= 2;
         ++j) {
      probes.push_back((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
    }
  }
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t t = 0; t < lsh_.tables; ++t) {
    const std::uint32_t sig = signature(query, t);
    for (std::uint32_t mask : probes) {
      auto it = buckets_[t].find(sig ^ mask);
      if (it == buckets_[t].end()) continue;
      candidates.insert(candidates.end(), it->second.begin(), it->second.end());
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  out.reserve(candidates.size());
  for (std::uint32_t a : candidates) {
    out.push_back(Neighbor{a, clamp_similarity(dot(query, vectors_[a]))});
  }
  auto before = [this](const Neighbor &a, const Neighbor &b) {
    return ranks_before(a, b);
  };
  if (out.size() > k.value()) {
    std::nth_element(out.begin(),
                     out.begin() + static_cast<std::ptrdiff_t>(k.value()),
                     out.end(), before);
    out.resize(k.value());
  }
  std::sort(out.begin(), out.end(), before);
  return out;
}

void AliasIndex::write(std::ostream &out) const {
  Writer w(out);
  w.bytes(kMagic, sizeof(kMagic));
  w.uint<std::uint16_t>(kFormatVersion);
  w.uint<std::uint8_t>(static_cast<std::uint8_t>(backend_));

  w.uint<std::uint64_t>(vectorizer_.n_training_docs());
  w.uint<std::uint32_t>(vectorizer_.min_df());
  w.uint<std::uint32_t>(static_cast<std::uint32_t>(vectorizer_.size()));
  for (const auto &entry : vectorizer_.vocabulary()) {
    for (char32_t ch : unpack_gram(entry.gram)) {
      w.uint<std::uint32_t>(static_cast<std::uint32_t>(ch));
    }
    w.uint<std::uint32_t>(entry.df);
  }

  w.uint<std::uint32_t>(static_cast<std::uint32_t>(aliases_.size()));
  for (const AliasTable::Entry &entry : aliases_.entries()) {
    w.str(entry.surface);
    w.uint<std::uint32_t>(static_cast<std::uint32_t>(entry.concept_ids.size()));
    for (const std::string &id : entry.concept_ids) w.str(id);
  }

  for (const SparseVector &v : vectors_) {
    w.uint<std::uint32_t>(static_cast<std::uint32_t>(v.entries.size()));
    for (const SparseEntry &e : v.entries) {
      w.uint<std::uint32_t>(e.index);
      w.f64(e.weight);
    }
  }

  w.uint<std::uint32_t>(lsh_.tables);
  w.uint<std::uint32_t>(lsh_.bits);
  w.uint<std::uint32_t>(lsh_.probe_radius);
  w.uint<std::uint64_t>(lsh_.seed);
}

void AliasIndex::save(const std::string &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  write(out);
  out.flush();
  if (!out) throw DataError("error writing '" + path + "'");
}

AliasIndex AliasIndex::read(std::istream &in) {
  Reader r(in);
  char magic[4];
  r.bytes(magic, sizeof(magic));
  if (std::memcmp(magic, kMagic, sizeof(magic)) != 0) {
    throw DataError("not an alias index (bad magic bytes)");
  }
  const auto version = r.uint<std::uint16_t>();
  if (version != kFormatVersion) {
    throw DataError("unsupported index format version " +
                    std::to_string(version) + " (expected " +
                    std::to_string(kFormatVersion) + ")");
  }
  const auto backend = r.uint<std::uint8_t>();
  if (backend > static_cast<std::uint8_t>(Backend::kLsh)) {
    throw DataError("unknown backend tag " + std::to_string(backend));
  }

  AliasIndex index;
  index.backend_ = static_cast<Backend>(backend);
  const auto n_docs = r.uint<std::uint64_t>();
  const auto min_df = r.uint<std::uint32_t>();
  const auto vocab_size = r.uint<std::uint32_t>();
  std::vector<std::pair<Gram, std::uint32_t>> grams;
  grams.reserve(vocab_size);
  for (std::uint32_t i = 0; i < vocab_size; ++i) {
    const auto a = r.uint<std::uint32_t>();
    const auto b = r.uint<std::uint32_t>();
    const auto c = r.uint<std::uint32_t>();
    if (a > 0x10FFFF || b > 0x10FFFF || c > 0x10FFFF) {
      throw DataError("invalid code point in vocabulary");
    }
    grams.emplace_back(pack_gram(a, b, c), r.uint<std::uint32_t>());
  }
  index.vectorizer_ = NgramVectorizer::from_counts(std::move(grams), n_docs, min_df);

  const auto n_aliases = r.uint<std::uint32_t>();
  for (std::uint32_t i = 0; i < n_aliases; ++i) {
    const std::string surface = r.str();
    const auto n_concepts = r.uint<std::uint32_t>();
    if (n_concepts == 0) throw DataError("alias without concepts");
    for (std::uint32_t j = 0; j < n_concepts; ++j) {
      index.aliases_.add(surface, r.str());
    }
  }
  if (index.aliases_.size() != n_aliases) {
    throw DataError("index contains duplicate aliases");
  }

  index.vectors_.resize(n_aliases);
  for (SparseVector &v : index.vectors_) {
    const auto nnz = r.uint<std::uint32_t>();
    if (nnz > vocab_size) throw DataError("vector longer than vocabulary");
    v.entries.resize(nnz);
    for (std::uint32_t j = 0; j < nnz; ++j) {
      v.entries[j].index = r.uint<std::uint32_t>();
      v.entries[j].weight = r.f64();
      if (v.entries[j].index >= vocab_size ||
          (j > 0 && v.entries[j].index <= v.entries[j - 1].index)) {
        throw DataError("vector indices out of order or out of range");
      }
    }
  }

  index.lsh_.tables = r.uint<std::uint32_t>();
  index.lsh_.bits = r.uint<std::uint32_t>();
  index.lsh_.probe_radius = r.uint<std::uint32_t>();
  index.lsh_.seed = r.uint<std::uint64_t>();
  if (!r.at_end()) throw DataError("trailing bytes after index data");

  index.build_postings();
  if (index.backend_ == Backend::kLsh) {
    try {
      validate_lsh(index.lsh_);
    } catch (const InvalidArgument &e) {
      throw DataError(e.what());
    }
    index.build_lsh();
  }
  return index;
}

AliasIndex AliasIndex::load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open index '" + path + "'");
  try {
    return read(in);
  } catch (const DataError &e) {
    throw DataError("'" + path + "': " + e.what());
  }
}

std::vector<std::string> alias_corpus(const KnowledgeBase &kb) {
  std::vector<std::string> corpus;
  corpus.reserve(kb.alias_table().size());
  for (const auto &entry : kb.alias_table().entries()) {
    corpus.push_back(entry.surface);
  }
  return corpus;
}

AliasIndex build_index(const KnowledgeBase &kb, NgramVectorizer vectorizer,
                       Backend backend, const LshParams &lsh) {
  return AliasIndex::build(kb.alias_table(), std::move(vectorizer), backend,
                           lsh);
}

std::vector<std::pair<std::string, double>> nearest_aliases(
    const AliasIndex &index, const SparseVector &query, KParam k) {
  std::vector<std::pair<std::string, double>> out;
  for (const Neighbor &n : index.nearest(query, k)) {
    out.emplace_back(index.alias(n.alias), n.similarity);
  }
  return out;
}

}  // namespace bioling
