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


#include "bioling/synthetic.h"

#include <algorithm>
#include <cctype>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "bioling/error.h"
#include "bioling/rng.h"

namespace bioling {

namespace {

constexpr std::string_view kOnsets[] = {
    "b",  "c",  "d",  "f",  "g",  "k",  "l",  "m",  "n",  "p",  "r",  "s",
    "t",  "v",  "z",  "br", "cr", "dr", "gl", "pr", "st", "tr", "ch", "ph",
    "th", "fl", "gr", "sp"};
constexpr std::string_view kVowels[] = {"a", "e", "i", "o", "u",
                                        "y", "ae", "io", "ou"};
constexpr std::string_view kCodas[] = {"", "", "", "n", "r", "s",
                                       "l", "x", "m", "t"};
constexpr std::string_view kEndings[] = {"in",  "ase", "ol",   "ide",
                                         "oma", "itis", "osis", "gen"};
constexpr std::string_view kHeads[] = {
    "protein",  "receptor",    "kinase",      "factor",   "syndrome",
    "disease",  "cell",        "antigen",     "gene",     "enzyme",
    "hormone",  "inhibitor",   "channel",     "carcinoma", "deficiency",
    "infection", "transporter", "ligand",     "domain",   "complex"};
constexpr std::string_view kModifiers[] = {
    "acute",   "chronic", "human",  "mitochondrial", "nuclear", "soluble",
    "membrane", "hepatic", "renal", "cardiac",       "neural",  "growth",
    "heat shock", "serum", "congenital", "vascular"};
constexpr std::string_view kSuffixes[] = {"alpha", "beta", "gamma", "delta",
                                          "1",     "2",    "3",     "type 1",
                                          "type 2", "A",   "B"};
constexpr std::string_view kGeneric[] = {
    "cancer",     "tumor",       "inflammation", "pain",        "fever",
    "infection",  "fibrosis",    "apoptosis",    "necrosis",    "edema",
    "anemia",     "hypoxia",     "lesion",       "obesity",     "sepsis",
    "stroke",     "ischemia",    "neoplasm",     "toxicity",    "atrophy",
    "dysplasia",  "hemorrhage",  "hypertrophy",  "proliferation",
    "metastasis", "angiogenesis", "autophagy",   "oxidative stress",
    "insulin resistance", "immune response", "cell death", "cell growth",
    "gene expression", "signal transduction", "drug resistance",
    "kidney injury", "liver damage", "heart failure", "lung injury",
    "bone loss",  "weight loss", "muscle weakness", "seizure", "dementia",
    "asthma",     "arthritis",   "diabetes",     "leukemia",    "lymphoma",
    "melanoma",   "sarcoma",     "glioma",       "ulcer",       "colitis",
    "hepatitis",  "nephritis",   "dermatitis",   "myopathy",    "neuropathy",
    "cardiomyopathy", "thrombosis", "embolism",  "infarction",  "shock"};
constexpr std::string_view kTypes[] = {"T047", "T116", "T028", "T121",
                                       "T191", "T123", "T126", "T043"};
constexpr std::string_view kTissues[] = {
    "liver", "kidney", "brain", "lung", "heart", "skeletal muscle",
    "adipose tissue", "bone marrow", "intestinal epithelium", "retina"};

template <typename T, std::size_t N>
std::string_view pick(Rng &rng, const T (&items)[N]) {
  return items[rng.below(N)];
}

std::string make_stem(Rng &rng) {
  std::string s;
  const std::uint64_t syllables = 2 + rng.below(2);
  for (std::uint64_t i = 0; i < syllables; ++i) {
    s += pick(rng, kOnsets);
    s += pick(rng, kVowels);
    if (i + 1 == syllables) s += pick(rng, kCodas);
  }
  if (rng.chance(0.3)) s += pick(rng, kEndings);
  return s;
}

std::vector<std::string> words_of(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string join(const std::vector<std::string> &words, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += words[i];
  }
  return out;
}

std::string upper(std::string s) {
  for (char &ch : s) ch = static_cast<char>(std::toupper(ch));
  return s;
}

// Initials of the alphabetic words, e.g. "heat shock protein" -> "HSP".
std::string acronym(const std::string &name) {
  std::string out;
  for (const std::string &w : words_of(name)) {
    if (std::isalpha(static_cast<unsigned char>(w[0]))) out += w[0];
  }
  return upper(out);
}

std::string canonical_name(Rng &rng, const std::string &stem) {
  const std::uint64_t form = rng.below(20);
  if (form < 5) return stem;
  if (form < 12) return stem + " " + std::string(pick(rng, kHeads));
  if (form < 16) {
    return std::string(pick(rng, kModifiers)) + " " + stem + " " +
           std::string(pick(rng, kHeads));
  }
  return stem + " " + std::string(pick(rng, kHeads)) + " " +
         std::string(pick(rng, kSuffixes));
}

std::string variant(Rng &rng, const std::string &name) {
  const std::vector<std::string> w = words_of(name);
  switch (rng.below(8)) {
    case 0:
      if (w.size() >= 2) return acronym(name);
      return upper(w[0].substr(0, std::min<std::size_t>(4, w[0].size())));
    case 1:
      if (w.size() >= 2) {
        std::vector<std::string> rest(w.begin(), w.end() - 1);
        return w.back() + ", " + join(rest, " ");
      }
      return name + " protein";
    case 2:
      return name + "s";
    case 3:
      if (w.size() >= 2) {
        return w[0] + "-" + join(std::vector<std::string>(w.begin() + 1,
                                                          w.end()),
                                 " ");
      }
      return name + "-like";
    case 4: {
      const std::string symbol =
          upper(w[w.size() > 1 && w[0].size() < 4 ? 1 : 0].substr(0, 3));
      return symbol + std::to_string(1 + rng.below(9));
    }
    case 5:
      return name + (rng.chance(0.5) ? " gene" : " product");
    case 6:
      return "human " + name;
    default:
      return name + " " + std::string(pick(rng, kSuffixes));
  }
}

std::string perturb(Rng &rng, const std::string &alias) {
  const std::uint64_t kind = rng.below(20);
  if (kind < 8) return alias;
  std::vector<std::string> w = words_of(alias);
  if (kind < 13) {
    // One typo in the longest word: substitution, deletion or swap.
    std::size_t longest = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i].size() > w[longest].size()) longest = i;
    }
    std::string &word = w[longest];
    if (word.size() >= 4) {
      const std::size_t at = 1 + rng.below(word.size() - 2);
      switch (rng.below(3)) {
        case 0:
          word[at] = static_cast<char>('a' + rng.below(26));
          break;
        case 1:
          word.erase(at, 1);
          break;
        default:
          std::swap(word[at], word[at + 1]);
      }
    }
    return join(w, " ");
  }
  if (kind < 16 && w.size() >= 2) {
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(rng.below(w.size())));
    return join(w, " ");
  }
  std::string s = alias;
  if (rng.chance(0.5)) {
    for (char &ch : s) ch = ch == ' ' ? '-' : ch == '-' ? ' ' : ch;
  } else {
    s = upper(s);
  }
  return s;
}

}  // namespace

KnowledgeBase make_synthetic_kb(const SyntheticKbOptions &options) {
  if (options.n_concepts == 0 || options.n_aliases < options.n_concepts) {
    throw InvalidArgument("need at least one alias per concept");
  }
  Rng rng(options.seed);
  std::vector<Concept> concepts;
  std::unordered_set<std::string> taken;  // normalized aliases in use
  std::vector<std::unordered_set<std::string>> own(options.n_concepts);
  char id[16];
  while (concepts.size() < options.n_concepts) {
    std::string name = canonical_name(rng, make_stem(rng));
    if (!taken.insert(normalize_alias(name)).second) continue;
    Concept c;
    std::snprintf(id, sizeof(id), "C%07zu", concepts.size() + 1);
    c.concept_id = id;
    c.canonical_name = name;
    c.aliases.push_back(name);
    c.types.emplace_back(pick(rng, kTypes));
    if (rng.chance(0.5)) {
      c.definition = "A synthetic " + std::string(pick(rng, kHeads)) +
                     " concept for testing.";
    }
    own[concepts.size()].insert(normalize_alias(name));
    concepts.push_back(std::move(c));
  }
  auto attach = [&](std::size_t ci, const std::string &alias) {
    const std::string key = normalize_alias(alias);
    if (key.empty() || !own[ci].insert(key).second) return;
    concepts[ci].aliases.push_back(alias);
    taken.insert(key);
  };
  const std::size_t n_generic =
      std::min({options.n_generic, std::size(kGeneric),
                options.n_aliases - options.n_concepts});
  for (std::size_t g = 0; g < n_generic; ++g) {
    if (taken.count(normalize_alias(kGeneric[g]))) continue;
    const std::uint64_t owners = 2 + rng.below(4);
    for (std::uint64_t o = 0; o < owners; ++o) {
      attach(rng.below(concepts.size()), std::string(kGeneric[g]));
    }
  }
  std::size_t attempts = 0;
  const std::size_t max_attempts = 100 * options.n_aliases + 1000;
  while (taken.size() < options.n_aliases) {
    if (++attempts > max_attempts) {
      throw InvalidArgument("could not reach " +
                            std::to_string(options.n_aliases) + " aliases");
    }
    const std::size_t ci = rng.below(concepts.size());
    std::string alias = variant(rng, concepts[ci].canonical_name);
    // Past the target only shared aliases may be added; none are needed.
    attach(ci, alias);
  }
  return KnowledgeBase(std::move(concepts));
}

std::vector<GoldMention> make_synthetic_gold(const KnowledgeBase &kb,
                                             std::size_t n,
                                             std::uint64_t seed) {
  if (kb.concepts().empty()) throw InvalidArgument("empty knowledge base");
  Rng rng(seed);
  std::vector<GoldMention> out;
  out.reserve(n);
  while (out.size() < n) {
    const Concept &c = kb.concepts()[rng.below(kb.concepts().size())];
    const std::string &alias = c.aliases[rng.below(c.aliases.size())];
    std::string mention = perturb(rng, alias);
    if (normalize_alias(mention).empty()) continue;
    out.push_back(GoldMention{std::move(mention), c.concept_id});
  }
  return out;
}

std::vector<std::string> make_synthetic_abstracts(const KnowledgeBase &kb,
                                                  std::size_t n,
                                                  std::uint64_t seed,
                                                  std::size_t target_bytes) {
  if (kb.concepts().empty()) throw InvalidArgument("empty knowledge base");
  Rng rng(seed);
  auto name = [&]() -> const std::string & {
    return kb.concepts()[rng.below(kb.concepts().size())].canonical_name;
  };
  auto num = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::to_string(lo + rng.below(hi - lo + 1));
  };
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t d = 0; d < n; ++d) {
    std::string first = name();
    while (words_of(first).size() < 2) first = name();
    const std::string abbr = acronym(first);
    std::string text = first + " (" + abbr + ") is a key regulator of " +
                       name() + " in the " + std::string(pick(rng, kTissues)) +
                       ".";
    while (text.size() + 80 < target_bytes) {
      std::string s;
      switch (rng.below(11)) {
        case 0:
          s = "Here we examined the role of " + abbr + " in " +
              num(12, 480) + " patients with " +
              std::string(pick(rng, kGeneric)) + ".";
          break;
        case 1:
          s = "Expression of " + abbr + " was increased by " + num(5, 95) +
              "% compared with controls (p<0.05).";
          break;
        case 2:
          s = "These findings are consistent with previous reports [" +
              num(1, 40) + "].";
          break;
        case 3:
          s = "Previous work has linked " + name() + " to " +
              std::string(pick(rng, kGeneric)) + " (" +
              std::string(pick(rng, kOnsets)) + "ang et al., " +
              num(1990, 2019) + ").";
          s[s.find('(') + 1] = static_cast<char>(
              std::toupper(static_cast<unsigned char>(s[s.find('(') + 1])));
          break;
        case 4:
          s = "As shown in Fig. " + num(1, 6) + ", levels of " + name() +
              " were " + num(1, 9) + "." + num(0, 9) + " vs. " + num(1, 9) +
              "." + num(0, 9) + " ng/mL in treated mice.";
          break;
        case 5:
          s = "The " + name() + "-dependent pathway, e.g. " + name() +
              ", remains poorly understood.";
          break;
        case 6:
          s = "Our results suggest that " + name() + " modulates " + name() +
              " via " + name() + ".";
          break;
        case 7:
          s = "In contrast, inhibition of " + name() + " reduced " +
              std::string(pick(rng, kGeneric)) + " by approx. " + num(10, 60) +
              "% (n = " + num(6, 40) + ").";
          break;
        case 8:
          s = "Mice lacking " + name() + " developed " +
              std::string(pick(rng, kGeneric)) + " within " + num(2, 12) +
              " weeks [" + num(1, 20) + "," + num(21, 40) + "].";
          break;
        case 9:
          s = "Dr. Lee and colleagues reported a similar effect of " + name() +
              " on " + name() + ", i.e. a " + num(2, 5) + "-fold change.";
          break;
        default:
          s = "Levels of " + abbr + " correlated with " + name() +
              " activity (r = 0." + num(10, 95) + ").";
      }
      text += " " + s;
    }
    text += " Taken together, " + abbr +
            " may represent a therapeutic target for " +
            std::string(pick(rng, kGeneric)) + ".";
    out.push_back(std::move(text));
  }
  return out;
}

}  // namespace bioling
