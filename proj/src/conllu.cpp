// Copyright 2026 The Unseen Authors.
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

#include "unseen/conllu.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "parallel.h"
#include "unseen/error.hpp"
#include "unseen/translit.hpp"
#include "unseen/unicode.hpp"

namespace unseen::corpus {
namespace {

constexpr std::size_t kColumns = 10;

std::optional<int> parse_number(std::string_view text) {
  if (text.empty() || text.size() > 9 || text.front() == '-') {
    return std::nullopt;
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find('\t', start);
    if (pos == std::string_view::npos) break;
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  fields.push_back(line.substr(start));
  return fields;
}

std::string_view main_relation(std::string_view deprel) {
  return deprel.substr(0, deprel.find(':'));
}

struct SentenceBuilder {
  ConlluSentence sentence;
  std::size_t first_line = 0;
  std::vector<std::size_t> token_lines;
  std::vector<std::size_t> mwt_lines;
  std::vector<std::size_t> empty_lines;

  bool empty() const {
    return sentence.comments.empty() && sentence.tokens.empty() &&
           sentence.multiword_tokens.empty() && sentence.empty_nodes.empty();
  }
  bool started_body() const {
    return !sentence.tokens.empty() || !sentence.multiword_tokens.empty() ||
           !sentence.empty_nodes.empty();
  }
  void touch(std::size_t line) {
    if (first_line == 0) first_line = line;
  }

  void add_line(std::string_view line, std::size_t number) {
    touch(number);
    const std::vector<std::string_view> fields = split_tabs(line);
    if (fields.size() != kColumns) {
      throw ParseError("expected 10 tab-separated columns, got " +
                           std::to_string(fields.size()),
                       number);
    }
    for (std::size_t c = 0; c < kColumns; ++c) {
      if (fields[c].empty()) {
        throw ParseError("column " + std::to_string(c + 1) + " is empty",
                         number);
      }
    }

    const std::string_view id = fields[0];
    if (const std::size_t dash = id.find('-'); dash != std::string_view::npos) {
      const auto first = parse_number(id.substr(0, dash));
      const auto last = parse_number(id.substr(dash + 1));
      if (!first || !last || *first < 1) {
        throw ParseError("malformed multiword id '" + std::string(id) + "'",
                         number);
      }
      for (std::size_t c : {2u, 3u, 4u, 6u, 7u, 8u}) {
        if (fields[c] != "_") {
          throw ParseError("multiword token line must have '_' in column " +
                               std::to_string(c + 1),
                           number);
        }
      }
      sentence.multiword_tokens.push_back(
          {*first, *last, std::string(fields[1]), std::string(fields[5]),
           std::string(fields[9])});
      mwt_lines.push_back(number);
      return;
    }
    if (const std::size_t dot = id.find('.'); dot != std::string_view::npos) {
      const auto major = parse_number(id.substr(0, dot));
      const auto minor = parse_number(id.substr(dot + 1));
      if (!major || !minor || *minor < 1) {
        throw ParseError("malformed empty node id '" + std::string(id) + "'",
                         number);
      }
      sentence.empty_nodes.push_back(
          {*major, *minor, std::vector<std::string>(fields.begin(), fields.end())});
      empty_lines.push_back(number);
      return;
    }

    const auto word_id = parse_number(id);
    if (!word_id || *word_id < 1) {
      throw ParseError("malformed id '" + std::string(id) + "'", number);
    }
    const auto head = parse_number(fields[6]);
    if (!head) {
      throw ParseError("malformed head '" + std::string(fields[6]) + "'",
                       number);
    }
    const int expected = static_cast<int>(sentence.tokens.size()) + 1;
    if (*word_id != expected) {
      throw StructureError("expected word id " + std::to_string(expected) +
                               ", found " + std::to_string(*word_id),
                           number);
    }
    sentence.tokens.push_back({*word_id, std::string(fields[1]),
                               std::string(fields[2]), std::string(fields[3]),
                               std::string(fields[4]), std::string(fields[5]),
                               *head, std::string(fields[7]),
                               std::string(fields[8]), std::string(fields[9])});
    token_lines.push_back(number);
  }

  ConlluSentence finish(const ConlluOptions& options) {
    const int n = static_cast<int>(sentence.tokens.size());
    if (n == 0) throw StructureError("sentence has no words", first_line);

    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      if (sentence.tokens[i].head > n) {
        throw StructureError(
            "head " + std::to_string(sentence.tokens[i].head) +
                " is outside the sentence (" + std::to_string(n) + " words)",
            token_lines[i]);
      }
    }

    std::vector<std::size_t> order(sentence.multiword_tokens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return sentence.multiword_tokens[a].first <
             sentence.multiword_tokens[b].first;
    });
    std::vector<MultiwordToken> sorted;
    int previous_last = 0;
    for (std::size_t i : order) {
      const MultiwordToken& mwt = sentence.multiword_tokens[i];
      if (mwt.first >= mwt.last || mwt.last > n) {
        throw StructureError("multiword range " + std::to_string(mwt.first) +
                                 "-" + std::to_string(mwt.last) +
                                 " is not within the sentence",
                             mwt_lines[i]);
      }
      if (mwt.first <= previous_last) {
        throw StructureError("overlapping multiword ranges", mwt_lines[i]);
      }
      previous_last = mwt.last;
      sorted.push_back(mwt);
    }
    sentence.multiword_tokens = std::move(sorted);

    for (std::size_t i = 0; i < sentence.empty_nodes.size(); ++i) {
      if (sentence.empty_nodes[i].major > n) {
        throw StructureError("empty node after a word that does not exist",
                             empty_lines[i]);
      }
    }
    std::stable_sort(sentence.empty_nodes.begin(), sentence.empty_nodes.end(),
                     [](const EmptyNode& a, const EmptyNode& b) {
                       return a.major < b.major;
                     });

    if (options.strict) {
      int roots = 0;
      for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        const ConlluToken& token = sentence.tokens[i];
        const bool is_root_rel = main_relation(token.deprel) == "root";
        if ((token.head == 0) != is_root_rel) {
          throw StructureError("head 0 and deprel root must go together",
                               token_lines[i]);
        }
        roots += token.head == 0 ? 1 : 0;
      }
      if (roots != 1) {
        throw StructureError(
            "sentence has " + std::to_string(roots) + " roots, expected 1",
            first_line);
      }
    }
    return std::move(sentence);
  }
};

void require(bool condition, std::size_t index, const std::string& what) {
  if (!condition) {
    throw ContractError("sentence " + std::to_string(index) + ": " + what);
  }
}

bool valid_field(std::string_view field) {
  return !field.empty() && field.find_first_of("\t\n\r") == std::string_view::npos;
}

void check_sentence_at(const ConlluSentence& s, std::size_t index) {
  const int n = static_cast<int>(s.tokens.size());
  require(n > 0, index, "no words");
  for (const std::string& comment : s.comments) {
    require(comment.starts_with('#') &&
                comment.find_first_of("\n\r") == std::string::npos,
            index, "malformed comment line");
  }
  for (int i = 0; i < n; ++i) {
    const ConlluToken& t = s.tokens[i];
    require(t.id == i + 1, index, "word ids are not 1..n");
    require(t.head >= 0 && t.head <= n, index,
            "head out of range at word " + std::to_string(t.id));
    for (const std::string* f : {&t.form, &t.lemma, &t.upos, &t.xpos, &t.feats,
                                 &t.deprel, &t.deps, &t.misc}) {
      require(valid_field(*f), index,
              "empty or multi-line field at word " + std::to_string(t.id));
    }
  }
  int previous_last = 0;
  for (const MultiwordToken& m : s.multiword_tokens) {
    require(m.first > previous_last && m.first < m.last && m.last <= n, index,
            "multiword ranges must be ascending, disjoint and inside 1..n");
    require(valid_field(m.form) && valid_field(m.feats) && valid_field(m.misc),
            index, "empty or multi-line multiword field");
    previous_last = m.last;
  }
  int previous_major = 0;
  for (const EmptyNode& e : s.empty_nodes) {
    require(e.major >= previous_major && e.major <= n && e.minor >= 1, index,
            "empty nodes must be ordered and inside the sentence");
    require(e.fields.size() == kColumns &&
                std::all_of(e.fields.begin(), e.fields.end(),
                            [](const std::string& f) { return valid_field(f); }),
            index, "empty node needs ten non-empty fields");
    previous_major = e.major;
  }
}

void write_token(std::ostream& out, const ConlluToken& t) {
  out << t.id << '\t' << t.form << '\t' << t.lemma << '\t' << t.upos << '\t'
      << t.xpos << '\t' << t.feats << '\t' << t.head << '\t' << t.deprel
      << '\t' << t.deps << '\t' << t.misc << '\n';
}

void write_empty_node(std::ostream& out, const EmptyNode& e) {
  for (std::size_t c = 0; c < e.fields.size(); ++c) {
    if (c != 0) out << '\t';
    out << e.fields[c];
  }
  out << '\n';
}

}  // namespace

std::vector<ConlluSentence> parse_conllu(std::istream& in,
                                         const ConlluOptions& options) {
  std::vector<ConlluSentence> sentences;
  SentenceBuilder builder;
  std::string line;
  std::size_t number = 0;

  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!unicode::is_valid_utf8(line)) {
      throw EncodingError("line " + std::to_string(number) +
                          ": invalid UTF-8");
    }
    if (line.empty()) {
      if (!builder.empty()) sentences.push_back(builder.finish(options));
      builder = SentenceBuilder();
      continue;
    }
    if (line.front() == '#') {
      if (builder.started_body()) {
        throw ParseError("comment line inside a sentence", number);
      }
      builder.touch(number);
      builder.sentence.comments.push_back(line);
      continue;
    }
    builder.add_line(line, number);
  }
  if (!builder.empty()) sentences.push_back(builder.finish(options));
  return sentences;
}

std::vector<ConlluSentence> parse_conllu(std::string_view text,
                                         const ConlluOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_conllu(in, options);
}

void check_sentence(const ConlluSentence& sentence) {
  check_sentence_at(sentence, 1);
}

void write_conllu(std::ostream& out, std::span<const ConlluSentence> sentences) {
  for (std::size_t index = 0; index < sentences.size(); ++index) {
    const ConlluSentence& s = sentences[index];
    check_sentence_at(s, index + 1);
    for (const std::string& comment : s.comments) out << comment << '\n';

    auto mwt = s.multiword_tokens.begin();
    auto empty = s.empty_nodes.begin();
    auto flush_empty = [&](int major) {
      for (; empty != s.empty_nodes.end() && empty->major == major; ++empty) {
        write_empty_node(out, *empty);
      }
    };
    flush_empty(0);
    for (const ConlluToken& token : s.tokens) {
      if (mwt != s.multiword_tokens.end() && mwt->first == token.id) {
        out << mwt->first << '-' << mwt->last << '\t' << mwt->form
            << "\t_\t_\t_\t" << mwt->feats << "\t_\t_\t_\t" << mwt->misc
            << '\n';
        ++mwt;
      }
      write_token(out, token);
      flush_empty(token.id);
    }
    out << '\n';
  }
}

std::string write_conllu(std::span<const ConlluSentence> sentences) {
  std::ostringstream out;
  write_conllu(out, sentences);
  return out.str();
}

std::vector<ConlluSentence> transliterate_conllu(
    std::span<const ConlluSentence> sentences,
    const translit::Transliterator& transliterator,
    const ConlluTranslitOptions& options) {
  // A field that transliterates to nothing (e.g. a lone tatweel) keeps its
  // original text: CoNLL-U has no empty columns.
  auto rewrite = [&](std::string& field) {
    std::string result = transliterator(field);
    if (!result.empty()) field = std::move(result);
  };
  std::vector<ConlluSentence> out(sentences.begin(), sentences.end());
  internal::parallel_for(out.size(), options.jobs, [&](std::size_t i) {
    ConlluSentence& s = out[i];
    for (ConlluToken& token : s.tokens) {
      rewrite(token.form);
      if (options.lemmas) rewrite(token.lemma);
    }
    for (MultiwordToken& mwt : s.multiword_tokens) rewrite(mwt.form);
    for (EmptyNode& node : s.empty_nodes) {
      rewrite(node.fields[1]);
      if (options.lemmas) rewrite(node.fields[2]);
    }
  });
  return out;
}

}  // namespace unseen::corpus
